#pragma once

#include <variant>

#include "doco/linalg.hpp"

namespace doco {

// Hinge loss with L2 regularization over a labeled example:
//   f(x) = max{1 - y * <w, x>, 0} + (lambda/2) * ||x||^2
// lambda-strongly convex. At the hinge kink (margin exactly 1) the chosen
// subgradient drops the hinge term, so the gradient there is lambda * x.
struct HingeL2Loss {
    SparseVec features;  // w
    double label = 1.0;  // y in {-1,+1}
    double lambda = 0.01;
    int dimension = 0;

    double value(const Vec& x) const;
    Vec gradient(const Vec& x) const;
    // 1 - y * <w, x>; the hinge is active when this is positive.
    double hinge_margin(const Vec& x) const;
};

// (lambda/2) * ||x - anchor||^2 + offset; minimizer at the anchor.
struct QuadraticLoss {
    Vec anchor;
    double lambda = 1.0;
    double offset = 0.0;

    double value(const Vec& x) const;
    Vec gradient(const Vec& x) const;
};

using LossInstance = std::variant<HingeL2Loss, QuadraticLoss>;

double loss_value(const LossInstance& loss, const Vec& x);
Vec loss_gradient(const LossInstance& loss, const Vec& x);
// Strong-convexity modulus of the instance.
double loss_strong_convexity(const LossInstance& loss);
int loss_dimension(const LossInstance& loss);

// Surrogate feedback vector z = grad - lambda * x. Under the gradient bound G
// over a ball of radius R, ||z|| <= G + lambda * R.
Vec surrogate_vector(const Vec& grad, const Vec& x, double lambda);

// Value of the quadratic surrogate f~(x) = <z, x> + (lambda/2) * ||x||^2.
double surrogate_value(const Vec& z, double lambda, const Vec& x);

// Gradient of the surrogate: z + lambda * x.
Vec surrogate_gradient(const Vec& z, double lambda, const Vec& x);

}  // namespace doco
