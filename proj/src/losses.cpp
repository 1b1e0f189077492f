#include "doco/losses.hpp"

namespace doco {

double HingeL2Loss::hinge_margin(const Vec& x) const {
    return 1.0 - label * features.dot(x);
}

double HingeL2Loss::value(const Vec& x) const {
    if (static_cast<int>(x.size()) != dimension)
        throw DimensionError("HingeL2Loss::value: x has wrong dimension");
    double m = hinge_margin(x);
    double sq = 0.0;
    for (double v : x) sq += v * v;
    return (m > 0.0 ? m : 0.0) + 0.5 * lambda * sq;
}

Vec HingeL2Loss::gradient(const Vec& x) const {
    if (static_cast<int>(x.size()) != dimension)
        throw DimensionError("HingeL2Loss::gradient: x has wrong dimension");
    Vec g = scaled(x, lambda);
    if (hinge_margin(x) > 0.0) features.add_scaled(g, -label);
    return g;
}

double QuadraticLoss::value(const Vec& x) const {
    check_same_dim(x, anchor, "QuadraticLoss::value");
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double d = x[i] - anchor[i];
        s += d * d;
    }
    return 0.5 * lambda * s + offset;
}

Vec QuadraticLoss::gradient(const Vec& x) const {
    check_same_dim(x, anchor, "QuadraticLoss::gradient");
    Vec g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) g[i] = lambda * (x[i] - anchor[i]);
    return g;
}

double loss_value(const LossInstance& loss, const Vec& x) {
    return std::visit([&x](const auto& l) { return l.value(x); }, loss);
}

Vec loss_gradient(const LossInstance& loss, const Vec& x) {
    return std::visit([&x](const auto& l) { return l.gradient(x); }, loss);
}

double loss_strong_convexity(const LossInstance& loss) {
    return std::visit([](const auto& l) { return l.lambda; }, loss);
}

int loss_dimension(const LossInstance& loss) {
    if (const auto* h = std::get_if<HingeL2Loss>(&loss)) return h->dimension;
    return static_cast<int>(std::get<QuadraticLoss>(loss).anchor.size());
}

Vec surrogate_vector(const Vec& grad, const Vec& x, double lambda) {
    check_same_dim(grad, x, "surrogate_vector");
    Vec z = grad;
    axpy(-lambda, x, z);
    return z;
}

double surrogate_value(const Vec& z, double lambda, const Vec& x) {
    check_same_dim(z, x, "surrogate_value");
    double sq = 0.0;
    for (double v : x) sq += v * v;
    return dot(z, x) + 0.5 * lambda * sq;
}

Vec surrogate_gradient(const Vec& z, double lambda, const Vec& x) {
    check_same_dim(z, x, "surrogate_gradient");
    Vec g = z;
    axpy(lambda, x, g);
    return g;
}

}  // namespace doco
