#pragma once

#include <span>

#include "doco/domain.hpp"
#include "doco/losses.hpp"

namespace doco {

struct SolveOptions {
    double tol = 1e-8;          // successive-iterate distance stop
    int max_iterations = 10000;
};

struct SolveResult {
    Vec x;
    int iterations = 0;
    bool converged = false;
    // Upper bound on F(x) - min F. Zero (up to roundoff) when the active-set
    // certificate closed; otherwise the strong-convexity estimate mu*tol^2/2.
    double gap_estimate = 0.0;
};

// Minimize a sum of hinge+L2 and quadratic losses over a centered ball.
//
// Projected subgradient descent with step 2/(mu*(k+1)), mu the total
// strong-convexity modulus, with iterate averaging. After each step the
// current hinge activity pattern A yields the closed-form ball minimizer of
// the smooth piece F_A; since F_A under-estimates F everywhere and matches it
// where the pattern is consistent, F(c) - F_A(c) certifies the optimality gap
// of the candidate c exactly. The best certified candidate is returned, which
// on generic instances closes the gap to roundoff long before the iteration
// cap.
SolveResult inner_minimize(std::span<const LossInstance> losses, const BallDomain& domain,
                           const SolveOptions& options = {});

// As above but raises SolverError when no certificate within tolerance was
// reached.
Vec inner_minimize_strict(std::span<const LossInstance> losses, const BallDomain& domain,
                          const SolveOptions& options = {});

}  // namespace doco
