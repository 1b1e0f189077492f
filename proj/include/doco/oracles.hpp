#pragma once

#include <functional>
#include <iosfwd>
#include <span>

#include "doco/dataset.hpp"
#include "doco/simulation.hpp"
#include "doco/solver.hpp"

namespace doco {

// Prefix leaders: decisions[t-1] minimizes the sum of the first t losses over
// the domain. Construction asserts the non-positive-regret property of the
// leader sequence.
struct IdealDecisionSequence {
    std::vector<Vec> decisions;
    // sum over t of f_t(ideal_t), and the minimum of the full sum, for audits
    double cumulative_at_ideal = 0.0;
    double cumulative_at_optimum = 0.0;
};

// Minimizer of the full loss sum over the domain, certified by the inner
// solver (closed form when the sum is purely quadratic). Raises SolverError
// when the optimality gap cannot be certified below 1e-8 * (1 + |objective|).
Vec offline_optimum(std::span<const LossInstance> losses, const BallDomain& domain, double tol = 1e-9);

IdealDecisionSequence ideal_sequence(std::span<const LossInstance> losses, const BallDomain& domain,
                                     double tol = 1e-9);

// Prefix leaders of the surrogate losses <z_s, x> + (lambda/2)||x||^2:
// closed form project(-Z_t / (t * lambda)).
std::vector<Vec> ideal_surrogate_sequence(std::span<const Vec> zs, double lambda,
                                          const BallDomain& domain);

struct RegretReport {
    Vec optimum;
    std::vector<double> regret;      // cumulative R_t
    std::vector<double> bound_ftdl;  // 2 d G^2 (1 + ln t) / lambda
    std::vector<double> bound_aftdl; // 2 d (G + 2 lambda R)^2 (ln t + 1) / lambda
    double final_regret() const { return regret.empty() ? 0.0 : regret.back(); }
    // CSV "round,regret,bound_thm1,bound_thm2"
    void to_csv(std::ostream& out) const;
    void save_csv(const std::string& path) const;
};

// Cumulative regret of a trace against a fixed comparator, with the two
// theoretical bound curves evaluated per round.
RegretReport regret_curve(const RunTrace& trace, std::span<const LossInstance> losses,
                          const Vec& optimum, double G, double lambda, int d, double R);

// Fraction of test examples with sign(<w, x>) equal to the label; sign(0)
// counts as +1.
double test_accuracy(const Vec& x, std::span<const Example> test);

// Dense-grid brute force over the ball, n <= 2 only; independent reference
// for solver tests.
Vec grid_minimize(const std::function<double(const Vec&)>& objective, const BallDomain& domain,
                  double step);

}  // namespace doco
