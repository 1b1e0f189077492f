#include "doco/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "doco/errors.hpp"

namespace doco {

namespace {

struct Problem {
    const BallDomain* domain;
    std::vector<const HingeL2Loss*> hinges;
    Vec quad_pull;      // sum of lambda_q * anchor_q over quadratic losses
    double mu = 0.0;    // total strong-convexity modulus
    double constant = 0.0;  // x-independent part of the objective

    int n() const { return domain->dimension; }

    std::vector<char> pattern(const Vec& x) const {
        std::vector<char> act(hinges.size());
        for (std::size_t i = 0; i < hinges.size(); ++i) act[i] = hinges[i]->hinge_margin(x) > 0.0;
        return act;
    }

    Vec pull(const std::vector<char>& act) const {
        Vec g = quad_pull;
        for (std::size_t i = 0; i < hinges.size(); ++i)
            if (act[i]) hinges[i]->features.add_scaled(g, hinges[i]->label);
        return g;
    }

    double value(const Vec& x) const {
        double hinge_sum = 0.0;
        for (const HingeL2Loss* h : hinges) hinge_sum += std::max(0.0, h->hinge_margin(x));
        double sq = 0.0;
        for (double v : x) sq += v * v;
        return hinge_sum + 0.5 * mu * sq - dot(quad_pull, x) + constant;
    }

    // F_A(c) <= F everywhere and F_A is minimized over the ball at
    // c = project(pull(A)/mu), so F(c) - F_A(c) bounds the optimality gap of c.
    double certified_gap(const Vec& c, const std::vector<char>& act) const {
        double gap = 0.0;
        for (std::size_t i = 0; i < hinges.size(); ++i) {
            double m = hinges[i]->hinge_margin(c);
            if (act[i]) {
                if (m < 0.0) gap -= m;
            } else {
                if (m > 0.0) gap += m;
            }
        }
        return gap;
    }
};

Problem build_problem(std::span<const LossInstance> losses, const BallDomain& domain) {
    Problem p;
    p.domain = &domain;
    p.quad_pull = zeros(domain.dimension);
    for (const LossInstance& loss : losses) {
        if (loss_dimension(loss) != domain.dimension)
            throw DimensionError("inner_minimize: loss dimension does not match domain");
        if (const auto* h = std::get_if<HingeL2Loss>(&loss)) {
            p.hinges.push_back(h);
            p.mu += h->lambda;
        } else {
            const auto& q = std::get<QuadraticLoss>(loss);
            axpy(q.lambda, q.anchor, p.quad_pull);
            p.mu += q.lambda;
            double anchor_sq = 0.0;
            for (double v : q.anchor) anchor_sq += v * v;
            p.constant += 0.5 * q.lambda * anchor_sq + q.offset;
        }
    }
    return p;
}

}  // namespace

SolveResult inner_minimize(std::span<const LossInstance> losses, const BallDomain& domain,
                           const SolveOptions& options) {
    domain.validate();
    if (losses.empty()) return {domain.origin(), 0, true, 0.0};

    Problem p = build_problem(losses, domain);

    if (p.hinges.empty()) {
        Vec c = project_ball(scaled(p.quad_pull, 1.0 / p.mu), domain.radius);
        return {std::move(c), 0, true, 0.0};
    }

    Vec best = domain.origin();
    double best_gap = std::numeric_limits<double>::infinity();
    double best_value = std::numeric_limits<double>::infinity();

    auto gap_stop = [&]() {
        return std::max(0.5 * p.mu * options.tol * options.tol,
                        1e-13 * (1.0 + std::abs(best_value)));
    };

    // Fixed-point chase over hinge activity patterns starting from a point.
    auto consider = [&](const Vec& start) {
        std::vector<char> act = p.pattern(start);
        for (int step = 0; step < 6; ++step) {
            Vec c = project_ball(scaled(p.pull(act), 1.0 / p.mu), domain.radius);
            double gap = p.certified_gap(c, act);
            if (gap < best_gap) {
                best_gap = gap;
                best_value = p.value(c);
                best = std::move(c);
                if (best_gap <= gap_stop()) return true;
                std::vector<char> next = p.pattern(best);
                if (next == act) break;
                act = std::move(next);
            } else {
                std::vector<char> next = p.pattern(c);
                if (next == act) break;
                act = std::move(next);
            }
        }
        return best_gap <= gap_stop();
    };

    Vec x = domain.origin();
    Vec xbar = x;
    bool certified = consider(x);
    bool converged = certified;
    int k = 0;
    while (!converged && k < options.max_iterations) {
        ++k;
        // projected subgradient step 2/(mu*(k+1))
        std::vector<char> act = p.pattern(x);
        Vec g = p.pull(act);
        double step = 2.0 / (p.mu * (k + 1));
        Vec x_new(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) x_new[i] = x[i] - step * (p.mu * x[i] - g[i]);
        x_new = project_ball(std::move(x_new), domain.radius);
        double dist = dist2(x_new, x);
        x = std::move(x_new);
        // weighted iterate average, weight k
        double w = 2.0 / (k + 1);
        for (std::size_t i = 0; i < x.size(); ++i) xbar[i] = (1.0 - w) * xbar[i] + w * x[i];

        certified = consider(x);
        if (!certified && k % 8 == 0) certified = consider(xbar);
        if (certified) {
            converged = true;
            break;
        }
        if (dist <= options.tol) {
            converged = true;
            best_gap = std::min(best_gap, 0.5 * p.mu * options.tol * options.tol);
            break;
        }
    }
    return {std::move(best), k, converged, best_gap};
}

Vec inner_minimize_strict(std::span<const LossInstance> losses, const BallDomain& domain,
                          const SolveOptions& options) {
    SolveResult r = inner_minimize(losses, domain, options);
    if (!r.converged)
        throw SolverError(r.gap_estimate, r.iterations,
                          "inner_minimize did not certify convergence; final gap estimate " +
                              std::to_string(r.gap_estimate));
    return std::move(r.x);
}

}  // namespace doco
