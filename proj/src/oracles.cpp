#include "doco/oracles.hpp"

#include <cmath>
#include <fstream>
#include <limits>

namespace doco {

Vec offline_optimum(std::span<const LossInstance> losses, const BallDomain& domain, double tol) {
    if (losses.empty()) throw ConfigError("offline_optimum: empty loss list");
    SolveOptions options;
    options.tol = tol;
    SolveResult r = inner_minimize(losses, domain, options);
    double objective = 0.0;
    for (const LossInstance& loss : losses) objective += loss_value(loss, r.x);
    if (r.gap_estimate > 1e-8 * (1.0 + std::abs(objective)))
        throw SolverError(r.gap_estimate, r.iterations,
                          "offline_optimum: certified gap " + std::to_string(r.gap_estimate) +
                              " above 1e-8 * (1 + |objective|)");
    return std::move(r.x);
}

IdealDecisionSequence ideal_sequence(std::span<const LossInstance> losses, const BallDomain& domain,
                                     double tol) {
    if (losses.empty()) throw ConfigError("ideal_sequence: empty loss list");
    IdealDecisionSequence seq;
    seq.decisions.reserve(losses.size());
    SolveOptions options;
    options.tol = tol;
    for (std::size_t t = 1; t <= losses.size(); ++t) {
        SolveResult r = inner_minimize(losses.subspan(0, t), domain, options);
        if (!r.converged)
            throw SolverError(r.gap_estimate, r.iterations,
                              "ideal_sequence: prefix " + std::to_string(t) + " did not converge");
        seq.decisions.push_back(std::move(r.x));
    }
    for (std::size_t t = 0; t < losses.size(); ++t)
        seq.cumulative_at_ideal += loss_value(losses[t], seq.decisions[t]);
    const Vec& optimum = seq.decisions.back();
    for (const LossInstance& loss : losses) seq.cumulative_at_optimum += loss_value(loss, optimum);
    // leader sequence has non-positive regret
    double scale = 1.0 + std::abs(seq.cumulative_at_optimum);
    if (seq.cumulative_at_ideal - seq.cumulative_at_optimum > 1e-7 * scale)
        throw std::logic_error("ideal_sequence: leader regret is positive beyond tolerance");
    return seq;
}

std::vector<Vec> ideal_surrogate_sequence(std::span<const Vec> zs, double lambda,
                                          const BallDomain& domain) {
    std::vector<Vec> out;
    out.reserve(zs.size());
    Vec running = domain.origin();
    for (std::size_t t = 1; t <= zs.size(); ++t) {
        axpy(1.0, zs[t - 1], running);
        out.push_back(project_ball(scaled(running, -1.0 / (lambda * static_cast<double>(t))),
                                   domain.radius));
    }
    return out;
}

void RegretReport::to_csv(std::ostream& out) const {
    out << "round,regret,bound_thm1,bound_thm2\n";
    out.precision(17);
    for (std::size_t t = 1; t <= regret.size(); ++t)
        out << t << ',' << regret[t - 1] << ',' << bound_ftdl[t - 1] << ',' << bound_aftdl[t - 1]
            << '\n';
}

void RegretReport::save_csv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    to_csv(out);
}

RegretReport regret_curve(const RunTrace& trace, std::span<const LossInstance> losses,
                          const Vec& optimum, double G, double lambda, int d, double R) {
    if (losses.size() != trace.inst_loss.size())
        throw DimensionError("regret_curve: trace and loss sequence lengths differ");
    RegretReport report;
    report.optimum = optimum;
    report.regret.reserve(losses.size());
    report.bound_ftdl.reserve(losses.size());
    report.bound_aftdl.reserve(losses.size());
    double cum = 0.0;
    for (std::size_t t = 1; t <= losses.size(); ++t) {
        cum += trace.inst_loss[t - 1] - loss_value(losses[t - 1], optimum);
        report.regret.push_back(cum);
        double log_t = std::log(static_cast<double>(t));
        report.bound_ftdl.push_back(2.0 * d * G * G * (1.0 + log_t) / lambda);
        double lip = G + 2.0 * lambda * R;
        report.bound_aftdl.push_back(2.0 * d * lip * lip * (log_t + 1.0) / lambda);
    }
    return report;
}

double test_accuracy(const Vec& x, std::span<const Example> test) {
    if (test.empty()) throw ConfigError("test_accuracy: empty test set");
    long correct = 0;
    for (const Example& ex : test) {
        double score = ex.features.dot(x);
        double predicted = score >= 0.0 ? 1.0 : -1.0;  // sign(0) counts as +1
        if (predicted == ex.label) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(test.size());
}

Vec grid_minimize(const std::function<double(const Vec&)>& objective, const BallDomain& domain,
                  double step) {
    if (domain.dimension < 1 || domain.dimension > 2)
        throw ConfigError("grid_minimize: only n <= 2 supported");
    double R = domain.radius;
    Vec best;
    double best_value = std::numeric_limits<double>::infinity();
    if (domain.dimension == 1) {
        for (double x = -R; x <= R + step / 2; x += step) {
            double cx = std::min(std::max(x, -R), R);
            double v = objective({cx});
            if (v < best_value) {
                best_value = v;
                best = {cx};
            }
        }
    } else {
        for (double x = -R; x <= R + step / 2; x += step) {
            for (double y = -R; y <= R + step / 2; y += step) {
                if (x * x + y * y > R * R) continue;
                double v = objective({x, y});
                if (v < best_value) {
                    best_value = v;
                    best = {x, y};
                }
            }
        }
    }
    return best;
}

}  // namespace doco
