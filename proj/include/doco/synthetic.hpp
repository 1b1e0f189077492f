#pragma once

#include <cstdint>
#include <vector>

#include "doco/losses.hpp"
#include "doco/rng.hpp"

namespace doco {

// Quadratic losses (lambda/2)||x - a_t||^2 with anchors drawn uniformly from
// the ball of the given radius (SplitMix64 stream SyntheticLosses).
std::vector<LossInstance> make_quadratic_sequence(int n, int horizon, double anchor_radius,
                                                  double lambda, std::uint64_t seed);

// Hinge+L2 losses from a planted linear model: feature vectors have uniform
// random direction and norm uniform in (0, w_scale]; labels follow
// sign(<w, u*>) for a hidden unit vector u*, flipped with the given
// probability.
std::vector<LossInstance> make_hinge_sequence(int n, int horizon, double w_scale,
                                              double label_noise, double lambda,
                                              std::uint64_t seed);

// Exact uniform gradient-norm bound of a loss sequence over the ball of
// radius R: max over hinge losses of lambda*R + ||w_t|| and over quadratics
// of lambda*(R + ||a_t||).
double gradient_budget(const std::vector<LossInstance>& losses, double R);

}  // namespace doco
