#pragma once

#include "doco/linalg.hpp"

namespace doco {

// Euclidean ball centered at the origin. The origin is always a member, and
// ||x - y|| <= 2 * radius for any two members.
struct BallDomain {
    int dimension = 0;
    double radius = 1.0;

    double diameter() const { return 2.0 * radius; }

    bool contains(const Vec& x, double tol = 1e-9) const {
        return static_cast<int>(x.size()) == dimension && norm2(x) <= radius + tol;
    }

    Vec origin() const { return zeros(dimension); }

    void validate() const {
        if (dimension <= 0) throw ConfigError("BallDomain: dimension must be positive");
        if (!(radius >= 0.0)) throw ConfigError("BallDomain: radius must be nonnegative");
    }
};

// Euclidean projection onto the centered ball of the given radius: identity
// inside, radial scaling outside.
inline Vec project_ball(Vec v, double radius) {
    double n = norm2(v);
    if (n > radius) scale(v, radius / n);
    return v;
}

inline Vec project(const BallDomain& domain, Vec v) { return project_ball(std::move(v), domain.radius); }

}  // namespace doco
