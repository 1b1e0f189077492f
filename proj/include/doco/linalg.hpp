#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "doco/errors.hpp"

namespace doco {

// Dense vectors are plain std::vector<double>; dimensions here are small
// (a few hundred at most), so no linear algebra library is pulled in.
using Vec = std::vector<double>;

inline void check_same_dim(const Vec& a, const Vec& b, const char* where) {
    if (a.size() != b.size())
        throw DimensionError(std::string(where) + ": dimension mismatch " +
                             std::to_string(a.size()) + " vs " + std::to_string(b.size()));
}

inline double dot(const Vec& a, const Vec& b) {
    check_same_dim(a, b, "dot");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Vec& a) {
    double s = 0.0;
    for (double v : a) s += v * v;
    return std::sqrt(s);
}

// y += alpha * x
inline void axpy(double alpha, const Vec& x, Vec& y) {
    check_same_dim(x, y, "axpy");
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

inline void scale(Vec& v, double alpha) {
    for (double& x : v) x *= alpha;
}

inline Vec scaled(Vec v, double alpha) {
    scale(v, alpha);
    return v;
}

inline Vec zeros(int n) { return Vec(static_cast<std::size_t>(n), 0.0); }

inline double dist2(const Vec& a, const Vec& b) {
    check_same_dim(a, b, "dist2");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

// Sparse feature vector with strictly increasing 1-based indices, as parsed
// from LIBSVM text.
struct SparseVec {
    std::vector<std::int32_t> index;  // 1-based
    std::vector<double> value;

    double dot(const Vec& x) const {
        double s = 0.0;
        for (std::size_t k = 0; k < index.size(); ++k) {
            std::size_t i = static_cast<std::size_t>(index[k] - 1);
            if (i >= x.size())
                throw DimensionError("SparseVec::dot: index " + std::to_string(index[k]) +
                                     " exceeds dense dimension " + std::to_string(x.size()));
            s += value[k] * x[i];
        }
        return s;
    }

    // y += alpha * this
    void add_scaled(Vec& y, double alpha) const {
        for (std::size_t k = 0; k < index.size(); ++k) {
            std::size_t i = static_cast<std::size_t>(index[k] - 1);
            if (i >= y.size())
                throw DimensionError("SparseVec::add_scaled: index out of range");
            y[i] += alpha * value[k];
        }
    }

    double norm2() const {
        double s = 0.0;
        for (double v : value) s += v * v;
        return std::sqrt(s);
    }

    std::int32_t max_index() const {
        return index.empty() ? 0 : index.back();
    }

    Vec dense(int n) const {
        Vec out = zeros(n);
        add_scaled(out, 1.0);
        return out;
    }
};

}  // namespace doco
