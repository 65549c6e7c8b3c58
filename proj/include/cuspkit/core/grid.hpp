#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "cuspkit/core/errors.hpp"
#include "cuspkit/core/frame.hpp"
#include "cuspkit/core/vec3.hpp"

namespace cuspkit {

/// Unit vector on S^2.
class Direction {
  public:
    explicit Direction(Vec3 v) : v_(v) {
        if (std::abs(norm(v) - 1.0) > 1e-14)
            throw DomainError("Direction: |omega| deviates from 1 by more than 1e-14");
    }

    /// Normalizes an arbitrary nonzero vector.
    static Direction of(Vec3 v) {
        const double n = norm(v);
        if (n == 0.0) throw DomainError("Direction::of: zero vector");
        return Direction(Vec3{v.x / n, v.y / n, v.z / n}, 0);
    }

    Vec3 vec() const { return v_; }
    double x() const { return v_.x; }
    double y() const { return v_.y; }
    double z() const { return v_.z; }
    operator Vec3() const { return v_; }

  private:
    Direction(Vec3 v, int) : v_(v) {}
    Vec3 v_;
};

/// Strictly increasing positive radii anchored at one nucleus of a frame.
struct RadialGrid {
    std::vector<double> radii;      // bohr, strictly increasing, all > 0
    std::size_t anchor_nucleus = 0;

    std::size_t size() const { return radii.size(); }
    double r_min() const { return radii.front(); }
    double r_max() const { return radii.back(); }

    /// Throws unless 0 < r_min, radii strictly increasing, and r_max < r0(anchor).
    void validate(const NuclearFrame& frame) const {
        if (anchor_nucleus >= frame.size())
            throw DomainError("RadialGrid: anchor nucleus index out of range");
        if (radii.empty() || !(radii.front() > 0.0))
            throw DomainError("RadialGrid: radii must be positive");
        for (std::size_t i = 1; i < radii.size(); ++i)
            if (!(radii[i] > radii[i - 1]))
                throw DomainError("RadialGrid: radii must be strictly increasing");
        if (!(radii.back() < frame.r0(anchor_nucleus)))
            throw GeometryError("RadialGrid: r_max = " + std::to_string(radii.back()) +
                                " reaches r0 = " + std::to_string(frame.r0(anchor_nucleus)) +
                                " of nucleus " + std::to_string(anchor_nucleus));
    }
};

/// n log-spaced radii in [r_min, r_max].
inline RadialGrid log_grid(double r_min, double r_max, std::size_t n,
                           std::size_t anchor = 0) {
    if (!(r_min > 0.0) || !(r_max > r_min) || n < 2)
        throw DomainError("log_grid: need 0 < r_min < r_max and n >= 2");
    RadialGrid g;
    g.anchor_nucleus = anchor;
    g.radii.resize(n);
    const double lmin = std::log(r_min), lmax = std::log(r_max);
    for (std::size_t i = 0; i < n; ++i)
        g.radii[i] = std::exp(lmin + (lmax - lmin) * static_cast<double>(i) /
                                         static_cast<double>(n - 1));
    g.radii.front() = r_min;
    g.radii.back() = r_max;
    return g;
}

/// Default grid for cusp-expansion fitting: 24 log-spaced points in [1e-4, 5e-3].
inline RadialGrid default_cusp_grid(std::size_t anchor = 0) {
    return log_grid(1e-4, 5e-3, 24, anchor);
}

}  // namespace cuspkit
