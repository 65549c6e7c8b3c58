#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "cuspkit/core/vec3.hpp"

namespace cuspkit {

/// splitmix64 finalizer; used to derive independent substream seeds.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t combine_seed(std::uint64_t seed, std::uint64_t stream) {
    return mix64(mix64(seed) ^ mix64(stream + 0x517cc1b727220a95ULL));
}

/// Bit-stable hash of a coordinate triple; default substream index for
/// single-point evaluations so distinct points decorrelate.
inline std::uint64_t point_stream_id(Vec3 x) {
    auto bits = [](double v) {
        std::uint64_t b;
        static_assert(sizeof(b) == sizeof(v));
        __builtin_memcpy(&b, &v, sizeof(b));
        return b;
    };
    std::uint64_t h = 0x2545f4914f6cdd1dULL;
    h = mix64(h ^ bits(x.x));
    h = mix64(h ^ bits(x.y));
    h = mix64(h ^ bits(x.z));
    return h;
}

/// Deterministic random stream. All transforms are written out explicitly
/// (inverse CDF / trigonometric) so results do not depend on library
/// implementations of distributions; mt19937_64 itself is fully specified.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}
    RandomStream(std::uint64_t seed, std::uint64_t stream)
        : engine_(combine_seed(seed, stream)) {}

    /// Uniform in (0, 1); never returns 0 or 1 exactly.
    double uniform() {
        const std::uint64_t r = engine_();
        return (static_cast<double>(r >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Exponential with the given rate.
    double exponential(double rate) { return -std::log(uniform()) / rate; }

    /// Gamma(3, 1/rate): radius of the isotropic density ~ e^{-rate r} in 3D.
    double gamma3(double rate) {
        return -(std::log(uniform()) + std::log(uniform()) + std::log(uniform())) / rate;
    }

    /// Uniform direction on the unit sphere.
    Vec3 unit_vector() {
        const double c = 1.0 - 2.0 * uniform();
        const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
        const double phi = 2.0 * M_PI * uniform();
        return {s * std::cos(phi), s * std::sin(phi), c};
    }

    std::uint64_t raw() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

/// Running mean/variance accumulator with binary-counter pairwise summation;
/// the result is a pure function of the value sequence.
class PairwiseAccumulator {
  public:
    void add(double v) {
        push(sums_, v);
        push(sqsums_, v * v);
        ++count_;
    }

    std::uint64_t count() const { return count_; }

    double sum() const { return total(sums_); }

    double mean() const { return count_ ? sum() / static_cast<double>(count_) : 0.0; }

    /// One-sigma standard error of the mean.
    double std_error() const {
        if (count_ < 2) return 0.0;
        const double n = static_cast<double>(count_);
        const double m = mean();
        const double var = std::max(0.0, (total(sqsums_) - n * m * m) / (n - 1.0));
        return std::sqrt(var / n);
    }

  private:
    // Partial sums indexed by tree level; slot i holds a sum of 2^i values.
    static void push(std::vector<double>& slots, double v) {
        std::size_t i = 0;
        while (i < slots.size() && slots[i] != 0.0) {
            v += slots[i];
            slots[i] = 0.0;
            ++i;
        }
        if (i == slots.size())
            slots.push_back(v);
        else
            slots[i] = v;
    }
    static double total(const std::vector<double>& slots) {
        double t = 0.0;
        for (double s : slots) t += s;
        return t;
    }

    std::vector<double> sums_;
    std::vector<double> sqsums_;
    std::uint64_t count_ = 0;
};

}  // namespace cuspkit
