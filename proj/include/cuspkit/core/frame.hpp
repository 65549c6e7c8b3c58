#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cuspkit/core/errors.hpp"
#include "cuspkit/core/vec3.hpp"

namespace cuspkit {

struct Nucleus {
    Vec3 position;   // bohr
    double charge;   // > 0
};

/// Fixed nuclear geometry. Immutable after construction; carries the cusp
/// factor F(x) = -sum_k Z_k |x - R_k| shared by every downstream module.
///
/// Unit convention used throughout the toolkit: H = -Delta + V (no 1/2 on the
/// Laplacian), so hydrogenic energies are -Z^2/4 and -Z^2/16.
class NuclearFrame {
  public:
    const std::vector<Nucleus>& nuclei() const { return nuclei_; }
    std::size_t size() const { return nuclei_.size(); }
    const Nucleus& operator[](std::size_t k) const { return nuclei_[k]; }

    /// Distance from nucleus k to its nearest neighbour; +inf for a single nucleus.
    double r0(std::size_t k) const { return r0_[k]; }

    double total_charge() const { return total_charge_; }

    friend NuclearFrame make_frame(std::vector<Nucleus> nuclei);

  private:
    std::vector<Nucleus> nuclei_;
    std::vector<double> r0_;
    double total_charge_ = 0.0;
};

/// Validates and builds a NuclearFrame.
/// Duplicate positions (exact coordinate equality) are a geometry error;
/// non-positive charges a domain error.
inline NuclearFrame make_frame(std::vector<Nucleus> nuclei) {
    if (nuclei.empty()) throw DomainError("make_frame: nucleus list is empty");
    for (std::size_t i = 0; i < nuclei.size(); ++i) {
        if (!(nuclei[i].charge > 0.0))
            throw DomainError("make_frame: nucleus " + std::to_string(i) +
                              " has non-positive charge");
        for (std::size_t j = i + 1; j < nuclei.size(); ++j)
            if (nuclei[i].position == nuclei[j].position)
                throw GeometryError("make_frame: nuclei " + std::to_string(i) + " and " +
                                    std::to_string(j) + " share a position");
    }
    NuclearFrame frame;
    frame.nuclei_ = std::move(nuclei);
    frame.r0_.assign(frame.nuclei_.size(), std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < frame.nuclei_.size(); ++i) {
        frame.total_charge_ += frame.nuclei_[i].charge;
        for (std::size_t j = 0; j < frame.nuclei_.size(); ++j) {
            if (i == j) continue;
            frame.r0_[i] = std::min(frame.r0_[i],
                                    norm(frame.nuclei_[i].position - frame.nuclei_[j].position));
        }
    }
    return frame;
}

inline NuclearFrame single_nucleus(double charge) {
    return make_frame({{Vec3{}, charge}});
}

/// F(x) = -sum_k Z_k |x - R_k|; exact to floating precision.
inline double cusp_factor(const NuclearFrame& frame, Vec3 x) {
    double f = 0.0;
    for (const auto& n : frame.nuclei()) f -= n.charge * norm(x - n.position);
    return f;
}

inline constexpr double kExpGuard = 700.0;  // below IEEE double overflow at ~709.78

/// mu(x) = e^{-F(x)} rho(x). The factor e^{-F} grows like e^{+Z r}, so the
/// exponent is guarded before exponentiation.
template <class Density>
double smooth_part(const NuclearFrame& frame, const Density& rho, Vec3 x) {
    const double f = cusp_factor(frame, x);
    if (std::abs(f) > kExpGuard)
        throw RangeError("smooth_part: |F(x)| = " + std::to_string(std::abs(f)) +
                         " exceeds the exponent guard " + std::to_string(kExpGuard));
    return std::exp(-f) * rho(x);
}

/// Local variant about one nucleus: eta(x) = e^{Z_k |x - R_k|} rho(x).
/// Coincides with smooth_part for a single-nucleus frame.
template <class Density>
double local_smooth_part(const NuclearFrame& frame, std::size_t k, const Density& rho, Vec3 x) {
    const double e = frame[k].charge * norm(x - frame[k].position);
    if (e > kExpGuard)
        throw RangeError("local_smooth_part: exponent " + std::to_string(e) +
                         " exceeds the guard " + std::to_string(kExpGuard));
    return std::exp(e) * rho(x);
}

// --- JSON serialization ------------------------------------------------------
// Document layout: {"nuclei":[{"position":[x,y,z],"charge":Z}, ...]}

inline nlohmann::json to_json(const NuclearFrame& frame) {
    nlohmann::json doc;
    doc["nuclei"] = nlohmann::json::array();
    for (const auto& n : frame.nuclei())
        doc["nuclei"].push_back({{"position", {n.position.x, n.position.y, n.position.z}},
                                 {"charge", n.charge}});
    return doc;
}

inline NuclearFrame frame_from_json(const nlohmann::json& doc) {
    if (!doc.contains("nuclei") || !doc["nuclei"].is_array())
        throw DomainError("frame_from_json: missing \"nuclei\" array");
    std::vector<Nucleus> nuclei;
    for (const auto& item : doc["nuclei"]) {
        const auto& pos = item.at("position");
        if (!pos.is_array() || pos.size() != 3)
            throw DomainError("frame_from_json: \"position\" must be a 3-array");
        nuclei.push_back({Vec3{pos[0].get<double>(), pos[1].get<double>(), pos[2].get<double>()},
                          item.at("charge").get<double>()});
    }
    return make_frame(std::move(nuclei));
}

}  // namespace cuspkit
