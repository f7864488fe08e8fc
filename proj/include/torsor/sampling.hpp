#pragma once

#include <cstdint>

#include "torsor/config.hpp"

namespace torsor {

// Deterministic cross-platform generator (splitmix64): state advances by the
// golden-gamma constant and the output is a finalized mix of the state.
// Certificates replay bit-identically for a given seed on any platform.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform integer in [lo, hi] via modulo of the 64-bit output
    long below(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // nonzero rational with numerator in [-bound, bound] and denominator in [1, den_bound]
    Rational rational(long bound = 20, long den_bound = 7) {
        long num = 0;
        while (num == 0) num = below(-bound, bound);
        return Rational(num) / Rational(below(1, den_bound));
    }

  private:
    std::uint64_t state_;
};

inline constexpr int kMaxResampleAttempts = 100;

// Random configuration in general position; resamples on degeneracy.
inline PointConfig sample_config(int r, SplitMix64& rng) {
    for (int attempt = 0; attempt < kMaxResampleAttempts; ++attempt) {
        std::vector<Rational> vals;
        for (int i = 0; i < 2 * (r - 4); ++i) vals.push_back(rng.rational());
        PointConfig cfg = numeric_config(r, vals);
        if (general_position(cfg).ok) return cfg;
    }
    throw DegeneracyError("could not sample a general-position configuration in " +
                          std::to_string(kMaxResampleAttempts) + " attempts");
}

// Random plane point avoiding every realized curve (all torsor coordinates
// nonzero); returns the point, resampling as needed.
inline std::array<ParamElement, 3> sample_plane_point(
    const PointConfig& cfg, const std::map<CurveLabel, PlanePoly>& sections, SplitMix64& rng) {
    ParamElement one = ParamElement::constant(cfg.params, 1);
    for (int attempt = 0; attempt < kMaxResampleAttempts; ++attempt) {
        std::array<ParamElement, 3> q{one, ParamElement::constant(cfg.params, rng.rational()),
                                      ParamElement::constant(cfg.params, rng.rational())};
        bool ok = true;
        std::span<const ParamElement> vals(q.data(), 3);
        for (const auto& [l, p] : sections) {
            if (l.kind == CurveKind::E) continue;
            if (p.evaluate(vals, one).is_zero()) {
                ok = false;
                break;
            }
        }
        if (ok) return q;
    }
    throw DegeneracyError("could not sample a plane point off the realized curves in " +
                          std::to_string(kMaxResampleAttempts) + " attempts");
}

} // namespace torsor
