#pragma once

#include <chrono>
#include <cstdlib>
#include <thread>

#include "torsor/psi.hpp"
#include "torsor/sampling.hpp"
#include "torsor/solve.hpp"
#include "torsor/torsor_point.hpp"

namespace torsor {

// Worker count for per-equation evaluation, from the TORSOR_THREADS
// environment variable (default 1; evaluation is pure, so splitting the
// equation list across threads is safe).
inline unsigned certify_thread_count() {
    const char* env = std::getenv("TORSOR_THREADS");
    if (!env) return 1;
    long n = std::strtol(env, nullptr, 10);
    if (n < 1) return 1;
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<unsigned>(std::min<long>(n, hw ? hw : 1));
}

// Scope of the embedding check: the membership rulings only (sufficient by
// the reduction H_r cap U_r = H~_r cap U_r), or every defining equation.
enum class CertifyScope { membership_only, all_equations };

// Bind the free factors of an assignment to explicit values and expand every
// bound factor; eta'' stay 1. Values must keep all factors nonzero.
inline std::map<CurveLabel, ParamElement> instantiate_assignment(
    const RescalingAssignment& asg, const std::map<CurveLabel, ParamElement>& free_values) {
    std::map<CurveLabel, ParamElement> out;
    std::vector<ParamElement> values;
    ParamElement one = CoeffTraits<ParamElement>::one();
    for (const auto& [l, v] : free_values)
        if (!v.vars()->empty()) {
            one = ParamElement::constant(v.vars(), 1);
            break;
        }
    for (const auto& l : curve_order(asg.r)) {
        if (l.kind == CurveKind::E) values.push_back(one);
        else if (free_values.count(l)) values.push_back(free_values.at(l) * one);
        else values.push_back(ParamElement()); // bound; filled below
    }
    for (const auto& l : curve_order(asg.r)) {
        if (l.kind == CurveKind::E) out[l] = one;
        else if (free_values.count(l)) out[l] = free_values.at(l) * one;
    }
    for (const auto& [l, expr] : asg.bound) {
        std::span<const ParamElement> vals(values.data(), values.size());
        out[l] = expr.evaluate(vals, one);
    }
    require(out.size() == curve_order(asg.r).size(), "assignment does not cover all factors");
    return out;
}

// Free factors drawn from the seeded generator; resamples until every bound
// factor is nonzero.
inline std::map<CurveLabel, ParamElement> sample_free_values(const RescalingAssignment& asg,
                                                             const VarTablePtr& params,
                                                             SplitMix64& rng) {
    for (int attempt = 0; attempt < kMaxResampleAttempts; ++attempt) {
        std::map<CurveLabel, ParamElement> fv;
        for (const auto& l : asg.free_labels)
            if (l.kind != CurveKind::E)
                fv[l] = ParamElement::constant(params, rng.rational(9, 4));
        auto full = instantiate_assignment(asg, fv);
        bool ok = true;
        for (const auto& [l, v] : full) ok = ok && !v.is_zero();
        if (ok) return fv;
    }
    throw DegeneracyError("could not sample nonzero rescaling factors in " +
                          std::to_string(kMaxResampleAttempts) + " attempts");
}

// The multiplicative torus action on the factors: t in (K*)^{r+1} scales the
// factor of a curve of class dH + sum e_i E_i by t_0^d * prod t_i^{e_i}.
inline ParamElement torus_weight(const DivisorClass& c, const std::vector<ParamElement>& t) {
    require(static_cast<int>(t.size()) == c.r + 1, "torus element has wrong rank");
    auto powed = [](const ParamElement& b, int e) {
        return e >= 0 ? b.pow(static_cast<unsigned>(e))
                      : b.inverse().pow(static_cast<unsigned>(-e));
    };
    ParamElement w = powed(t[0], c.d);
    for (int i = 0; i < c.r; ++i) w = w * powed(t[static_cast<std::size_t>(i + 1)], c.e[i]);
    return w;
}

inline std::map<CurveLabel, ParamElement> apply_torus(
    int r, const std::map<CurveLabel, ParamElement>& factors, const std::vector<ParamElement>& t) {
    std::map<CurveLabel, ParamElement> out;
    for (const auto& [l, v] : factors) out[l] = v * torus_weight(class_of(l, r), t);
    return out;
}

// ---------------------------------------------------------------------------
// The embedding certificate: for each sampled plane point, the rescaled
// torsor coordinates are evaluated in every chosen cone equation; a PASS
// records that all residuals were exactly zero.
// ---------------------------------------------------------------------------

struct EquationStatus {
    std::string name;
    bool zero = true;
    std::string first_failure; // sample index and residual, when nonzero
};

struct EmbeddingCertificate {
    int r = 6;
    bool pass = false;
    CertifyScope scope = CertifyScope::all_equations;
    std::size_t samples = 0;
    std::vector<EquationStatus> equations;
    // negative control: the identity rescaling must violate some equation
    bool negative_control_ran = false;
    bool negative_control_failed = false; // "failed" = some residual nonzero (expected)
    std::string negative_control_witness;
    long long wall_ms = 0;
};

inline std::vector<const ConeEquation*> scope_equations(
    int r, CertifyScope scope, const std::vector<ConeEquation>& all) {
    std::vector<const ConeEquation*> out;
    if (scope == CertifyScope::all_equations) {
        for (const auto& eq : all) out.push_back(&eq);
        return out;
    }
    for (const auto& rl : membership_set(r)) {
        for (const auto& eq : all)
            if (!eq.diagonal && eq.ruling == rl.cls) out.push_back(&eq);
    }
    return out;
}

// Evaluates the chosen equations at the rescaled coordinates of each sample.
inline EmbeddingCertificate certify_embedding(
    int r, const std::map<CurveLabel, ParamElement>& factors, const PointConfig& cfg,
    const std::map<CurveLabel, PlanePoly>& sections,
    const std::vector<std::array<ParamElement, 3>>& samples, CertifyScope scope,
    const std::vector<ConeEquation>& all_equations) {
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& [l, v] : factors)
        require(!v.is_zero(), "rescaling factors must be nonzero (factor " + l.str() + ")");

    EmbeddingCertificate cert;
    cert.r = r;
    cert.scope = scope;
    cert.samples = samples.size();
    auto eqs = scope_equations(r, scope, all_equations);
    for (const auto* eq : eqs) cert.equations.push_back({eq->name, true, ""});

    const unsigned workers = certify_thread_count();
    for (std::size_t s = 0; s < samples.size(); ++s) {
        auto xi = torsor_point(cfg, samples[s], sections);
        std::vector<ParamElement> coords;
        coords.reserve(xi.size());
        for (const auto& l : curve_order(r)) coords.push_back(factors.at(l) * xi.at(l));
        auto evaluate_range = [&](std::size_t lo, std::size_t hi) {
            for (std::size_t e = lo; e < hi; ++e) {
                ParamElement acc;
                for (const auto& [a, b, c] : eqs[e]->terms)
                    acc = acc + coords[curve_index(r, a)] * coords[curve_index(r, b)] * c;
                if (!acc.is_zero() && cert.equations[e].zero) {
                    cert.equations[e].zero = false;
                    cert.equations[e].first_failure =
                        "sample " + std::to_string(s) + ": residual " + acc.str();
                }
            }
        };
        if (workers <= 1 || eqs.size() < 2 * workers) {
            evaluate_range(0, eqs.size());
        } else {
            std::vector<std::thread> pool;
            std::size_t chunk = (eqs.size() + workers - 1) / workers;
            for (unsigned w = 0; w < workers; ++w) {
                std::size_t lo = w * chunk, hi = std::min(eqs.size(), lo + chunk);
                if (lo < hi) pool.emplace_back(evaluate_range, lo, hi);
            }
            for (auto& t : pool) t.join();
        }
    }
    cert.pass = true;
    for (const auto& st : cert.equations) cert.pass = cert.pass && st.zero;
    cert.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    return cert;
}

// Identity-rescaling control: expected to violate at least one equation for
// a generic configuration.
inline std::pair<bool, std::string> identity_rescaling_fails(
    int r, const PointConfig& cfg, const std::map<CurveLabel, PlanePoly>& sections,
    const std::vector<std::array<ParamElement, 3>>& samples,
    const std::vector<ConeEquation>& all_equations) {
    std::map<CurveLabel, ParamElement> ones;
    ParamElement one = ParamElement::constant(cfg.params, 1);
    for (const auto& l : curve_order(r)) ones[l] = one;
    auto cert = certify_embedding(r, ones, cfg, sections, samples, CertifyScope::all_equations,
                                  all_equations);
    for (const auto& st : cert.equations)
        if (!st.zero) return {true, st.name + " (" + st.first_failure + ")"};
    return {false, ""};
}

} // namespace torsor
