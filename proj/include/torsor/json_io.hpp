#pragma once

#include <json.hpp>

#include "torsor/pipeline.hpp"

namespace torsor {

using json = nlohmann::json;

inline json divisor_to_json(const DivisorClass& c) {
    json e = json::array();
    for (int i = 0; i < c.r; ++i) e.push_back(c.e[i]);
    return json{{"d", c.d}, {"e", e}, {"text", c.str()}};
}

// Equations export: {tag, ruling, monomials: [{curves, coeff}]} with exact
// rational coefficients, in the generation order.
inline json equations_to_json(int r, const std::vector<ConeEquation>& eqs) {
    json out = json::array();
    for (const auto& eq : eqs) {
        json monos = json::array();
        for (const auto& [a, b, c] : eq.terms)
            monos.push_back(json{{"curves", {a.str(), b.str()}}, {"coeff", to_string(c)}});
        out.push_back(json{{"tag", eq.name},
                           {"ruling", divisor_to_json(eq.ruling)},
                           {"diagonal", eq.diagonal},
                           {"monomials", monos}});
    }
    return json{{"r", r}, {"count", eqs.size()}, {"equations", out}};
}

namespace detail {

inline json sympoly_to_json(const SymPoly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json factors = json::array();
        for (std::size_t i = 0; i < m.size(); ++i)
            for (unsigned t = 0; t < m[i]; ++t) factors.push_back((*p.vars())[i]);
        terms.push_back(json{{"factors", factors}, {"coeff", c.str()}});
    }
    return terms;
}

// FNV-1a digest of a canonical string, for compact certificates.
inline std::string digest(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

} // namespace detail

inline json conditions_to_json(int r, const std::vector<ConditionPair>& conds) {
    json out = json::array();
    for (const auto& c : conds) {
        out.push_back(json{{"ruling", c.symbol},
                           {"class", divisor_to_json(c.ruling)},
                           {"g1", detail::sympoly_to_json(c.g1)},
                           {"g1_text", c.g1.str()},
                           {"g2", detail::sympoly_to_json(c.g2)},
                           {"g2_text", c.g2.str()}});
    }
    return json{{"r", r}, {"count", 2 * conds.size()}, {"conditions", out}};
}

// Solved closed forms. For r=7 the expressions are long, so the export
// carries digests of the canonical strings next to the term data.
inline json solutions_to_json(const RescalingAssignment& asg) {
    json frees = json::array();
    for (const auto& l : asg.free_labels) frees.push_back(coordinate_name(l, asg.r, 2));
    json bound = json::array();
    for (const auto& [l, e] : asg.bound) {
        std::string text = e.str();
        json entry{{"factor", coordinate_name(l, asg.r, 2)}, {"digest", detail::digest(text)}};
        if (asg.r == 6) {
            entry["expression"] = detail::sympoly_to_json(e);
            entry["text"] = text;
        } else {
            entry["terms"] = e.term_count();
        }
        bound.push_back(entry);
    }
    json leftovers = json::array();
    for (const auto& l : asg.leftovers)
        leftovers.push_back(json{{"ruling", l.symbol}, {"zero", l.residual.is_zero()}});
    return json{{"r", asg.r},
                {"free_count", frees.size()},
                {"free", frees},
                {"bound", bound},
                {"surplus_conditions", leftovers}};
}

inline json certificate_to_json(const PipelineResult& res, const PipelineOptions& opts) {
    const auto& cert = res.certificate;
    json eqs = json::array();
    for (const auto& st : cert.equations) {
        json e{{"equation", st.name}, {"zero", st.zero}};
        if (!st.zero) e["failure"] = st.first_failure;
        eqs.push_back(e);
    }
    json params = json::array();
    for (std::size_t i = 4; i < res.cfg.points.size(); ++i) {
        const auto& p = res.cfg.points[i];
        params.push_back(json::array({p[0].str(), p[1].str(), p[2].str()}));
    }
    json samples = json::array();
    for (const auto& q : res.sample_points)
        samples.push_back(json::array({q[0].str(), q[1].str(), q[2].str()}));
    json frees = json::object();
    for (const auto& [l, v] : res.free_values) frees[coordinate_name(l, res.cfg.r, 2)] = v.str();
    json bindings = json::array();
    for (const auto& [l, e] : res.assignment.bound) {
        std::string text = e.str();
        json entry{{"factor", coordinate_name(l, res.cfg.r, 2)}, {"digest", detail::digest(text)}};
        if (res.cfg.r == 6) entry["text"] = text;
        bindings.push_back(entry);
    }
    return json{
        {"r", res.cfg.r},
        {"mode", opts.symbolic ? "symbolic" : "specialized"},
        {"seed", opts.seed},
        {"scope", opts.scope == CertifyScope::all_equations ? "all" : "membership"},
        {"pass", cert.pass},
        {"points", params},
        {"free_parameter_count", count_free_parameters(res.cfg.r)},
        {"free_values", frees},
        {"bindings", bindings},
        {"surplus_conditions_zero", res.assignment.leftovers_vanish()},
        {"samples", samples},
        {"equations", eqs},
        {"negative_control",
         json{{"ran", cert.negative_control_ran},
              {"failed_as_expected", cert.negative_control_failed},
              {"witness", cert.negative_control_witness}}},
        {"wall_ms", cert.wall_ms},
    };
}

} // namespace torsor
