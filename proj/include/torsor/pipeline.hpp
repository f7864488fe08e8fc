#pragma once

#include "torsor/certify.hpp"

namespace torsor {

// One-stop orchestration used by the command line and the test suites:
// configuration -> general position -> sections -> relations -> conditions ->
// solved assignment -> sampled certificate (+ identity-rescaling control).

struct PipelineOptions {
    int r = 6;
    bool symbolic = true;                  // surface parameters symbolic or numeric
    std::vector<Rational> params;          // explicit parameter values (numeric mode)
    std::uint64_t seed = 1;                // drives parameter/sample/factor draws
    int samples = 10;
    CertifyScope scope = CertifyScope::all_equations;
    bool run_negative_control = true;
};

struct PipelineResult {
    PointConfig cfg;
    std::map<CurveLabel, PlanePoly> sections;
    std::vector<ConeEquation> equations;
    std::vector<ConditionPair> conditions;
    RescalingAssignment assignment;
    std::map<CurveLabel, ParamElement> free_values;
    std::map<CurveLabel, ParamElement> factors;
    std::vector<std::array<ParamElement, 3>> sample_points;
    EmbeddingCertificate certificate;
    bool negative_control_failed = false;
    std::string negative_witness;
};

inline std::vector<ConeEquation> cone_equations(int r) {
    return r == 6 ? h6_equations() : h7_equations();
}

// The 2|M_r| rescaling conditions for a realized configuration.
inline std::vector<ConditionPair> membership_conditions(
    int r, const std::map<CurveLabel, PlanePoly>& sections,
    const std::vector<ConeEquation>& equations) {
    std::map<DivisorClass, const ConeEquation*> by_class;
    for (const auto& eq : equations)
        if (!eq.diagonal) by_class[eq.ruling] = &eq;
    std::vector<ConditionPair> out;
    for (const auto& rl : membership_set(r)) {
        auto anchors = membership_anchors(r, rl);
        auto rels = ruling_relations(rl, sections, anchors.first, anchors.second);
        out.push_back(build_conditions(r, rl, rels, *by_class.at(rl.cls)));
    }
    return out;
}

inline PipelineResult run_pipeline(const PipelineOptions& opts) {
    require(opts.r == 6 || opts.r == 7, "pipeline: r must be 6 or 7");
    SplitMix64 rng(opts.seed);

    PipelineResult res;
    if (opts.symbolic) {
        res.cfg = symbolic_config(opts.r);
        auto gp = general_position(res.cfg);
        require_nondegenerate(gp.ok, "symbolic configuration degenerate: " + gp.witness);
    } else if (!opts.params.empty()) {
        res.cfg = numeric_config(opts.r, opts.params);
        auto gp = general_position(res.cfg);
        require(gp.ok, "configuration is not in general position: " + gp.witness);
    } else {
        res.cfg = sample_config(opts.r, rng);
    }

    res.sections = realize_all_sections(res.cfg, SectionScaling::classical);
    res.equations = cone_equations(opts.r);
    res.conditions = membership_conditions(opts.r, res.sections, res.equations);
    res.assignment = solve_system(opts.r, res.conditions);
    res.free_values = sample_free_values(res.assignment, res.cfg.params, rng);
    res.factors = instantiate_assignment(res.assignment, res.free_values);

    for (int i = 0; i < opts.samples; ++i)
        res.sample_points.push_back(sample_plane_point(res.cfg, res.sections, rng));

    res.certificate = certify_embedding(opts.r, res.factors, res.cfg, res.sections,
                                        res.sample_points, opts.scope, res.equations);
    res.certificate.negative_control_ran = opts.run_negative_control;
    if (opts.run_negative_control) {
        auto [failed, witness] = identity_rescaling_fails(opts.r, res.cfg, res.sections,
                                                          res.sample_points, res.equations);
        res.negative_control_failed = failed;
        res.negative_witness = witness;
        res.certificate.negative_control_failed = failed;
        res.certificate.negative_control_witness = witness;
    }
    return res;
}

} // namespace torsor
