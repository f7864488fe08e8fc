#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "torsor/json_io.hpp"
#include "torsor/pipeline.hpp"

using namespace torsor;
using fixtures::sym_fixture;

namespace {

std::vector<ConditionPair> degree3_conditions() {
    PointConfig cfg = symbolic_config(6);
    auto sections = realize_all_sections(cfg, SectionScaling::classical);
    return membership_conditions(6, sections, h6_equations());
}

} // namespace

TEST_CASE("the twenty degree-3 conditions match the reference list verbatim") {
    auto conds = degree3_conditions();
    REQUIRE(conds.size() == 10);
    VarTablePtr params = make_vars(parameter_names(6));
    for (std::size_t i = 0; i < 10; ++i) {
        CHECK(conds[i].g1 == sym_fixture(6, fixtures::kDegree3Conditions[i][0], params));
        CHECK(conds[i].g2 == sym_fixture(6, fixtures::kDegree3Conditions[i][1], params));
    }
}

TEST_CASE("conditions are homogeneous of the ruling's degree under the Pic grading") {
    for (int r : {6, 7}) {
        PointConfig cfg;
        if (r == 6) {
            cfg = symbolic_config(6);
        } else {
            SplitMix64 rng(11);
            cfg = sample_config(7, rng);
        }
        auto sections = realize_all_sections(cfg, SectionScaling::classical);
        auto conds = membership_conditions(r, sections, cone_equations(r));
        for (const auto& c : conds)
            for (const auto* g : {&c.g1, &c.g2})
                for (const auto& [m, coeff] : g->terms())
                    CHECK(sym_monomial_degree(r, m) == c.ruling);
    }
}

TEST_CASE("solved degree-3 factors match the reference closed forms exactly") {
    auto asg = solve_system(6, degree3_conditions());
    VarTablePtr params = make_vars(parameter_names(6));
    CHECK(asg.bound.size() == 15);
    CHECK(asg.leftovers.size() == 5);
    CHECK(asg.leftovers_vanish());
    for (const auto& [label, expr] : fixtures::degree3_solutions()) {
        REQUIRE(asg.bound.count(label) == 1);
        CHECK(asg.bound.at(label) == sym_fixture(6, expr, params));
    }
}

TEST_CASE("free-parameter counts: N_{r-2}+2 factors, N_{r-2}-r+1 image parameters") {
    CHECK(count_free_parameters(6) == 12);
    CHECK(count_free_parameters(7) == 18);
    CHECK(free_rescaling_labels(6).size() == 12);
    CHECK(free_rescaling_labels(7).size() == 18);
    CHECK(count_free_parameters(6) - 6 - 1 == 5);  // image family dimension, r=6
    CHECK(count_free_parameters(7) - 7 - 1 == 10); // image family dimension, r=7
}

TEST_CASE("degree-2 system at three seeds: 38 nonzero bound factors, 18 vanishing surpluses") {
    for (std::uint64_t seed : {101u, 202u, 303u}) {
        SplitMix64 rng(seed);
        PointConfig cfg = sample_config(7, rng);
        auto sections = realize_all_sections(cfg, SectionScaling::classical);
        auto conds = membership_conditions(7, sections, h7_equations());
        CHECK(conds.size() == 28); // 56 conditions in 28 pairs
        auto asg = solve_system(7, conds);
        CHECK(asg.free_labels.size() == 18);
        CHECK(asg.bound.size() == 38);
        CHECK(asg.leftovers.size() == 18);
        CHECK(asg.leftovers_vanish());
        for (const auto& [l, e] : asg.bound) CHECK_FALSE(e.is_zero());
    }
}

TEST_CASE("degenerate configurations are rejected with a witness") {
    PointConfig dup = numeric_config(6, {Rational(1), Rational(1), Rational(5), Rational(7)});
    CHECK_THROWS(realize_all_sections(dup, SectionScaling::monic));
    PipelineOptions opts;
    opts.r = 6;
    opts.symbolic = false;
    opts.params = {Rational(1), Rational(1), Rational(1), Rational(1)};
    CHECK_THROWS_AS(run_pipeline(opts), InvalidInput);
}

TEST_CASE("end-to-end certificates pass and the identity rescaling fails (r=6 symbolic)") {
    PipelineOptions opts;
    opts.r = 6;
    opts.symbolic = true;
    opts.samples = 3;
    opts.seed = 5;
    auto res = run_pipeline(opts);
    CHECK(res.certificate.pass);
    CHECK(res.certificate.equations.size() == 27);
    CHECK(res.negative_control_failed);
}

TEST_CASE("end-to-end certificates pass for r=7 (specialized), both scopes") {
    PipelineOptions opts;
    opts.r = 7;
    opts.symbolic = false;
    opts.samples = 3;
    opts.seed = 9;
    auto res = run_pipeline(opts);
    CHECK(res.certificate.pass);
    CHECK(res.certificate.equations.size() == 134);
    CHECK(res.negative_control_failed);

    opts.scope = CertifyScope::membership_only;
    opts.run_negative_control = false;
    auto res2 = run_pipeline(opts);
    CHECK(res2.certificate.pass);
    CHECK(res2.certificate.equations.size() == 28);
}

TEST_CASE("torus action: a rescaled good assignment stays good, images agree pointwise") {
    PipelineOptions opts;
    opts.r = 6;
    opts.symbolic = false;
    opts.samples = 2;
    opts.seed = 77;
    opts.run_negative_control = false;
    auto res = run_pipeline(opts);
    REQUIRE(res.certificate.pass);

    SplitMix64 rng(4242);
    std::vector<ParamElement> t;
    for (int i = 0; i < 7; ++i)
        t.push_back(ParamElement::constant(res.cfg.params, rng.rational(9, 4)));
    auto acted = apply_torus(6, res.factors, t);
    auto cert = certify_embedding(6, acted, res.cfg, res.sections, res.sample_points,
                                  CertifyScope::all_equations, res.equations);
    CHECK(cert.pass);

    // pointwise: the acted image coordinates are the torus weights times the
    // original image coordinates
    for (const auto& q : res.sample_points) {
        auto xi = torsor_point(res.cfg, q, res.sections);
        for (const auto& l : curve_order(6)) {
            ParamElement before = res.factors.at(l) * xi.at(l);
            ParamElement after = acted.at(l) * xi.at(l);
            CHECK(after == before * torus_weight(class_of(l, 6), t));
        }
    }
}

TEST_CASE("certificates are reproducible: same seed, byte-identical JSON") {
    PipelineOptions opts;
    opts.r = 7;
    opts.symbolic = false;
    opts.samples = 2;
    opts.seed = 31337;
    auto a = run_pipeline(opts);
    auto b = run_pipeline(opts);
    json ja = certificate_to_json(a, opts);
    json jb = certificate_to_json(b, opts);
    ja.erase("wall_ms");
    jb.erase("wall_ms");
    CHECK(ja.dump() == jb.dump());
}

TEST_CASE("rescaling factors must be nonzero to certify") {
    PipelineOptions opts;
    opts.r = 6;
    opts.symbolic = false;
    opts.samples = 1;
    opts.seed = 3;
    opts.run_negative_control = false;
    auto res = run_pipeline(opts);
    auto zeroed = res.factors;
    zeroed[CurveLabel::M(1, 2)] = ParamElement::constant(res.cfg.params, 0);
    CHECK_THROWS_AS(certify_embedding(6, zeroed, res.cfg, res.sections, res.sample_points,
                                      CertifyScope::all_equations, res.equations),
                    InvalidInput);
}
