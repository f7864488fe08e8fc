#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torsor/parse.hpp"
#include "torsor/pipeline.hpp"

using namespace torsor;

namespace {

// Parses a fixture like "b*x - z" into a plane polynomial with coefficients
// in the configuration's parameter field.
PlanePoly plane(const std::string& expr, const VarTablePtr& params) {
    std::vector<std::string> names = *plane_vars();
    for (const auto& p : *params) names.push_back(p);
    VarTablePtr all = make_vars(names);
    Poly p = parse_poly(expr, all);
    PlanePoly out(plane_vars());
    for (const auto& [m, c] : p.terms()) {
        Monomial xyz(m.begin(), m.begin() + 3);
        Poly coeff(params);
        Monomial rest(m.begin() + 3, m.end());
        coeff.add_term(rest, c);
        out.add_term(xyz, ParamElement(coeff));
    }
    return out;
}

} // namespace

TEST_CASE("general position: numeric, degenerate, and symbolic configurations") {
    PointConfig good = numeric_config(6, {Rational(2), Rational(3), Rational(5), Rational(7)});
    CHECK(general_position(good).ok);

    // p5 = p4 duplicates a point: collinear with any third
    PointConfig dup = numeric_config(6, {Rational(1), Rational(1), Rational(5), Rational(7)});
    auto rep = general_position(dup);
    CHECK_FALSE(rep.ok);
    CHECK(rep.witness.find("collinear") != std::string::npos);
    CHECK(rep.witness.find("p5") != std::string::npos);

    CHECK(general_position(symbolic_config(6)).ok);
    CHECK(general_position(symbolic_config(7)).ok);

    // six points on a conic: the conic through p1..p4 and (1:2:3) is
    // 3xy - 4xz + yz; the point (1:6:-9) lies on it as well
    PointConfig conic6 =
        numeric_config(6, {Rational(2), Rational(3), Rational(6), Rational(-9)});
    auto rep6 = general_position(conic6);
    CHECK_FALSE(rep6.ok);
    CHECK(rep6.witness.find("conic") != std::string::npos);
}

TEST_CASE("realize_section: lines in both scalings") {
    PointConfig cfg = symbolic_config(6);
    const auto& params = cfg.params;

    // line through p1, p2 is z = 0 in both conventions
    auto m12m = realize_section(CurveLabel::M(1, 2), cfg, SectionScaling::monic);
    auto m12c = realize_section(CurveLabel::M(1, 2), cfg, SectionScaling::classical);
    CHECK(m12m.poly == plane("z", params));
    CHECK(m12c.poly == plane("z", params));

    // monic: first nonzero coefficient 1; classical: the point-pair determinant
    auto m34m = realize_section(CurveLabel::M(3, 4), cfg, SectionScaling::monic);
    CHECK(m34m.poly == plane("x - y", params));
    auto m34c = realize_section(CurveLabel::M(3, 4), cfg, SectionScaling::classical);
    CHECK(m34c.poly == plane("y - x", params));
    auto m25c = realize_section(CurveLabel::M(2, 5), cfg, SectionScaling::classical);
    CHECK(m25c.poly == plane("b*x - z", params));

    for (auto scaling : {SectionScaling::monic, SectionScaling::classical}) {
        auto q6 = realize_section(CurveLabel::Q6(6), cfg, scaling);
        CHECK(q6.poly.total_degree() == 2);
        CHECK(section_vanishes_correctly(q6, cfg));
    }
}

TEST_CASE("realize_section: conics and singular cubics vanish as required") {
    PointConfig cfg7 = symbolic_config(7);
    auto q = realize_section(CurveLabel::Q7(2, 5), cfg7, SectionScaling::classical);
    CHECK(section_vanishes_correctly(q, cfg7));
    auto c3 = realize_section(CurveLabel::C(3), cfg7, SectionScaling::classical);
    CHECK(c3.poly.total_degree() == 3);
    CHECK(section_vanishes_correctly(c3, cfg7)); // includes the three derivative conditions

    // monic and classical differ by a nonzero scalar only
    auto c3m = realize_section(CurveLabel::C(3), cfg7, SectionScaling::monic);
    ParamElement ratio;
    bool first = true;
    for (const auto& [m, c] : c3.poly.terms()) {
        ParamElement other = c3m.poly.coefficient(m);
        CHECK_FALSE(other.is_zero());
        if (first) {
            ratio = c / other;
            first = false;
        } else {
            CHECK(c / other == ratio);
        }
    }
}

TEST_CASE("kernel-dimension error signals non-general position") {
    PointConfig dup = numeric_config(6, {Rational(1), Rational(1), Rational(5), Rational(7)});
    CHECK_THROWS_AS(realize_section(CurveLabel::Q6(6), dup, SectionScaling::monic),
                    DegeneracyError);
}

TEST_CASE("the five lines through p2 span a 2-dimensional space (kernel dim 3, rank 2)") {
    PointConfig cfg = symbolic_config(6);
    auto sections = realize_all_sections(cfg, SectionScaling::classical);
    Ruling rl;
    for (const auto& cand : enumerate_rulings(6, 1))
        if (cand.cls == DivisorClass::H(6) - DivisorClass::E(6, 2)) rl = cand;
    auto products = pair_products(rl, sections);
    auto matrix = product_matrix(rl, products);
    CHECK(matrix.rows() == 3); // linear monomials x, y, z
    CHECK(matrix.cols() == 5);
    CHECK(rank(matrix) == 2);
    CHECK(ruling_kernel(rl, sections).size() == 3);
}

TEST_CASE("every (1)-ruling has a rank-2 product space and r-3 anchored relations") {
    PointConfig cfg = symbolic_config(6);
    auto sections = realize_all_sections(cfg, SectionScaling::classical);
    for (const auto& rl : enumerate_rulings(6, 1)) {
        auto products = pair_products(rl, sections);
        CHECK(rank(product_matrix(rl, products)) == 2);
    }
    for (const auto& rl : membership_set(6)) {
        auto anchors = membership_anchors(6, rl);
        auto rels = ruling_relations(rl, sections, anchors.first, anchors.second);
        CHECK(rels.size() == 3);
        for (const auto& rel : rels) {
            CHECK_FALSE(rel.alpha.is_zero());
            CHECK_FALSE(rel.beta.is_zero());
            // exactly three nonzero coefficients
            int nonzero = 0;
            for (const auto& c : rel.coeffs) nonzero += !c.is_zero();
            CHECK(nonzero == 3);
        }
    }
}

TEST_CASE("relation counts: 4 per (1)-ruling and 25 for the (2)-ruling, 529 in total (r=7)") {
    SplitMix64 rng(7);
    PointConfig cfg = sample_config(7, rng);
    auto sections = realize_all_sections(cfg, SectionScaling::classical);
    std::size_t total = 0;
    for (const auto& rl : enumerate_rulings(7, 1)) {
        auto kernel = ruling_kernel(rl, sections);
        CHECK(kernel.size() == 4);
        total += kernel.size();
    }
    auto k2 = enumerate_rulings(7, 2);
    auto kernel = ruling_kernel(k2[0], sections);
    CHECK(kernel.size() == 25);
    total += kernel.size();
    CHECK(total == 529);
}

TEST_CASE("torsor points: all coordinates nonzero and every relation vanishes") {
    PointConfig cfg = numeric_config(6, {Rational(5), Rational(2), Rational(7), Rational(3)});
    REQUIRE(general_position(cfg).ok);
    auto sections = realize_all_sections(cfg, SectionScaling::classical);

    // a point on the line through p1 and p2 (z = 0) must be rejected
    ParamElement one = ParamElement::constant(cfg.params, 1);
    std::array<ParamElement, 3> on_line{one, ParamElement::constant(cfg.params, 4),
                                        ParamElement::constant(cfg.params, 0)};
    CHECK_THROWS_AS(torsor_point(cfg, on_line, sections), DegeneracyError);

    std::array<ParamElement, 3> q{one, ParamElement::constant(cfg.params, 2),
                                  ParamElement::constant(cfg.params, 5)};
    auto pt = torsor_point(cfg, q, sections);
    CHECK(pt.size() == 27);
    for (const auto& [l, v] : pt) CHECK_FALSE(v.is_zero());

    // all 81 relations (3 per (1)-ruling) vanish at the point
    std::size_t checked = 0;
    for (const auto& rl : enumerate_rulings(6, 1)) {
        auto rels = ruling_relations(rl, sections, rl.pairs[0], rl.pairs[1]);
        for (const auto& rel : rels) {
            CHECK(relation_holds(rel, rl, pt));
            ++checked;
        }
    }
    CHECK(checked == 81);
}

TEST_CASE("symbolic torsor point satisfies the membership relations exactly") {
    PointConfig cfg = symbolic_config(6);
    auto sections = realize_all_sections(cfg, SectionScaling::classical);
    ParamElement one = ParamElement::constant(cfg.params, 1);
    std::array<ParamElement, 3> q{one, ParamElement::constant(cfg.params, Rational(3) / 2),
                                  ParamElement::constant(cfg.params, Rational(-7) / 3)};
    auto pt = torsor_point(cfg, q, sections);
    for (const auto& rl : membership_set(6)) {
        auto anchors = membership_anchors(6, rl);
        for (const auto& rel : ruling_relations(rl, sections, anchors.first, anchors.second))
            CHECK(relation_holds(rel, rl, pt));
    }
}
