#pragma once

#include "torsor/e6.hpp"
#include "torsor/e7.hpp"
#include "torsor/relations.hpp"

namespace torsor {

// Variable table of the rescaling factors xi''(E), one per (-1)-curve, in the
// generator order; names carry a double prime.
inline VarTablePtr rescaling_vars(int r) {
    static std::map<int, VarTablePtr> cache;
    auto it = cache.find(r);
    if (it != cache.end()) return it->second;
    std::vector<std::string> names;
    for (const auto& l : enumerate_minus_one_curves(r)) names.push_back(coordinate_name(l, r, 2));
    return cache.emplace(r, make_vars(std::move(names))).first->second;
}

// The Pic-degree of a monomial in the rescaling symbols (sum of the curve
// classes, weighted by exponents).
inline DivisorClass sym_monomial_degree(int r, const Monomial& m) {
    DivisorClass d{r, 0, {}};
    const auto& order = curve_order(r);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (unsigned t = 0; t < m[i]; ++t) d = d + class_of(order[i], r);
    return d;
}

// The two homogeneous conditions of degree D on the rescaling factors:
//   g_{D,1} = eps_{a1} xi''_{a1} - sum_j eps_j alpha_j xi''_j,
//   g_{D,2} = eps_{a2} xi''_{a2} - sum_j eps_j beta_j  xi''_j,
// with the eps taken from the cone equation p_D and alpha, beta from the
// anchored relations F_{D,j}.
struct ConditionPair {
    DivisorClass ruling;
    std::string symbol;
    SymPoly g1, g2;
};

namespace detail {

inline SymPoly pair_monomial(int r, const CurveLabel& a, const CurveLabel& b,
                             const ParamElement& coeff) {
    SymPoly p(rescaling_vars(r));
    Monomial m(curve_order(r).size(), 0);
    m[curve_index(r, a)] += 1;
    m[curve_index(r, b)] += 1;
    p.add_term(std::move(m), coeff);
    return p;
}

} // namespace detail

inline ConditionPair build_conditions(int r, const Ruling& rl,
                                      const std::vector<CoxRelation>& relations,
                                      const ConeEquation& cone_eq) {
    require(cone_eq.ruling == rl.cls, "cone equation does not match the ruling");
    require(relations.size() == static_cast<std::size_t>(r - 3),
            "expected r-3 anchored relations");
    const std::size_t a1 = relations.front().anchor1;
    const std::size_t a2 = relations.front().anchor2;
    for (const auto& rel : relations)
        require(rel.anchor1 == a1 && rel.anchor2 == a2 && rel.ruling == rl.cls,
                "relations are not anchored compatibly");

    auto eps = [&](std::size_t pair_idx) {
        Rational c = pair_coefficient(cone_eq, rl.pairs[pair_idx].first, rl.pairs[pair_idx].second);
        require(c == 1 || c == -1, "cone equation coefficient is not a sign for ruling " +
                                       rl.symbol);
        return c;
    };

    VarTablePtr params;
    {
        params = empty_vars();
        for (const auto& rel : relations)
            if (!rel.alpha.vars()->empty()) {
                params = rel.alpha.vars();
                break;
            }
    }
    auto sym = [&](std::size_t i, const ParamElement& c) {
        return detail::pair_monomial(r, rl.pairs[i].first, rl.pairs[i].second, c);
    };
    ParamElement one = ParamElement::constant(params, 1);

    ConditionPair out;
    out.ruling = rl.cls;
    out.symbol = rl.symbol;
    out.g1 = sym(a1, one * eps(a1));
    out.g2 = sym(a2, one * eps(a2));
    for (const auto& rel : relations) {
        ParamElement e = one * eps(rel.j_pair);
        out.g1 -= sym(rel.j_pair, e * rel.alpha);
        out.g2 -= sym(rel.j_pair, e * rel.beta);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Anchor choices. For r=6 the anchor pairs per membership ruling are pinned
// to reproduce the traditional coefficient tables; for r=7 the uniform rule
// follows the elimination roles (anchors are the pairs whose factors the two
// conditions express).
// ---------------------------------------------------------------------------

inline std::pair<PairRef, PairRef> degree3_anchors(const CurveLabel& e) {
    using L = CurveLabel;
    if (e == L::M(1, 2)) return {{L::E(3), L::M(2, 3)}, {L::E(1), L::M(1, 2)}};
    if (e == L::M(1, 3)) return {{L::E(1), L::M(1, 3)}, {L::E(2), L::M(2, 3)}};
    if (e == L::M(1, 4)) return {{L::E(1), L::M(1, 4)}, {L::E(2), L::M(2, 4)}};
    if (e == L::M(1, 5)) return {{L::E(2), L::M(2, 5)}, {L::E(1), L::M(1, 5)}};
    if (e == L::M(1, 6)) return {{L::E(1), L::M(1, 6)}, {L::E(2), L::M(2, 6)}};
    if (e == L::Q6(2)) return {{L::M(3, 4), L::M(5, 6)}, {L::M(3, 5), L::M(4, 6)}};
    if (e == L::Q6(3)) return {{L::M(2, 4), L::M(5, 6)}, {L::M(2, 5), L::M(4, 6)}};
    if (e == L::Q6(4)) return {{L::M(2, 3), L::M(5, 6)}, {L::M(2, 5), L::M(3, 6)}};
    if (e == L::Q6(5)) return {{L::M(2, 4), L::M(3, 6)}, {L::M(2, 3), L::M(4, 6)}};
    if (e == L::Q6(6)) return {{L::M(2, 4), L::M(3, 5)}, {L::M(2, 3), L::M(4, 5)}};
    throw InvalidInput("no anchor table entry for " + e.str());
}

// Uniform anchors for r=7, per the staged elimination:
//  - D1_i (i>=3) and D2_{12i}: the pairs containing E1 and E2;
//  - D1_2 and D2_{1ij} (i,j>=3): the pair with the stage's new factor goes to
//    g2, the first pair whose factors are already known goes to g1;
//  - D3_{1i} and D3_21: the cubic pair goes to g2, the first line-conic pair
//    to g1.
inline std::pair<PairRef, PairRef> degree2_anchors(const Ruling& rl) {
    using L = CurveLabel;
    auto pair_with = [&](const CurveLabel& l) -> PairRef {
        for (const auto& p : rl.pairs)
            if (p.first == l || p.second == l) return p;
        throw InvalidInput("ruling " + rl.symbol + " has no pair containing " + l.str());
    };
    const DivisorClass e1 = DivisorClass::E(7, 1), e2 = DivisorClass::E(7, 2);
    const bool meets_e1_pairwise = intersection(rl.cls, e1) == 0; // E1 occurs in a pair
    const bool meets_e2_pairwise = intersection(rl.cls, e2) == 0;
    if (rl.cls.d == 3) {
        // D3_{1i}: pairs (E1,C_i) and (m_{ij}, Q_{1j}); D3_21: (E2,C1), (m_1j, Q_2j)
        PairRef cubic = rl.pairs.front();
        for (const auto& p : rl.pairs)
            if (p.first.kind == CurveKind::E || p.second.kind == CurveKind::E) cubic = p;
        for (const auto& p : rl.pairs)
            if (p.first.kind != CurveKind::E && p.second.kind != CurveKind::E)
                return {p, cubic};
    }
    if (meets_e1_pairwise && meets_e2_pairwise)
        return {pair_with(L::E(1)), pair_with(L::E(2))};
    if (meets_e1_pairwise) {
        // Xi11 stage: g2 expresses the factor paired with E1
        for (const auto& p : rl.pairs)
            if (p.first != L::E(1) && p.second != L::E(1)) return {p, pair_with(L::E(1))};
    }
    throw InvalidInput("no anchor rule for ruling " + rl.symbol);
}

inline std::pair<PairRef, PairRef> membership_anchors(int r, const Ruling& rl) {
    if (r == 6) {
        auto e = label_of(rl.cls - DivisorClass::E(6, 1));
        require(e.has_value(), "membership ruling is not E1 + E");
        return degree3_anchors(*e);
    }
    return degree2_anchors(rl);
}

} // namespace torsor
