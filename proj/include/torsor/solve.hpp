#pragma once

#include <set>

#include "torsor/conditions.hpp"

namespace torsor {

// Result of eliminating the rescaling-factor conditions: every factor meeting
// E1 or E2 is expressed in the free factors (eta'' normalized to 1), and the
// surplus conditions reduce to zero.
struct RescalingAssignment {
    int r = 6;
    VarTablePtr sym_vars;                  // rescaling variable table
    std::vector<CurveLabel> free_labels;   // eta''_1..r plus the free mu''/nu'' factors
    std::map<CurveLabel, SymPoly> bound;   // bound factor -> expression in the free factors

    struct Leftover {
        std::string symbol; // ruling symbol
        int which;          // 1 or 2
        SymPoly residual;
    };
    std::vector<Leftover> leftovers;

    bool leftovers_vanish() const {
        for (const auto& l : leftovers)
            if (!l.residual.is_zero()) return false;
        return true;
    }
};

// The factors that stay free: the exceptional ones and those disjoint from
// both E1 and E2 (N_{r-2} + 2 in total).
inline std::vector<CurveLabel> free_rescaling_labels(int r) {
    std::vector<CurveLabel> out;
    DivisorClass e1 = DivisorClass::E(r, 1), e2 = DivisorClass::E(r, 2);
    for (const auto& l : enumerate_minus_one_curves(r)) {
        if (l.kind == CurveKind::E) {
            out.push_back(l);
            continue;
        }
        DivisorClass c = class_of(l, r);
        if (intersection(c, e1) == 0 && intersection(c, e2) == 0) out.push_back(l);
    }
    return out;
}

inline int count_free_parameters(int r) {
    require(r == 6 || r == 7, "count_free_parameters: r must be 6 or 7");
    return curve_counts()[static_cast<std::size_t>(r - 2)] + 2;
}

namespace detail {

inline SymPoly reduce_bound(const SymPoly& p, int r,
                            const std::map<CurveLabel, SymPoly>& bound) {
    SymPoly out = p;
    for (const auto& [l, expr] : bound) {
        std::size_t v = curve_index(r, l);
        if (out.involves(v)) out = out.substitute(v, expr);
    }
    return out;
}

} // namespace detail

// Staged elimination of the 2|M_r| homogeneous conditions. Stage 0 solves the
// rulings with pairs through both E1 and E2 (two fresh factors each); stage 1
// the rulings whose remaining factor meets both E1 and E2 once; stage 2
// (r=7) the cubic-factor rulings. Each stage-1/2 ruling leaves one surplus
// condition, which must reduce to the zero polynomial.
inline RescalingAssignment solve_system(int r, const std::vector<ConditionPair>& conditions) {
    require(r == 6 || r == 7, "solve_system: r must be 6 or 7");
    RescalingAssignment out;
    out.r = r;
    out.sym_vars = rescaling_vars(r);
    out.free_labels = free_rescaling_labels(r);

    std::set<CurveLabel> frees(out.free_labels.begin(), out.free_labels.end());
    ParamElement one = CoeffTraits<ParamElement>::one();
    for (const auto& c : conditions)
        for (const auto& [m, coeff] : c.g1.terms())
            if (!coeff.vars()->empty()) {
                one = ParamElement::constant(coeff.vars(), 1);
                break;
            }

    // eta'' = 1 via the torus action
    SymPoly one_poly = SymPoly::constant(out.sym_vars, one);
    auto with_eta_one = [&](SymPoly p) {
        for (int i = 1; i <= r; ++i) {
            std::size_t v = curve_index(r, CurveLabel::E(i));
            if (p.involves(v)) p = p.substitute(v, one_poly);
        }
        return p;
    };

    auto stage_of = [&](const DivisorClass& cls) {
        if (r == 7 && cls.d == 3) return 2;
        return intersection(cls, DivisorClass::E(r, 2)) == 0 ? 0 : 1;
    };

    auto unknowns_of = [&](const SymPoly& p, std::set<CurveLabel>& dst) {
        const auto& order = curve_order(r);
        for (const auto& [m, c] : p.terms())
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i] != 0 && !frees.count(order[i]) && !out.bound.count(order[i]))
                    dst.insert(order[i]);
    };

    for (int stage = 0; stage <= 2; ++stage) {
        for (const auto& cond : conditions) {
            if (stage_of(cond.ruling) != stage) continue;
            SymPoly g1 = detail::reduce_bound(with_eta_one(cond.g1), r, out.bound);
            SymPoly g2 = detail::reduce_bound(with_eta_one(cond.g2), r, out.bound);
            std::set<CurveLabel> unknown_set;
            unknowns_of(g1, unknown_set);
            unknowns_of(g2, unknown_set);
            std::vector<CurveLabel> unknowns(unknown_set.begin(), unknown_set.end());

            if (unknowns.size() == 2) {
                std::size_t vu = curve_index(r, unknowns[0]), vv = curve_index(r, unknowns[1]);
                auto [a1p, rest1] = g1.split_linear(vu);
                auto [b1p, c1] = rest1.split_linear(vv);
                auto [a2p, rest2] = g2.split_linear(vu);
                auto [b2p, c2] = rest2.split_linear(vv);
                require(a1p.is_constant() && b1p.is_constant() && a2p.is_constant() &&
                            b2p.is_constant(),
                        "stage-0 conditions are not linear in the fresh factors");
                ParamElement a1 = a1p.constant_value(), b1 = b1p.constant_value();
                ParamElement a2 = a2p.constant_value(), b2 = b2p.constant_value();
                ParamElement dd = a1 * b2 - a2 * b1;
                require(!dd.is_zero(), "singular 2x2 system for ruling " + cond.symbol);
                // a*u + b*v + c = 0 for both conditions; Cramer
                SymPoly u = c2.scaled(b1 / dd) - c1.scaled(b2 / dd);
                SymPoly v = c1.scaled(a2 / dd) - c2.scaled(a1 / dd);
                out.bound.emplace(unknowns[0], std::move(u));
                out.bound.emplace(unknowns[1], std::move(v));
            } else if (unknowns.size() == 1) {
                std::size_t vu = curve_index(r, unknowns[0]);
                auto [a2p, c2] = g2.split_linear(vu);
                auto [a1p, c1] = g1.split_linear(vu);
                require(a1p.is_constant() && a2p.is_constant(),
                        "condition is not linear in the fresh factor");
                ParamElement a1 = a1p.constant_value(), a2 = a2p.constant_value();
                // bind from the second condition when possible, as in the
                // staged elimination; the other condition becomes a surplus
                bool use_g2 = !a2.is_zero();
                ParamElement coeff = use_g2 ? a2 : a1;
                require(!coeff.is_zero(), "fresh factor has vanishing coefficient in " + cond.symbol);
                SymPoly expr = (use_g2 ? c2 : c1).scaled(-(one / coeff));
                out.bound.emplace(unknowns[0], expr);
                SymPoly surplus = (use_g2 ? g1 : g2).substitute(vu, expr);
                out.leftovers.push_back({cond.symbol, use_g2 ? 1 : 2, std::move(surplus)});
            } else {
                out.leftovers.push_back({cond.symbol, 1, g1});
                out.leftovers.push_back({cond.symbol, 2, g2});
            }
        }
    }

    for (const auto& l : out.leftovers)
        require(l.residual.is_zero(), "surplus condition for ruling " + l.symbol +
                                          " does not vanish; degenerate configuration or "
                                          "construction bug");
    for (const auto& [l, expr] : out.bound)
        require(!expr.is_zero(), "bound factor " + l.str() + " is identically zero");
    return out;
}

} // namespace torsor
