#pragma once

#include <optional>

#include "torsor/sections.hpp"

namespace torsor {

// Quadratic relation between the pair products of a ruling, anchored as
//   F_j = xi_j + alpha_j * xi_{anchor1} + beta_j * xi_{anchor2},
// where xi_i is the product of the two section coordinates of pair i.
struct CoxRelation {
    DivisorClass ruling;
    int index = 0;                       // j, 1-based over the non-anchor pairs
    std::size_t j_pair = 0;              // pair position carrying coefficient 1
    std::size_t anchor1 = 0, anchor2 = 0;
    ParamElement alpha, beta;
    std::vector<ParamElement> coeffs;    // full coefficient vector over the ruling's pairs
};

using PairRef = std::pair<CurveLabel, CurveLabel>;

inline std::size_t pair_position(const Ruling& rl, const PairRef& p) {
    PairRef q = p;
    if (q.second < q.first) std::swap(q.first, q.second);
    for (std::size_t i = 0; i < rl.pairs.size(); ++i)
        if (rl.pairs[i] == q) return i;
    throw InvalidInput("pair " + q.first.str() + "+" + q.second.str() + " not in ruling " +
                       rl.symbol);
}

// Products of the realized sections for each pair of the ruling.
inline std::vector<PlanePoly> pair_products(const Ruling& rl,
                                            const std::map<CurveLabel, PlanePoly>& sections) {
    std::vector<PlanePoly> out;
    out.reserve(rl.pairs.size());
    for (const auto& [a, b] : rl.pairs) out.push_back(sections.at(a) * sections.at(b));
    return out;
}

// Coefficient matrix of the pair products over the plane monomials of the
// ruling's degree (rows: monomials, columns: pairs).
inline ParamMatrix product_matrix(const Ruling& rl, const std::vector<PlanePoly>& products) {
    unsigned degree = static_cast<unsigned>(rl.cls.d);
    auto monos = plane_monomials(degree);
    ParamMatrix m(monos.size(), products.size());
    for (std::size_t j = 0; j < products.size(); ++j)
        for (std::size_t i = 0; i < monos.size(); ++i)
            m.at(i, j) = products[j].coefficient(monos[i]);
    return m;
}

namespace detail {
inline VarTablePtr params_of(const std::map<CurveLabel, PlanePoly>& sections) {
    for (const auto& [l, p] : sections)
        for (const auto& [m, c] : p.terms()) return c.vars();
    return empty_vars();
}
} // namespace detail

// The r-3 anchored relations of a (1)-ruling. The two anchor pairs span the
// 2-dimensional space of sections of degree D; every other pair product is an
// exact linear combination of them.
inline std::vector<CoxRelation> ruling_relations(const Ruling& rl,
                                                 const std::map<CurveLabel, PlanePoly>& sections,
                                                 const PairRef& anchor1, const PairRef& anchor2) {
    require(rl.k == 1, "anchored relations exist only for (1)-rulings");
    auto products = pair_products(rl, sections);
    std::size_t a1 = pair_position(rl, anchor1), a2 = pair_position(rl, anchor2);
    require(a1 != a2, "anchors must be distinct pairs");

    // two monomial rows on which the anchor products are independent
    unsigned degree = static_cast<unsigned>(rl.cls.d);
    auto monos = plane_monomials(degree);
    std::optional<std::pair<std::size_t, std::size_t>> rows;
    for (std::size_t i = 0; i < monos.size() && !rows; ++i)
        for (std::size_t j = i + 1; j < monos.size() && !rows; ++j) {
            ParamElement d = products[a1].coefficient(monos[i]) * products[a2].coefficient(monos[j]) -
                             products[a1].coefficient(monos[j]) * products[a2].coefficient(monos[i]);
            if (!d.is_zero()) rows = {i, j};
        }
    require_nondegenerate(rows.has_value(), "anchor products are linearly dependent for ruling " +
                                                rl.symbol);
    auto [ri, rj] = *rows;
    ParamElement p1i = products[a1].coefficient(monos[ri]), p1j = products[a1].coefficient(monos[rj]);
    ParamElement p2i = products[a2].coefficient(monos[ri]), p2j = products[a2].coefficient(monos[rj]);
    ParamElement dd = p1i * p2j - p1j * p2i;

    std::vector<CoxRelation> out;
    int index = 1;
    for (std::size_t j = 0; j < products.size(); ++j) {
        if (j == a1 || j == a2) continue;
        ParamElement qi = products[j].coefficient(monos[ri]), qj = products[j].coefficient(monos[rj]);
        // q + alpha*p1 + beta*p2 = 0 on the two chosen rows
        ParamElement alpha = (p2i * qj - p2j * qi) / dd;
        ParamElement beta = (p1j * qi - p1i * qj) / dd;
        PlanePoly check = products[j] + products[a1].scaled(alpha) + products[a2].scaled(beta);
        require_nondegenerate(check.is_zero(), "pair products of ruling " + rl.symbol +
                                                   " do not span a 2-dimensional space");
        require(!alpha.is_zero() && !beta.is_zero(),
                "relation coefficients must be non-vanishing (ruling " + rl.symbol + ")");
        CoxRelation rel;
        rel.ruling = rl.cls;
        rel.index = index++;
        rel.j_pair = j;
        rel.anchor1 = a1;
        rel.anchor2 = a2;
        rel.alpha = alpha;
        rel.beta = beta;
        rel.coeffs.assign(products.size(), ParamElement());
        rel.coeffs[j] = ParamElement::constant(detail::params_of(sections), 1);
        rel.coeffs[a1] = alpha;
        rel.coeffs[a2] = beta;
        out.push_back(std::move(rel));
    }
    return out;
}

// Unanchored relations: a kernel basis of the product matrix. Used for the
// (2)-ruling -K7 (25 relations) and for rank/count checks.
inline std::vector<std::vector<ParamElement>> ruling_kernel(
    const Ruling& rl, const std::map<CurveLabel, PlanePoly>& sections) {
    auto products = pair_products(rl, sections);
    return kernel_basis(product_matrix(rl, products));
}

} // namespace torsor
