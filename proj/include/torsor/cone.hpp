#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "torsor/lattice.hpp"
#include "torsor/param.hpp"

namespace torsor {

// Coordinate table of the ambient affine space: one primed variable per
// (-1)-curve, in the generator order.
inline VarTablePtr primed_vars(int r) {
    static std::map<int, VarTablePtr> cache;
    auto it = cache.find(r);
    if (it != cache.end()) return it->second;
    std::vector<std::string> names;
    for (const auto& l : enumerate_minus_one_curves(r)) names.push_back(coordinate_name(l, r, 1));
    return cache.emplace(r, make_vars(std::move(names))).first->second;
}

inline const std::vector<CurveLabel>& curve_order(int r) {
    static std::map<int, std::vector<CurveLabel>> cache;
    auto it = cache.find(r);
    if (it != cache.end()) return it->second;
    return cache.emplace(r, enumerate_minus_one_curves(r)).first->second;
}

inline std::size_t curve_index(int r, const CurveLabel& l) {
    const auto& order = curve_order(r);
    auto it = std::lower_bound(order.begin(), order.end(), l);
    require(it != order.end() && *it == l, "unknown curve label " + l.str());
    return static_cast<std::size_t>(it - order.begin());
}

// One defining quadric of the affine cone H_r, tagged with its ruling (or,
// for the eight diagonal equations of r=7, with the anticanonical class).
struct ConeEquation {
    std::string name;
    DivisorClass ruling;
    bool diagonal = false; // one of the v^i_i equations (r=7)
    int diag_index = 0;
    Poly poly; // quadratic over primed_vars(r)
    std::vector<std::tuple<CurveLabel, CurveLabel, Rational>> terms;
};

namespace detail {

// Splits a quadratic polynomial over the coordinate table into
// (curve, curve, coefficient) monomial records.
inline void fill_terms(ConeEquation& eq, int r) {
    eq.terms.clear();
    for (const auto& [m, c] : eq.poly.terms()) {
        std::vector<std::size_t> vars;
        for (std::size_t i = 0; i < m.size(); ++i) {
            require(m[i] <= 1, "cone equation has a squared coordinate");
            if (m[i] == 1) vars.push_back(i);
        }
        require(vars.size() == 2, "cone equation monomial is not quadratic");
        eq.terms.emplace_back(curve_order(r)[vars[0]], curve_order(r)[vars[1]], c);
    }
}

} // namespace detail

// The sign (or rational coefficient) of the monomial of `eq` supported on an
// unordered pair of curves; zero if absent.
inline Rational pair_coefficient(const ConeEquation& eq, const CurveLabel& a, const CurveLabel& b) {
    for (const auto& [x, y, c] : eq.terms)
        if ((x == a && y == b) || (x == b && y == a)) return c;
    return Rational(0);
}

// Evaluates every equation at a coordinate vector (indexed in the generator
// order); exact residuals.
struct Residual {
    std::string name;
    ParamElement value;
};

inline std::vector<Residual> verify_on_cone(const std::vector<ParamElement>& coords, int r,
                                            const std::vector<ConeEquation>& equations) {
    require(coords.size() == curve_order(r).size(), "coordinate vector has wrong length");
    ParamElement one = CoeffTraits<ParamElement>::one();
    for (const auto& c : coords)
        if (!c.vars()->empty()) {
            one = ParamElement::constant(c.vars(), 1);
            break;
        }
    std::vector<Residual> out;
    out.reserve(equations.size());
    for (const auto& eq : equations) {
        ParamElement acc;
        for (const auto& [a, b, c] : eq.terms)
            acc = acc + coords[curve_index(r, a)] * coords[curve_index(r, b)] * c;
        out.push_back({eq.name, acc});
    }
    return out;
}

inline std::vector<Residual> nonzero_residuals(const std::vector<Residual>& rs) {
    std::vector<Residual> out;
    for (const auto& r : rs)
        if (!r.value.is_zero()) out.push_back(r);
    return out;
}

} // namespace torsor
