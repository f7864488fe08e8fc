#pragma once

#include "torsor/e6.hpp"
#include "torsor/e7.hpp"

namespace torsor {

// Free coordinates of the cone parametrization: the curves disjoint from E1
// (that is, the coordinates eta'_2..eta'_r, mu'_{jk} for 2<=j<k<=r, plus
// lambda'_1 for r=6 / nu'_{1l} for r=7), together with eta'_1.
inline std::vector<CurveLabel> psi_free_labels(int r) {
    std::vector<CurveLabel> out{CurveLabel::E(1)};
    for (const auto& l : neighbors(CurveLabel::E(1), r, 0)) out.push_back(l);
    return out;
}

// Solves a single cone equation, linear in the coordinate `unknown`, against
// the values bound so far.
inline ParamElement solve_equation_for(const ConeEquation& eq, const CurveLabel& unknown,
                                       const std::map<CurveLabel, ParamElement>& values) {
    ParamElement num, den;
    for (const auto& [a, b, c] : eq.terms) {
        if (a == unknown || b == unknown) {
            const CurveLabel& other = (a == unknown) ? b : a;
            require(other != unknown, "equation is quadratic in the unknown");
            den = den + values.at(other) * c;
        } else {
            num = num + values.at(a) * values.at(b) * c;
        }
    }
    require(!den.is_zero(), "cannot solve " + eq.name + " for " + unknown.str() +
                                ": coefficient vanishes (eta' must be nonzero)");
    return -num / den;
}

struct PsiOptions {
    // For r=7 the last step solves the diagonal equation v^1_1 by default; the
    // off-diagonal v^2_1 is an equivalent alternative on eta'_2 != 0.
    bool use_v21_for_lambda1 = false;
};

// The section U_{r-1} x (A^1 \ 0) -> H_r: given values for the free
// coordinates, fills in every other coordinate by solving the equations
// p_{E1+E} (and, for r=7, one diagonal equation for lambda'_1).
inline std::map<CurveLabel, ParamElement> psi_parametrize(
    int r, const std::map<CurveLabel, ParamElement>& free_values,
    const std::vector<ConeEquation>& equations, PsiOptions opts = {}) {
    require(r == 6 || r == 7, "psi_parametrize: r must be 6 or 7");
    std::map<CurveLabel, ParamElement> values = free_values;
    for (const auto& l : psi_free_labels(r))
        require(values.count(l) == 1, "missing free coordinate " + l.str());

    std::map<DivisorClass, const ConeEquation*> by_class;
    for (const auto& eq : equations)
        if (!eq.diagonal) by_class[eq.ruling] = &eq;

    DivisorClass e1 = DivisorClass::E(r, 1);
    for (const auto& e : neighbors(CurveLabel::E(1), r, 1)) {
        const ConeEquation* eq = by_class.at(e1 + class_of(e, r));
        values[e] = solve_equation_for(*eq, e, values);
    }
    if (r == 7) {
        const ConeEquation* diag = nullptr;
        for (const auto& eq : equations) {
            if (opts.use_v21_for_lambda1) {
                if (!eq.diagonal && eq.name == "v2_1") diag = &eq;
            } else {
                if (eq.diagonal && eq.diag_index == 1) diag = &eq;
            }
        }
        require(diag != nullptr, "lambda'_1 equation not found");
        values[CurveLabel::C(1)] = solve_equation_for(*diag, CurveLabel::C(1), values);
    }
    return values;
}

// Symbolic inputs for the parametrization: eta' all 1, the remaining free
// coordinates as formal variables named after themselves.
inline std::map<CurveLabel, ParamElement> psi_symbolic_inputs(int r) {
    std::vector<std::string> names;
    std::vector<CurveLabel> symbolic;
    for (const auto& l : psi_free_labels(r)) {
        if (l.kind == CurveKind::E) continue;
        symbolic.push_back(l);
        names.push_back(coordinate_name(l, r, 1));
    }
    VarTablePtr vars = make_vars(names);
    std::map<CurveLabel, ParamElement> values;
    for (int i = 1; i <= r; ++i)
        values[CurveLabel::E(i)] = ParamElement::constant(vars, 1);
    for (std::size_t i = 0; i < symbolic.size(); ++i)
        values[symbolic[i]] = ParamElement::variable(vars, names[i]);
    return values;
}

inline std::vector<ParamElement> coordinate_vector(int r,
                                                   const std::map<CurveLabel, ParamElement>& m) {
    std::vector<ParamElement> out;
    for (const auto& l : curve_order(r)) out.push_back(m.at(l));
    return out;
}

} // namespace torsor
