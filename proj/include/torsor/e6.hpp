#pragma once

#include "torsor/cone.hpp"

namespace torsor {

// The cubic form F on the 27-dimensional space, built from the three
// classical 3x3 coordinate matrices: F = det M1 + det M2 + det M3 - tr(M1 M2 M3).
// Its 45 monomials are the triangles of (-1)-curves, 9 with sign +1.
inline Poly e6_cubic_form() {
    const VarTablePtr vars = primed_vars(6);
    auto v = [&](const CurveLabel& l) { return Poly::variable(vars, curve_index(6, l)); };
    auto E = [&](int i) { return v(CurveLabel::E(i)); };
    auto M = [&](int i, int j) { return v(CurveLabel::M(i, j)); };
    auto L = [&](int i) { return v(CurveLabel::Q6(i)); };

    Poly m1[3][3] = {{E(1), L(1), M(2, 3)}, {E(2), L(2), M(1, 3)}, {E(3), L(3), M(1, 2)}};
    Poly m2[3][3] = {{L(4), L(5), L(6)}, {E(4), E(5), E(6)}, {M(5, 6), M(4, 6), M(4, 5)}};
    Poly m3[3][3] = {{M(1, 4), M(2, 4), M(3, 4)}, {M(1, 5), M(2, 5), M(3, 5)},
                     {M(1, 6), M(2, 6), M(3, 6)}};

    auto det3 = [&](Poly m[3][3]) {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    Poly f = det3(m1) + det3(m2) + det3(m3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) f -= m1[i][j] * m2[j][k] * m3[k][i];
    return f;
}

// The 27 defining equations of H_6: the partial derivatives of the cubic
// form, the derivative along xi'(E) tagged with the ruling -K6 - E.
inline std::vector<ConeEquation> h6_equations() {
    Poly f = e6_cubic_form();
    std::vector<ConeEquation> out;
    const auto& order = curve_order(6);
    for (std::size_t i = 0; i < order.size(); ++i) {
        ConeEquation eq;
        eq.ruling = DivisorClass::anticanonical(6) - class_of(order[i], 6);
        eq.name = "p[" + ruling_symbol(eq.ruling) + "]";
        eq.poly = f.derivative(i);
        detail::fill_terms(eq, 6);
        out.push_back(std::move(eq));
    }
    return out;
}

} // namespace torsor
