#pragma once

#include "torsor/cone.hpp"

namespace torsor {

namespace detail {

// The 56 coordinates as the antisymmetric pair arrays x^{ij}, y_{ij} with
// indices in 1..8: x^{i8} are the eta, x^{kl} (k,l<8) the nu, y_{i8} the
// lambda, y_{kl} the mu coordinates; x^{ba} = -x^{ab}, y_{ba} = -y_{ab}.
struct E7Coords {
    VarTablePtr vars = primed_vars(7);

    Poly x(int i, int j) const {
        require(i != j && i >= 1 && i <= 8 && j >= 1 && j <= 8, "bad x index");
        bool flip = i > j;
        if (flip) std::swap(i, j);
        CurveLabel l = (j == 8) ? CurveLabel::E(i) : CurveLabel::Q7(i, j);
        Poly v = Poly::variable(vars, curve_index(7, l));
        return flip ? -v : v;
    }
    Poly y(int i, int j) const {
        require(i != j && i >= 1 && i <= 8 && j >= 1 && j <= 8, "bad y index");
        bool flip = i > j;
        if (flip) std::swap(i, j);
        CurveLabel l = (j == 8) ? CurveLabel::C(i) : CurveLabel::M(i, j);
        Poly v = Poly::variable(vars, curve_index(7, l));
        return flip ? -v : v;
    }
};

inline int permutation_sign(const std::vector<int>& p) {
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) sign = -sign;
    return sign;
}

} // namespace detail

// u^{ijkl} for a 4-subset {i<j<k<l} of {1..8} with complement {a<b<c<d}:
//   x^{ij}x^{kl} - x^{ik}x^{jl} + x^{il}x^{jk}
//   + sgn(i,j,k,l,a,b,c,d) * (y_{ab}y_{cd} - y_{ac}y_{bd} + y_{ad}y_{bc}).
inline Poly e7_u_equation(int i, int j, int k, int l) {
    detail::E7Coords c;
    std::vector<int> perm{i, j, k, l};
    std::vector<int> comp;
    for (int t = 1; t <= 8; ++t)
        if (t != i && t != j && t != k && t != l) comp.push_back(t);
    int a = comp[0], b = comp[1], cc = comp[2], d = comp[3];
    for (int t : comp) perm.push_back(t);
    Rational sigma(detail::permutation_sign(perm));
    Poly u = c.x(i, j) * c.x(k, l) - c.x(i, k) * c.x(j, l) + c.x(i, l) * c.x(j, k);
    Poly w = c.y(a, b) * c.y(cc, d) - c.y(a, cc) * c.y(b, d) + c.y(a, d) * c.y(b, cc);
    return u + w.scaled(sigma);
}

// v^i_j = sum over k outside {i,j} of x^{ik} y_{kj}  (i != j).
inline Poly e7_v_equation(int i, int j) {
    detail::E7Coords c;
    Poly v(c.vars);
    for (int k = 1; k <= 8; ++k) {
        if (k == i || k == j) continue;
        v += c.x(i, k) * c.y(k, j);
    }
    return v;
}

// The eight 28-term diagonal equations
//   v^i_i = -3/4 sum_{j != i} x^{ij}y_{ij} + 1/4 sum_{j<k, both != i} x^{jk}y_{jk}.
inline Poly e7_diag_equation(int i) {
    detail::E7Coords c;
    Poly v(c.vars);
    for (int j = 1; j <= 8; ++j) {
        if (j == i) continue;
        int a = std::min(i, j), b = std::max(i, j);
        v += (c.x(a, b) * c.y(a, b)).scaled(Rational(-3, 4));
    }
    for (int j = 1; j <= 8; ++j)
        for (int k = j + 1; k <= 8; ++k) {
            if (j == i || k == i) continue;
            v += (c.x(j, k) * c.y(j, k)).scaled(Rational(1, 4));
        }
    return v;
}

// All 134 defining equations of H_7: 70 u, 56 off-diagonal v (each tagged
// with its ruling), 8 diagonal v tagged with the anticanonical class.
inline std::vector<ConeEquation> h7_equations() {
    std::vector<ConeEquation> out;
    auto push = [&](std::string name, DivisorClass ruling, Poly p, bool diag = false,
                    int diag_index = 0) {
        ConeEquation eq;
        eq.name = std::move(name);
        eq.ruling = ruling;
        eq.diagonal = diag;
        eq.diag_index = diag_index;
        eq.poly = std::move(p);
        detail::fill_terms(eq, 7);
        out.push_back(std::move(eq));
    };
    DivisorClass sumE{7, 0, {}};
    for (int t = 1; t <= 7; ++t) sumE = sumE + DivisorClass::E(7, t);

    // v^8_j <-> D1_j = H - E_j
    for (int j = 1; j <= 7; ++j)
        push("v8_" + std::to_string(j), DivisorClass::H(7) - DivisorClass::E(7, j),
             e7_v_equation(8, j));
    // u^{ijk8} <-> D2_{ijk}
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j)
            for (int k = j + 1; k <= 7; ++k)
                push("u" + std::to_string(i) + std::to_string(j) + std::to_string(k) + "8",
                     DivisorClass::H(7).scaled(2) - sumE + DivisorClass::E(7, i) +
                         DivisorClass::E(7, j) + DivisorClass::E(7, k),
                     e7_u_equation(i, j, k, 8));
    // v^i_j <-> D3_{ij}
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j) {
            if (i == j) continue;
            push("v" + std::to_string(i) + "_" + std::to_string(j),
                 DivisorClass::H(7).scaled(3) - sumE + DivisorClass::E(7, i) -
                     DivisorClass::E(7, j),
                 e7_v_equation(i, j));
        }
    // u^{ijkl} within 1..7 <-> D4_{ijkl}
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j)
            for (int k = j + 1; k <= 7; ++k)
                for (int l = k + 1; l <= 7; ++l)
                    push("u" + std::to_string(i) + std::to_string(j) + std::to_string(k) +
                             std::to_string(l),
                         DivisorClass::H(7).scaled(4) - sumE.scaled(2) + DivisorClass::E(7, i) +
                             DivisorClass::E(7, j) + DivisorClass::E(7, k) + DivisorClass::E(7, l),
                         e7_u_equation(i, j, k, l));
    // v^i_8 <-> D5_i
    for (int i = 1; i <= 7; ++i)
        push("v" + std::to_string(i) + "_8",
             DivisorClass::H(7).scaled(5) - sumE.scaled(2) + DivisorClass::E(7, i),
             e7_v_equation(i, 8));
    // v^i_i <-> -K7 (eight diagonal equations)
    for (int i = 1; i <= 8; ++i)
        push("v" + std::to_string(i) + "_" + std::to_string(i), DivisorClass::anticanonical(7),
             e7_diag_equation(i), true, i);
    return out;
}

// The defining equation tagged with a given (1)-ruling class.
inline const ConeEquation& equation_for_ruling(const std::vector<ConeEquation>& eqs,
                                               const DivisorClass& cls) {
    for (const auto& eq : eqs)
        if (!eq.diagonal && eq.ruling == cls) return eq;
    throw InvalidInput("no cone equation for ruling " + cls.str());
}

} // namespace torsor
