#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "torsor/lattice.hpp"
#include "torsor/linalg.hpp"
#include "torsor/param.hpp"

namespace torsor {

// Plane monomials of fixed degree in graded lex order (x > y > z).
inline std::vector<Monomial> plane_monomials(unsigned degree) {
    std::vector<Monomial> out;
    for (int ex = static_cast<int>(degree); ex >= 0; --ex)
        for (int ey = static_cast<int>(degree) - ex; ey >= 0; --ey) {
            int ez = static_cast<int>(degree) - ex - ey;
            out.push_back(Monomial{static_cast<std::uint16_t>(ex), static_cast<std::uint16_t>(ey),
                                   static_cast<std::uint16_t>(ez)});
        }
    return out;
}

inline VarTablePtr plane_vars() {
    static const VarTablePtr t = make_vars({"x", "y", "z"});
    return t;
}

// Homogeneous plane polynomial with coefficients in the parameter field.
using PlanePoly = Polynomial<ParamElement>;

// The r blown-up points. The first four are pinned to the standard frame
// (1:0:0), (0:1:0), (0:0:1), (1:1:1); the rest are (1:*:*) with parameter or
// rational entries.
struct PointConfig {
    int r = 6;
    VarTablePtr params;                              // names of the free parameters (may be empty)
    std::vector<std::array<ParamElement, 3>> points; // size r

    const std::array<ParamElement, 3>& point(int i) const { return points[static_cast<std::size_t>(i - 1)]; }
};

inline std::vector<std::string> parameter_names(int r) {
    if (r == 6) return {"a", "b", "c", "d"};
    return {"a1", "b1", "a2", "b2", "a3", "b3"};
}

namespace detail {

inline PointConfig config_from_values(int r, const std::vector<ParamElement>& vals,
                                      VarTablePtr params) {
    require(r == 6 || r == 7, "PointConfig: r must be 6 or 7");
    require(static_cast<int>(vals.size()) == 2 * (r - 4), "PointConfig: wrong number of values");
    PointConfig cfg;
    cfg.r = r;
    cfg.params = params;
    auto C = [&](int v) { return ParamElement::constant(params, v); };
    cfg.points.push_back({C(1), C(0), C(0)});
    cfg.points.push_back({C(0), C(1), C(0)});
    cfg.points.push_back({C(0), C(0), C(1)});
    cfg.points.push_back({C(1), C(1), C(1)});
    for (int k = 0; k + 1 < static_cast<int>(vals.size()) + 1; k += 2)
        cfg.points.push_back({C(1), vals[static_cast<std::size_t>(k)], vals[static_cast<std::size_t>(k + 1)]});
    return cfg;
}

} // namespace detail

// Fully symbolic configuration: p5 = (1:a:b), p6 = (1:c:d) for r=6, and
// p_{4+i} = (1:a_i:b_i) for r=7.
inline PointConfig symbolic_config(int r) {
    VarTablePtr params = make_vars(parameter_names(r));
    std::vector<ParamElement> vals;
    for (std::size_t i = 0; i < params->size(); ++i)
        vals.push_back(ParamElement::variable(params, i));
    return detail::config_from_values(r, vals, params);
}

// Configuration with the parameters bound to explicit rationals.
inline PointConfig numeric_config(int r, const std::vector<Rational>& values) {
    VarTablePtr none = empty_vars();
    std::vector<ParamElement> vals;
    for (const auto& q : values) vals.push_back(ParamElement::constant(none, q));
    return detail::config_from_values(r, vals, none);
}

// ---------------------------------------------------------------------------
// General position: no three points collinear, no six on a conic, and for
// r=7 each point supports a unique singular cubic through all seven.
// ---------------------------------------------------------------------------

struct GeneralPositionReport {
    bool ok = true;
    std::string witness; // human-readable description of the first violation
};

namespace detail {

inline ParamMatrix evaluation_matrix(const PointConfig& cfg, const std::vector<int>& pts,
                                     unsigned degree) {
    auto monos = plane_monomials(degree);
    ParamMatrix m(pts.size(), monos.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& p = cfg.point(pts[i]);
        for (std::size_t j = 0; j < monos.size(); ++j) {
            ParamElement v = ParamElement::constant(cfg.params, 1);
            for (int k = 0; k < 3; ++k)
                for (unsigned t = 0; t < monos[j][static_cast<std::size_t>(k)]; ++t)
                    v = v * p[static_cast<std::size_t>(k)];
            m.at(i, j) = v;
        }
    }
    return m;
}

// Rows for the cubic through all points that is singular at p_s: evaluation
// at the other points plus the three partial-derivative conditions at p_s.
inline ParamMatrix singular_cubic_matrix(const PointConfig& cfg, int s) {
    auto monos = plane_monomials(3);
    ParamMatrix m(9, monos.size());
    std::size_t row = 0;
    for (int i = 1; i <= cfg.r; ++i) {
        if (i == s) continue;
        const auto& p = cfg.point(i);
        for (std::size_t j = 0; j < monos.size(); ++j) {
            ParamElement v = ParamElement::constant(cfg.params, 1);
            for (int k = 0; k < 3; ++k)
                for (unsigned t = 0; t < monos[j][static_cast<std::size_t>(k)]; ++t)
                    v = v * p[static_cast<std::size_t>(k)];
            m.at(row, j) = v;
        }
        ++row;
    }
    const auto& p = cfg.point(s);
    for (int k = 0; k < 3; ++k, ++row) {
        for (std::size_t j = 0; j < monos.size(); ++j) {
            unsigned e = monos[j][static_cast<std::size_t>(k)];
            if (e == 0) {
                m.at(row, j) = ParamElement(Poly(empty_vars()));
                continue;
            }
            Monomial dm = monos[j];
            dm[static_cast<std::size_t>(k)] = static_cast<std::uint16_t>(e - 1);
            ParamElement v = ParamElement::constant(cfg.params, static_cast<int>(e));
            for (int kk = 0; kk < 3; ++kk)
                for (unsigned t = 0; t < dm[static_cast<std::size_t>(kk)]; ++t)
                    v = v * p[static_cast<std::size_t>(kk)];
            m.at(row, j) = v;
        }
    }
    return m;
}

} // namespace detail

inline GeneralPositionReport general_position(const PointConfig& cfg) {
    const int r = cfg.r;
    // collinearity: 3x3 determinants
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j)
            for (int k = j + 1; k <= r; ++k) {
                ParamMatrix m(3, 3);
                int pts[3] = {i, j, k};
                for (int a = 0; a < 3; ++a)
                    for (int b = 0; b < 3; ++b)
                        m.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) =
                            cfg.point(pts[a])[static_cast<std::size_t>(b)];
                if (det(m).is_zero())
                    return {false, "collinear points p" + std::to_string(i) + ", p" +
                                       std::to_string(j) + ", p" + std::to_string(k)};
            }
    // six on a conic: 6x6 determinants
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
    std::vector<int> six(6);
    auto check_conic = [&](const std::vector<int>& pts) -> bool {
        ParamMatrix m = detail::evaluation_matrix(cfg, pts, 2);
        return !det(m).is_zero();
    };
    if (r == 6) {
        if (!check_conic(idx)) return {false, "all six points lie on a conic"};
    } else {
        for (int skip = 1; skip <= 7; ++skip) {
            std::size_t t = 0;
            for (int i = 1; i <= 7; ++i)
                if (i != skip) six[t++] = i;
            if (!check_conic(six))
                return {false, "the six points other than p" + std::to_string(skip) +
                                   " lie on a conic"};
        }
        // singular-cubic nondegeneracy: each 9x10 constraint matrix has full rank
        for (int s = 1; s <= 7; ++s) {
            if (rank(detail::singular_cubic_matrix(cfg, s)) != 9)
                return {false, "degenerate singular cubic at p" + std::to_string(s)};
        }
    }
    return {true, ""};
}

} // namespace torsor
