#pragma once

#include <map>

#include "torsor/config.hpp"

namespace torsor {

// How realized section polynomials are scaled.
//  - monic: first nonzero coefficient (graded lex) is 1.
//  - classical: interpolation-determinant normalization. Lines are the
//    determinant det[(x,y,z); p_i; p_j] with i<j; conics and cubics take the
//    cofactor expansion of the interpolation determinant along the monomial
//    row (points in increasing index order, derivative rows last, columns in
//    graded lex order). This is the normalization under which the quadratic
//    relations carry the traditional coefficient tables.
enum class SectionScaling { monic, classical };

struct SectionRealization {
    CurveLabel label;
    PlanePoly poly; // constant 1 for exceptional curves
};

namespace detail {

// Constraint matrix whose 1-dimensional kernel is the section's coefficient
// vector: point evaluations (increasing index), then derivative rows for the
// singular point of a cubic.
inline ParamMatrix section_constraints(const PointConfig& cfg, const CurveLabel& l) {
    switch (l.kind) {
        case CurveKind::M:
            return evaluation_matrix(cfg, {l.idx[0], l.idx[1]}, 1);
        case CurveKind::Q: {
            std::vector<int> pts;
            for (int i = 1; i <= cfg.r; ++i)
                if (std::find(l.idx.begin(), l.idx.end(), i) == l.idx.end()) pts.push_back(i);
            return evaluation_matrix(cfg, pts, 2);
        }
        case CurveKind::C:
            return singular_cubic_matrix(cfg, l.idx[0]);
        default:
            require(false, "section_constraints: exceptional curve has no constraints");
    }
    return {};
}

inline PlanePoly poly_from_coeffs(const std::vector<ParamElement>& coeffs, unsigned degree) {
    auto monos = plane_monomials(degree);
    PlanePoly p(plane_vars());
    for (std::size_t j = 0; j < monos.size(); ++j) p.add_term(monos[j], coeffs[j]);
    return p;
}

// Cofactor vector: coefficient of column j is (-1)^j det(minor_j). This is
// the expansion of the square interpolation determinant along its first row.
inline std::vector<ParamElement> cofactor_coeffs(const ParamMatrix& m) {
    require(m.cols() == m.rows() + 1, "cofactor_coeffs: need n x (n+1) matrix");
    std::vector<ParamElement> out(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        ParamMatrix minor(m.rows(), m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i) {
            std::size_t t = 0;
            for (std::size_t k = 0; k < m.cols(); ++k) {
                if (k == j) continue;
                minor.at(i, t++) = m.at(i, k);
            }
        }
        ParamElement d = det(minor);
        out[j] = (j % 2 == 0) ? d : -d;
    }
    return out;
}

} // namespace detail

inline SectionRealization realize_section(const CurveLabel& l, const PointConfig& cfg,
                                          SectionScaling scaling = SectionScaling::monic) {
    if (l.kind == CurveKind::E) {
        PlanePoly one(plane_vars());
        one.add_term(Monomial{0, 0, 0}, ParamElement::constant(cfg.params, 1));
        return {l, one};
    }
    unsigned degree = l.kind == CurveKind::M ? 1 : (l.kind == CurveKind::Q ? 2 : 3);
    ParamMatrix m = detail::section_constraints(cfg, l);

    std::vector<ParamElement> coeffs;
    if (scaling == SectionScaling::classical) {
        coeffs = detail::cofactor_coeffs(m);
        bool all_zero = true;
        for (const auto& c : coeffs) all_zero = all_zero && c.is_zero();
        require_nondegenerate(!all_zero, "degenerate configuration: section " + l.str() +
                                             " has vanishing interpolation determinant");
    } else {
        auto kb = kernel_basis(m);
        require_nondegenerate(kb.size() == 1, "section " + l.str() + ": constraint kernel has dimension " +
                                                  std::to_string(kb.size()) + " (non-general position)");
        coeffs = kb[0];
    }
    return {l, detail::poly_from_coeffs(coeffs, degree)};
}

// All sections at once, keyed by label.
inline std::map<CurveLabel, PlanePoly> realize_all_sections(const PointConfig& cfg,
                                                            SectionScaling scaling) {
    std::map<CurveLabel, PlanePoly> out;
    for (const auto& l : enumerate_minus_one_curves(cfg.r))
        out.emplace(l, realize_section(l, cfg, scaling).poly);
    return out;
}

// Checks the defining vanishing of a realized section: order m_i at each p_i.
inline bool section_vanishes_correctly(const SectionRealization& s, const PointConfig& cfg) {
    DivisorClass c = class_of(s.label, cfg.r);
    for (int i = 1; i <= cfg.r; ++i) {
        int mult = -c.e[i - 1];
        const auto& p = cfg.point(i);
        std::span<const ParamElement> vals(p.data(), 3);
        ParamElement one = ParamElement::constant(cfg.params, 1);
        if (mult >= 1 && !s.poly.evaluate(vals, one).is_zero()) return false;
        if (mult >= 2) {
            for (std::size_t v = 0; v < 3; ++v)
                if (!s.poly.derivative(v).evaluate(vals, one).is_zero()) return false;
        }
    }
    return true;
}

} // namespace torsor
