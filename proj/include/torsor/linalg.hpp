#pragma once

#include <optional>
#include <vector>

#include "torsor/param.hpp"

namespace torsor {

template <typename T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using ParamMatrix = Matrix<ParamElement>;

namespace detail {

struct Echelon {
    Matrix<Poly> m;                   // fraction-free row echelon form
    std::vector<std::size_t> pivots;  // pivot column per pivot row
};

// Clears denominators row by row, then runs Bareiss fraction-free elimination
// (exact divisions by the previous pivot keep intermediate entries small).
inline Echelon bareiss_echelon(const ParamMatrix& in) {
    const std::size_t R = in.rows(), C = in.cols();
    VarTablePtr vars = empty_vars();
    for (std::size_t i = 0; i < R && vars->empty(); ++i)
        for (std::size_t j = 0; j < C; ++j)
            if (!in.at(i, j).vars()->empty()) {
                vars = in.at(i, j).vars();
                break;
            }
    const ParamElement one_v = ParamElement::constant(vars, 1);
    Matrix<Poly> m(R, C, Poly(vars));
    for (std::size_t i = 0; i < R; ++i) {
        std::vector<ParamElement> row(C);
        bool clear = true;
        for (std::size_t j = 0; j < C; ++j) {
            row[j] = in.at(i, j) * one_v; // aligns constants onto `vars`
            clear = clear && row[j].den().is_one();
        }
        for (std::size_t j = 0; j < C; ++j) {
            Poly p = row[j].num();
            if (!clear)
                for (std::size_t k = 0; k < C; ++k)
                    if (k != j && !row[k].den().is_one()) p = p * row[k].den();
            m.at(i, j) = std::move(p);
        }
    }

    std::vector<std::size_t> pivots;
    Poly prev = Poly::constant(vars, 1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < C && row < R; ++col) {
        std::size_t p = row;
        while (p < R && m.at(p, col).is_zero()) ++p;
        if (p == R) continue;
        if (p != row)
            for (std::size_t j = 0; j < C; ++j) std::swap(m.at(p, j), m.at(row, j));
        const Poly pivot = m.at(row, col);
        for (std::size_t i = row + 1; i < R; ++i) {
            for (std::size_t j = col + 1; j < C; ++j)
                m.at(i, j) = exact_divide(m.at(i, j) * pivot - m.at(row, j) * m.at(i, col), prev);
            m.at(i, col) = Poly(vars);
        }
        prev = pivot;
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

} // namespace detail

inline std::size_t rank(const ParamMatrix& m) { return detail::bareiss_echelon(m).pivots.size(); }

// Basis of the right kernel {v : m v = 0}, via fraction-free elimination and
// back-substitution; each basis vector is normalized so its first nonzero
// entry is 1. A full-column-rank matrix yields an empty list.
inline std::vector<std::vector<ParamElement>> kernel_basis(const ParamMatrix& in) {
    auto ech = detail::bareiss_echelon(in);
    const std::size_t C = in.cols();
    const auto& pivots = ech.pivots;
    std::vector<bool> is_pivot(C, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<ParamElement>> basis;
    for (std::size_t free_col = 0; free_col < C; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<ParamElement> v(C);
        for (auto& e : v) e = ParamElement();
        v[free_col] = ParamElement::constant(empty_vars(), 1);
        // pivot rows above the free column, bottom-up
        for (std::size_t k = pivots.size(); k-- > 0;) {
            std::size_t pc = pivots[k];
            if (pc > free_col) continue;
            ParamElement s;
            for (std::size_t j = pc + 1; j < C; ++j) {
                if (v[j].is_zero()) continue;
                s = s + ParamElement(ech.m.at(k, j)) * v[j];
            }
            v[pc] = -s / ParamElement(ech.m.at(k, pc));
        }
        // normalize: first nonzero entry = 1
        for (std::size_t j = 0; j < C; ++j) {
            if (!v[j].is_zero()) {
                ParamElement lead = v[j];
                for (std::size_t l = j; l < C; ++l)
                    if (!v[l].is_zero()) v[l] = v[l] / lead;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Determinant over the coefficient field (ordinary Gaussian elimination;
// exact since the field arithmetic is exact).
inline ParamElement det(const ParamMatrix& in) {
    require(in.rows() == in.cols(), "det of non-square matrix");
    const std::size_t n = in.rows();
    ParamMatrix m = in;
    ParamElement d = ParamElement::constant(empty_vars(), 1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m.at(p, col).is_zero()) ++p;
        if (p == n) return ParamElement();
        if (p != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(m.at(p, j), m.at(col, j));
            d = -d;
        }
        const ParamElement pivot = m.at(col, col);
        d = d * pivot;
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            ParamElement f = m.at(i, col) / pivot;
            for (std::size_t j = col + 1; j < n; ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(col, j);
            m.at(i, col) = ParamElement();
        }
    }
    return d;
}

} // namespace torsor
