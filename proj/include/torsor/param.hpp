#pragma once

#include <atomic>
#include <string>
#include <utility>

#include "torsor/polynomial.hpp"

namespace torsor {

// When set, fractions are not reduced by multivariate gcd (zero tests and
// equality still work via the numerator / cross-multiplication). Useful when
// gcd cost dominates a large symbolic run.
inline std::atomic<bool>& lazy_fractions_flag() {
    static std::atomic<bool> flag{false};
    return flag;
}
inline void set_lazy_fractions(bool on) { lazy_fractions_flag().store(on); }

// Element of the exact coefficient field Q(parameters): a fraction of
// multivariate polynomials. Normal form: numerator and denominator coprime,
// denominator's leading coefficient 1 (so zero/equality are syntactic).
//
// Constants may be carried over the empty variable table; binary operations
// lift such constants into the other operand's table.
class ParamElement {
  public:
    ParamElement() : num_(empty_vars()), den_(Poly::constant(empty_vars(), 1)) {}
    explicit ParamElement(VarTablePtr vars)
        : num_(Poly(vars)), den_(Poly::constant(vars, 1)) {}
    ParamElement(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        require(!den_.is_zero(), "ParamElement with zero denominator");
        normalize();
    }
    /* implicit */ ParamElement(const Poly& num)
        : num_(num), den_(Poly::constant(num.vars(), 1)) {}

    static ParamElement constant(VarTablePtr vars, const Rational& q) {
        ParamElement e(vars);
        e.num_ = Poly::constant(std::move(vars), q);
        return e;
    }
    static ParamElement variable(const VarTablePtr& vars, const std::string& name) {
        return ParamElement(Poly::variable(vars, name));
    }
    static ParamElement variable(VarTablePtr vars, std::size_t idx) {
        return ParamElement(Poly::variable(std::move(vars), idx));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const VarTablePtr& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

    friend ParamElement operator+(ParamElement a, ParamElement b) {
        align(a, b);
        if (a.den_.is_one() && b.den_.is_one()) return reduced(a.num_ + b.num_, a.den_);
        return ParamElement(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend ParamElement operator-(ParamElement a, ParamElement b) {
        align(a, b);
        if (a.den_.is_one() && b.den_.is_one()) return reduced(a.num_ - b.num_, a.den_);
        return ParamElement(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    ParamElement operator-() const { return reduced(-num_, den_); }
    friend ParamElement operator*(ParamElement a, ParamElement b) {
        align(a, b);
        if (a.den_.is_one() && b.den_.is_one()) return reduced(a.num_ * b.num_, a.den_);
        return ParamElement(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend ParamElement operator/(ParamElement a, ParamElement b) {
        align(a, b);
        require(!b.is_zero(), "division by zero ParamElement (degenerate specialization)");
        return ParamElement(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend ParamElement operator*(const ParamElement& a, const Rational& q) {
        return reduced(a.num_.scaled(q), a.den_);
    }

    ParamElement& operator+=(const ParamElement& o) { return *this = *this + o; }
    ParamElement& operator-=(const ParamElement& o) { return *this = *this - o; }
    ParamElement& operator*=(const ParamElement& o) { return *this = *this * o; }
    ParamElement& operator/=(const ParamElement& o) { return *this = *this / o; }

    ParamElement inverse() const {
        require(!is_zero(), "inverse of zero ParamElement");
        return ParamElement(den_, num_);
    }
    ParamElement pow(unsigned e) const {
        ParamElement r = constant(vars(), 1), b = *this;
        while (e) {
            if (e & 1u) r = r * b;
            b = (e >>= 1) ? b * b : b;
        }
        return r;
    }

    // Exact equality in the field (independent of normalization mode).
    friend bool operator==(ParamElement a, ParamElement b) {
        align(a, b);
        return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
    }
    friend bool operator!=(const ParamElement& a, const ParamElement& b) { return !(a == b); }

    // Substitute rational values for all parameters; exact, denominator must
    // not vanish at the point.
    ParamElement specialize(std::span<const Rational> values) const {
        Rational d = den_.evaluate<Rational>(values, Rational(1));
        require(!rat_is_zero(d), "specialization hits a denominator zero");
        Rational n = num_.evaluate<Rational>(values, Rational(1));
        return ParamElement::constant(empty_vars(), n / d);
    }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        std::string n = num_.str(), d = den_.str();
        if (num_.term_count() > 1) n = "(" + n + ")";
        if (d.find_first_of("+-*/^ ") != std::string::npos) d = "(" + d + ")";
        return n + "/" + d;
    }

  private:
    static ParamElement reduced(Poly n, Poly d) {
        ParamElement e;
        e.num_ = std::move(n);
        e.den_ = std::move(d);
        if (e.num_.is_zero()) e.den_ = Poly::constant(e.num_.vars(), 1);
        return e;
    }

    ParamElement rebased(const VarTablePtr& vars) const {
        require(is_constant(), "cannot mix ParamElements over different parameter tables");
        return constant(vars, is_zero() ? Rational(0) : constant_value());
    }

    static void align(ParamElement& a, ParamElement& b) {
        const VarTablePtr& va = a.vars();
        const VarTablePtr& vb = b.vars();
        if (va == vb || *va == *vb) return;
        if (va->empty()) a = a.rebased(vb);
        else if (vb->empty()) b = b.rebased(va);
        else require(false, "ParamElements over incompatible parameter tables");
    }

    void normalize() {
        if (num_.is_zero()) {
            den_ = Poly::constant(num_.vars(), 1);
            return;
        }
        if (den_.is_one()) return;
        if (den_.is_constant()) {
            num_ = num_.scaled(Rational(1) / den_.constant_value());
            den_ = Poly::constant(num_.vars(), 1);
            return;
        }
        if (!lazy_fractions_flag().load()) {
            Poly g = poly_gcd(num_, den_);
            if (!g.is_constant()) {
                num_ = exact_divide(num_, g);
                den_ = exact_divide(den_, g);
            }
            if (den_.is_constant()) {
                num_ = num_.scaled(Rational(1) / den_.constant_value());
                den_ = Poly::constant(num_.vars(), 1);
                return;
            }
        }
        // make the denominator monic under the graded lex order
        Rational lc = den_.leading_coefficient();
        if (!rat_is_one(lc)) {
            Rational inv = Rational(1) / lc;
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    Poly num_, den_;
};

template <>
struct CoeffTraits<ParamElement> {
    static ParamElement zero() { return ParamElement(); }
    static ParamElement one() { return ParamElement::constant(empty_vars(), 1); }
    static bool is_zero(const ParamElement& c) { return c.is_zero(); }
    static bool is_one(const ParamElement& c) { return c.is_one(); }
    static ParamElement from_rational(const Rational& q) {
        return ParamElement::constant(empty_vars(), q);
    }
    static std::string str(const ParamElement& c, bool) { return c.str(); }
    static bool needs_parens(const ParamElement& c) {
        std::string s = c.str();
        return s.find_first_of("+-", 1) != std::string::npos || !c.den().is_one();
    }
};

// Polynomial in formal symbols whose coefficients live in Q(parameters).
using SymPoly = Polynomial<ParamElement>;

inline ParamElement pow(const ParamElement& b, unsigned e) { return b.pow(e); }

} // namespace torsor
