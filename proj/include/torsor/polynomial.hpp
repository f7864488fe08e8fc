#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "torsor/errors.hpp"
#include "torsor/rational.hpp"

namespace torsor {

// ---------------------------------------------------------------------------
// Variable tables. Every polynomial carries a shared pointer to its ordered
// list of variable names; binary operations require the same table instance.
// ---------------------------------------------------------------------------

using VarTable = std::vector<std::string>;
using VarTablePtr = std::shared_ptr<const VarTable>;

inline VarTablePtr make_vars(std::vector<std::string> names) {
    return std::make_shared<const VarTable>(std::move(names));
}

inline VarTablePtr empty_vars() {
    static const VarTablePtr t = make_vars({});
    return t;
}

inline std::size_t var_index(const VarTablePtr& vars, const std::string& name) {
    auto it = std::find(vars->begin(), vars->end(), name);
    require(it != vars->end(), "unknown variable: " + name);
    return static_cast<std::size_t>(it - vars->begin());
}

// ---------------------------------------------------------------------------
// Monomials under the graded lexicographic order (earlier variables are
// larger). Maps are kept in *descending* order so begin() is the leading term.
// ---------------------------------------------------------------------------

using Monomial = std::vector<std::uint16_t>;

inline unsigned mono_degree(const Monomial& m) {
    unsigned d = 0;
    for (auto e : m) d += e;
    return d;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
    return r;
}

// true iff b divides a
inline bool mono_divides(const Monomial& b, const Monomial& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] > a[i]) return false;
    return true;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint16_t>(a[i] - b[i]);
    return r;
}

// graded lex, descending: higher total degree first, then lex on exponents.
struct MonoGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        unsigned da = mono_degree(a), db = mono_degree(b);
        if (da != db) return da > db;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

// ---------------------------------------------------------------------------
// Coefficient traits: the glue that lets Polynomial<> run over plain
// rationals or over rational functions (ParamElement specializes this in
// param.hpp).
// ---------------------------------------------------------------------------

template <typename C>
struct CoeffTraits;

template <>
struct CoeffTraits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& c) { return rat_is_zero(c); }
    static bool is_one(const Rational& c) { return rat_is_one(c); }
    static Rational from_rational(const Rational& q) { return q; }
    static std::string str(const Rational& c, bool parenthesize_sums) {
        (void)parenthesize_sums;
        return c.get_str();
    }
    static bool needs_parens(const Rational& c) { return sgn(c) < 0; }
};

// ---------------------------------------------------------------------------
// Sparse multivariate polynomial with exact coefficients.
// ---------------------------------------------------------------------------

template <typename C>
class Polynomial {
  public:
    using Traits = CoeffTraits<C>;
    using TermMap = std::map<Monomial, C, MonoGreater>;

    Polynomial() : vars_(empty_vars()) {}
    explicit Polynomial(VarTablePtr vars) : vars_(std::move(vars)) {}

    static Polynomial constant(VarTablePtr vars, C value) {
        Polynomial p(std::move(vars));
        if (!Traits::is_zero(value)) p.terms_.emplace(Monomial(p.nvars(), 0), std::move(value));
        return p;
    }
    static Polynomial variable(VarTablePtr vars, std::size_t idx, unsigned exp = 1) {
        Polynomial p(vars);
        require(idx < p.nvars(), "variable index out of range");
        Monomial m(p.nvars(), 0);
        m[idx] = static_cast<std::uint16_t>(exp);
        p.terms_.emplace(std::move(m), Traits::one());
        return p;
    }
    static Polynomial variable(const VarTablePtr& vars, const std::string& name) {
        return variable(vars, var_index(vars, name));
    }

    const VarTablePtr& vars() const { return vars_; }
    std::size_t nvars() const { return vars_->size(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0);
    }
    bool is_one() const {
        return terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0 &&
               Traits::is_one(terms_.begin()->second);
    }
    C constant_value() const {
        if (terms_.empty()) return Traits::zero();
        require(is_constant(), "polynomial is not constant");
        return terms_.begin()->second;
    }

    unsigned total_degree() const { return terms_.empty() ? 0 : mono_degree(terms_.begin()->first); }
    unsigned degree_in(std::size_t var) const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, m[var]);
        return d;
    }
    bool involves(std::size_t var) const {
        for (const auto& [m, c] : terms_)
            if (m[var] != 0) return true;
        return false;
    }

    const Monomial& leading_monomial() const {
        require(!terms_.empty(), "leading term of zero polynomial");
        return terms_.begin()->first;
    }
    const C& leading_coefficient() const {
        require(!terms_.empty(), "leading term of zero polynomial");
        return terms_.begin()->second;
    }
    C coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Traits::zero() : it->second;
    }

    void add_term(Monomial m, const C& c) {
        if (Traits::is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(std::move(m), c);
        if (!inserted) {
            it->second = it->second + c;
            if (Traits::is_zero(it->second)) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_same_vars(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_same_vars(o);
        for (const auto& [m, c] : o.terms_) add_term(m, C() - c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator-() const {
        Polynomial r(vars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, C() - c);
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_same_vars(b);
        Polynomial r(a.vars_);
        if (a.is_zero() || b.is_zero()) return r;
        // multiply the smaller term set on the outside
        const Polynomial& s = a.term_count() <= b.term_count() ? a : b;
        const Polynomial& l = a.term_count() <= b.term_count() ? b : a;
        for (const auto& [ms, cs] : s.terms_)
            for (const auto& [ml, cl] : l.terms_) r.add_term(mono_mul(ms, ml), cs * cl);
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const C& c) const {
        Polynomial r(vars_);
        if (Traits::is_zero(c)) return r;
        for (const auto& [m, k] : terms_) {
            C v = k * c;
            if (!Traits::is_zero(v)) r.terms_.emplace(m, std::move(v));
        }
        return r;
    }

    Polynomial pow(unsigned e) const {
        Polynomial r = constant(vars_, Traits::one());
        Polynomial base = *this;
        while (e) {
            if (e & 1u) r = r * base;
            base = (e >>= 1) ? base * base : base;
        }
        return r;
    }

    Polynomial derivative(std::size_t var) const {
        Polynomial r(vars_);
        for (const auto& [m, c] : terms_) {
            if (m[var] == 0) continue;
            Monomial d = m;
            unsigned e = d[var]--;
            r.add_term(std::move(d), c * Traits::from_rational(Rational(static_cast<long>(e))));
        }
        return r;
    }

    // Substitute values for all variables. V must support V*V, V+V and
    // multiplication by C on the right; `one` seeds the products.
    template <typename V>
    V evaluate(std::span<const V> values, const V& one) const {
        require(values.size() == nvars(), "evaluate: wrong number of values");
        V acc = one - one; // zero of V
        for (const auto& [m, c] : terms_) {
            V t = one * c;
            for (std::size_t i = 0; i < m.size(); ++i)
                for (unsigned k = 0; k < m[i]; ++k) t = t * values[i];
            acc = acc + t;
        }
        return acc;
    }

    // Replace one variable by a polynomial over the same table.
    Polynomial substitute(std::size_t var, const Polynomial& value) const {
        check_same_vars(value);
        Polynomial r(vars_);
        std::vector<Polynomial> pow_cache{constant(vars_, Traits::one())};
        for (const auto& [m, c] : terms_) {
            unsigned e = m[var];
            while (pow_cache.size() <= e) pow_cache.push_back(pow_cache.back() * value);
            Monomial rest = m;
            rest[var] = 0;
            Polynomial t(vars_);
            t.terms_.emplace(std::move(rest), c);
            r += t * pow_cache[e];
        }
        return r;
    }

    // Splits off the coefficient of `var` assuming degree <= 1 in `var`:
    // p = A * var + B with neither A nor B involving var.
    std::pair<Polynomial, Polynomial> split_linear(std::size_t var) const {
        Polynomial a(vars_), b(vars_);
        for (const auto& [m, c] : terms_) {
            require(m[var] <= 1, "split_linear: variable occurs with degree > 1");
            if (m[var] == 1) {
                Monomial d = m;
                d[var] = 0;
                a.terms_.emplace(std::move(d), c);
            } else {
                b.terms_.emplace(m, c);
            }
        }
        return {a, b};
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        a.check_same_vars(b);
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        for (; ia != a.terms_.end(); ++ia, ++ib)
            if (ia->first != ib->first || !(ia->second == ib->second)) return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string cs = Traits::str(c, /*parenthesize_sums=*/true);
            bool negated = false;
            if (!cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos) {
                negated = true;
                cs = cs.substr(1);
            }
            os << (first ? (negated ? "-" : "") : (negated ? " - " : " + "));
            first = false;
            std::string ms = mono_str(m);
            if (ms.empty()) {
                os << cs;
            } else if (cs == "1") {
                os << ms;
            } else {
                if (Traits::needs_parens(c) && !negated) os << "(" << Traits::str(c, false) << ")";
                else if (cs.find_first_of("+- /") != std::string::npos) os << "(" << cs << ")";
                else os << cs;
                os << "*" << ms;
            }
        }
        return os.str();
    }

  private:
    void check_same_vars(const Polynomial& o) const {
        require(vars_ == o.vars_ || *vars_ == *o.vars_, "polynomials over different variable tables");
    }
    std::string mono_str(const Monomial& m) const {
        std::string s;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += (*vars_)[i];
            if (m[i] > 1) s += "^" + std::to_string(m[i]);
        }
        return s;
    }

    VarTablePtr vars_;
    TermMap terms_;
};

using Poly = Polynomial<Rational>;

// ---------------------------------------------------------------------------
// Exact division and multivariate gcd over Q (primitive PRS).
// ---------------------------------------------------------------------------

// Exact multivariate division: returns a/b if b | a, otherwise nothing.
inline std::pair<bool, Poly> try_exact_divide(const Poly& a, const Poly& b) {
    require(!b.is_zero(), "division by zero polynomial");
    Poly rem = a, quot(a.vars());
    while (!rem.is_zero()) {
        const Monomial& lm = rem.leading_monomial();
        if (!mono_divides(b.leading_monomial(), lm)) return {false, Poly(a.vars())};
        Monomial q = mono_div(lm, b.leading_monomial());
        Rational qc = rem.leading_coefficient() / b.leading_coefficient();
        Poly t(a.vars());
        t.add_term(q, qc);
        quot += t;
        rem -= t * b;
    }
    return {true, quot};
}

inline Poly exact_divide(const Poly& a, const Poly& b) {
    auto [ok, q] = try_exact_divide(a, b);
    require(ok, "exact_divide: not divisible");
    return q;
}

namespace detail {

// View of p as a univariate polynomial in `var` with Poly coefficients.
inline std::vector<Poly> coeffs_in(const Poly& p, std::size_t var) {
    std::vector<Poly> cs(p.degree_in(var) + 1, Poly(p.vars()));
    for (const auto& [m, c] : p.terms()) {
        Monomial rest = m;
        unsigned e = rest[var];
        rest[var] = 0;
        Poly t(p.vars());
        t.add_term(std::move(rest), c);
        cs[e] += t;
    }
    return cs;
}

inline Poly from_coeffs(const std::vector<Poly>& cs, std::size_t var, const VarTablePtr& vars) {
    Poly r(vars);
    Poly x = Poly::variable(vars, var);
    Poly xe = Poly::constant(vars, 1);
    for (std::size_t e = 0; e < cs.size(); ++e) {
        if (e) xe = xe * x;
        r += cs[e] * xe;
    }
    return r;
}

// Pseudo-remainder of a by b in variable `var`: lc(b)^(da-db+1) * a = q*b + r.
inline Poly pseudo_rem(const Poly& a, const Poly& b, std::size_t var) {
    unsigned db = b.degree_in(var);
    auto bc = coeffs_in(b, var);
    const Poly& lb = bc[db];
    Poly r = a;
    Poly x = Poly::variable(a.vars(), var);
    while (!r.is_zero()) {
        unsigned dr = r.degree_in(var);
        if (dr < db) break;
        auto rc = coeffs_in(r, var);
        Poly t = rc[dr] * x.pow(dr - db);
        r = r * lb - t * b;
    }
    return r;
}

} // namespace detail

// Scales p so its integer-primitive form has positive leading coefficient;
// used to keep gcds canonical.
inline Poly primitive_part(const Poly& p) {
    if (p.is_zero()) return p;
    // gcd of coefficient numerators / lcm of denominators
    Integer g = 0, l = 1;
    for (const auto& [m, c] : p.terms()) {
        g = gcd(g, c.get_num());
        l = lcm(l, c.get_den());
    }
    Rational scale = Rational(l) / Rational(g);
    if (sgn(p.leading_coefficient()) < 0) scale = -scale;
    return p.scaled(scale);
}

inline Poly poly_gcd(const Poly& a, const Poly& b);

namespace detail {

// gcd of all coefficients of p viewed in `var` (the content), recursively.
inline Poly content_in(const Poly& p, std::size_t var) {
    Poly g(p.vars());
    for (const auto& c : coeffs_in(p, var)) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? primitive_part(c) : poly_gcd(g, c);
        if (g.is_constant()) break;
    }
    return g.is_zero() ? Poly(p.vars()) : g;
}

} // namespace detail

// Primitive PRS gcd (fallback path): result is integer-primitive with
// positive leading coefficient (constant gcd is 1).
inline Poly poly_gcd_prs(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.is_zero() ? b : primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    if (a.is_constant() || b.is_constant()) return Poly::constant(a.vars(), 1);

    // main variable: first one occurring in either operand
    std::size_t var = 0;
    while (!a.involves(var) && !b.involves(var)) ++var;
    if (!a.involves(var)) return poly_gcd_prs(a, detail::content_in(b, var));
    if (!b.involves(var)) return poly_gcd_prs(detail::content_in(a, var), b);

    Poly ca = detail::content_in(a, var), cb = detail::content_in(b, var);
    Poly pa = exact_divide(a, ca), pb = exact_divide(b, cb);
    Poly cg = poly_gcd_prs(ca, cb);

    Poly r0 = pa, r1 = pb;
    if (r0.degree_in(var) < r1.degree_in(var)) std::swap(r0, r1);
    while (!r1.is_zero()) {
        Poly r = detail::pseudo_rem(r0, r1, var);
        r0 = std::move(r1);
        if (r.is_zero()) {
            r1 = Poly(a.vars());
        } else {
            r1 = exact_divide(r, detail::content_in(r, var));
        }
    }
    if (r0.degree_in(var) == 0) return cg; // coprime in the main variable
    return cg * primitive_part(exact_divide(r0, detail::content_in(r0, var)));
}

namespace detail {

// ---- heuristic gcd (integer evaluation + radix reconstruction) ----

inline Integer max_abs_coeff(const Poly& p) {
    Integer m = 0;
    for (const auto& [mon, c] : p.terms()) {
        Integer a = abs(c.get_num());
        if (a > m) m = a;
    }
    return m;
}

// p(var = xi), other variables untouched; p must have integer coefficients.
inline Poly eval_var_at(const Poly& p, std::size_t var, const Integer& xi) {
    auto cs = coeffs_in(p, var);
    Poly r(p.vars());
    for (std::size_t e = cs.size(); e-- > 0;) {
        r = r.scaled(Rational(xi));
        r += cs[e];
    }
    return r;
}

// Writes g as sum of xi-adic digits (symmetric range) times powers of var.
// Returns nothing if the expansion exceeds the degree cap.
inline std::pair<bool, Poly> radix_reconstruct(Poly g, std::size_t var, const Integer& xi,
                                               unsigned degree_cap) {
    Poly out(g.vars());
    Poly x = Poly::variable(g.vars(), var);
    Poly xe = Poly::constant(g.vars(), 1);
    unsigned e = 0;
    Integer half = xi / 2;
    while (!g.is_zero()) {
        if (e > degree_cap) return {false, Poly(g.vars())};
        Poly digit(g.vars());
        for (const auto& [mon, c] : g.terms()) {
            Integer m = c.get_num() % xi; // coefficients are integers
            if (m > half) m -= xi;
            if (m < -half) m += xi;
            if (sgn(m) != 0) digit.add_term(mon, Rational(m));
        }
        out += digit * xe;
        g = (g - digit).scaled(Rational(Integer(1), xi));
        xe = xe * x;
        ++e;
    }
    return {true, out};
}

// gcd of the integer coefficients (inputs must have integer coefficients)
inline Integer int_content(const Poly& p) {
    Integer g = 0;
    for (const auto& [m, c] : p.terms()) g = gcd(g, c.get_num());
    return g;
}

// Full gcd over Z[vars] (including integer content), up to sign. The
// recursion keeps integer contents intact: the content of an evaluated image
// encodes the factors that were substituted away, and the radix
// reconstruction at the level above needs it.
inline Poly heugcd_int(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Integer ca = int_content(a), cb = int_content(b);
    Integer c = gcd(ca, cb);
    Poly pa = a.scaled(Rational(1) / Rational(ca));
    Poly pb = b.scaled(Rational(1) / Rational(cb));
    Poly cpoly = Poly::constant(a.vars(), Rational(c));
    if (pa.is_constant() || pb.is_constant()) return cpoly; // primitive constants are units

    std::size_t var = a.nvars();
    for (std::size_t v = 0; v < a.nvars(); ++v)
        if (pa.involves(v) && pb.involves(v)) {
            var = v;
            break;
        }
    if (var == a.nvars()) {
        // variable occurring in only one operand: fold it away via the
        // coefficients; disjoint variable sets leave only the content
        for (std::size_t v = 0; v < a.nvars(); ++v) {
            if (pa.involves(v) == pb.involves(v)) continue;
            const Poly& folded = pa.involves(v) ? pa : pb;
            const Poly& other = pa.involves(v) ? pb : pa;
            Poly g = other;
            for (const auto& coeff : coeffs_in(folded, v)) {
                if (coeff.is_zero()) continue;
                g = heugcd_int(g, coeff);
                if (g.is_constant()) break;
            }
            return cpoly * (g.is_constant() ? Poly::constant(a.vars(), 1) : g);
        }
        return cpoly;
    }

    unsigned cap = std::min(pa.degree_in(var), pb.degree_in(var));
    Integer bound = std::min(max_abs_coeff(pa), max_abs_coeff(pb));
    Integer xi = 2 * bound + 29;
    for (int attempt = 0; attempt < 8; ++attempt) {
        Poly ae = eval_var_at(pa, var, xi);
        Poly be = eval_var_at(pb, var, xi);
        if (!ae.is_zero() && !be.is_zero()) {
            Poly gamma = heugcd_int(ae, be);
            auto [ok, cand] = radix_reconstruct(gamma, var, xi, cap);
            if (ok && !cand.is_zero()) {
                cand = primitive_part(cand);
                auto [da, qa] = try_exact_divide(pa, cand);
                if (da) {
                    auto [db, qb] = try_exact_divide(pb, cand);
                    if (db) return cpoly * cand;
                }
            }
        }
        xi = xi * 73794 / 27011 + 37;
    }
    return cpoly * poly_gcd_prs(pa, pb); // heuristic exhausted; exact fallback
}

} // namespace detail

// Primitive multivariate gcd over Q: integer-primitive result with positive
// leading coefficient (constant gcd is 1). Heuristic evaluation gcd with
// divisibility verification; PRS fallback.
inline Poly poly_gcd(const Poly& a, const Poly& b) {
    require(a.vars() == b.vars() || *a.vars() == *b.vars(), "gcd over different variable tables");
    if (a.is_zero()) return b.is_zero() ? b : primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    if (a.is_constant() || b.is_constant()) return Poly::constant(a.vars(), 1);
    Poly g = detail::heugcd_int(primitive_part(a), primitive_part(b));
    if (g.is_constant()) return Poly::constant(a.vars(), 1);
    return primitive_part(g);
}

} // namespace torsor
