#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torsor/errors.hpp"

namespace torsor {

// ---------------------------------------------------------------------------
// The Picard lattice of the blow-up of the plane in r points: classes are
// written d*H + sum_i e_i*E_i; the intersection form is diag(1,-1,...,-1).
// ---------------------------------------------------------------------------

struct DivisorClass {
    int r = 0;
    int d = 0;                 // coefficient of H
    std::array<int, 7> e{};    // coefficients of E_1..E_r

    static DivisorClass H(int r) { return {r, 1, {}}; }
    static DivisorClass E(int r, int i) {
        DivisorClass c{r, 0, {}};
        c.e[i - 1] = 1;
        return c;
    }
    static DivisorClass canonical(int r) { // K_r = -3H + E_1 + ... + E_r
        DivisorClass c{r, -3, {}};
        for (int i = 0; i < r; ++i) c.e[i] = 1;
        return c;
    }
    static DivisorClass anticanonical(int r) { return -canonical(r); }

    DivisorClass operator+(const DivisorClass& o) const {
        check(o);
        DivisorClass c{r, d + o.d, {}};
        for (int i = 0; i < r; ++i) c.e[i] = e[i] + o.e[i];
        return c;
    }
    DivisorClass operator-(const DivisorClass& o) const {
        check(o);
        DivisorClass c{r, d - o.d, {}};
        for (int i = 0; i < r; ++i) c.e[i] = e[i] - o.e[i];
        return c;
    }
    DivisorClass operator-() const {
        DivisorClass c{r, -d, {}};
        for (int i = 0; i < r; ++i) c.e[i] = -e[i];
        return c;
    }
    DivisorClass scaled(int k) const {
        DivisorClass c{r, k * d, {}};
        for (int i = 0; i < r; ++i) c.e[i] = k * e[i];
        return c;
    }

    auto operator<=>(const DivisorClass&) const = default;

    std::string str() const {
        std::string s;
        auto term = [&s](int coeff, const std::string& name) {
            if (coeff == 0) return;
            if (s.empty()) {
                if (coeff == -1) s += "-";
                else if (coeff != 1) s += std::to_string(coeff);
            } else {
                s += coeff > 0 ? "+" : "-";
                if (coeff != 1 && coeff != -1) s += std::to_string(std::abs(coeff));
            }
            s += name;
        };
        term(d, "H");
        for (int i = 0; i < r; ++i) term(e[i], "E" + std::to_string(i + 1));
        return s.empty() ? "0" : s;
    }

  private:
    void check(const DivisorClass& o) const {
        require(r == o.r, "divisor classes with different r");
    }
};

inline int intersection(const DivisorClass& a, const DivisorClass& b) {
    require(a.r == b.r, "intersection of classes with different r");
    int s = a.d * b.d;
    for (int i = 0; i < a.r; ++i) s -= a.e[i] * b.e[i];
    return s;
}

inline int self_intersection(const DivisorClass& a) { return intersection(a, a); }

inline int anticanonical_degree(const DivisorClass& a) {
    return intersection(a, DivisorClass::anticanonical(a.r));
}

// Reflection in a root: v + (v,alpha)*alpha (alpha has self-intersection -2).
inline DivisorClass weyl_reflect(const DivisorClass& alpha, const DivisorClass& v) {
    require(self_intersection(alpha) == -2 && anticanonical_degree(alpha) == 0,
            "weyl_reflect: not a root");
    return v + alpha.scaled(intersection(v, alpha));
}

// ---------------------------------------------------------------------------
// (-1)-curve labels. E_i are the exceptional curves, m_{i,j} the transforms
// of lines through two of the points, Q the transforms of conics (indexed by
// the points they miss), C_i (r=7) the singular cubics through all points.
// Kinds are ordered E < M < Q < C to match the generator ordering
// eta, mu, (nu,) lambda.
// ---------------------------------------------------------------------------

enum class CurveKind : int { E = 0, M = 1, Q = 2, C = 3 };

struct CurveLabel {
    CurveKind kind = CurveKind::E;
    std::vector<int> idx; // E/C: one index; M: i<j; Q: the missed points (r=6: one, r=7: two)

    static CurveLabel E(int i) { return {CurveKind::E, {i}}; }
    static CurveLabel M(int i, int j) {
        if (i > j) std::swap(i, j);
        return {CurveKind::M, {i, j}};
    }
    static CurveLabel Q6(int i) { return {CurveKind::Q, {i}}; }
    static CurveLabel Q7(int i, int j) {
        if (i > j) std::swap(i, j);
        return {CurveKind::Q, {i, j}};
    }
    static CurveLabel C(int i) { return {CurveKind::C, {i}}; }

    auto operator<=>(const CurveLabel&) const = default;

    std::string str() const {
        std::string s;
        switch (kind) {
            case CurveKind::E: s = "E"; break;
            case CurveKind::M: s = "m"; break;
            case CurveKind::Q: s = "Q"; break;
            case CurveKind::C: s = "C"; break;
        }
        for (int i : idx) s += std::to_string(i);
        return s;
    }
};

// Coordinate name in the eta/mu/nu/lambda naming; `primes` appends ' marks.
inline std::string coordinate_name(const CurveLabel& l, int r, int primes = 0) {
    std::string base;
    switch (l.kind) {
        case CurveKind::E: base = "eta" + std::to_string(l.idx[0]); break;
        case CurveKind::M: base = "mu" + std::to_string(l.idx[0]) + std::to_string(l.idx[1]); break;
        case CurveKind::Q:
            base = (r == 6) ? "lambda" + std::to_string(l.idx[0])
                            : "nu" + std::to_string(l.idx[0]) + std::to_string(l.idx[1]);
            break;
        case CurveKind::C: base = "lambda" + std::to_string(l.idx[0]); break;
    }
    return base + std::string(static_cast<std::size_t>(primes), '\'');
}

inline DivisorClass class_of(const CurveLabel& l, int r) {
    DivisorClass c{r, 0, {}};
    switch (l.kind) {
        case CurveKind::E:
            c.e[l.idx[0] - 1] = 1;
            break;
        case CurveKind::M: // H - E_i - E_j
            c.d = 1;
            c.e[l.idx[0] - 1] = -1;
            c.e[l.idx[1] - 1] = -1;
            break;
        case CurveKind::Q: // 2H - sum of E_k over the points it passes through
            c.d = 2;
            for (int k = 1; k <= r; ++k) c.e[k - 1] = -1;
            for (int i : l.idx) c.e[i - 1] = 0;
            break;
        case CurveKind::C: // 3H - 2E_i - sum_{j != i} E_j
            require(r == 7, "C curves exist only for r=7");
            c.d = 3;
            for (int k = 1; k <= r; ++k) c.e[k - 1] = -1;
            c.e[l.idx[0] - 1] = -2;
            break;
    }
    return c;
}

inline std::optional<CurveLabel> label_of(const DivisorClass& c) {
    const int r = c.r;
    auto count = [&](int v) {
        int n = 0;
        for (int i = 0; i < r; ++i) n += (c.e[i] == v);
        return n;
    };
    auto find_all = [&](int v) {
        std::vector<int> ix;
        for (int i = 0; i < r; ++i)
            if (c.e[i] == v) ix.push_back(i + 1);
        return ix;
    };
    if (c.d == 0 && count(1) == 1 && count(0) == r - 1) return CurveLabel::E(find_all(1)[0]);
    if (c.d == 1 && count(-1) == 2 && count(0) == r - 2) {
        auto ix = find_all(-1);
        return CurveLabel::M(ix[0], ix[1]);
    }
    if (c.d == 2 && count(-1) == 5 && count(0) == r - 5) {
        auto ix = find_all(0);
        if (r == 6) return CurveLabel::Q6(ix[0]);
        if (r == 7) return CurveLabel::Q7(ix[0], ix[1]);
        if (r == 5) return CurveLabel{CurveKind::Q, {}};
    }
    if (c.d == 3 && count(-2) == 1 && count(-1) == r - 1) return CurveLabel::C(find_all(-2)[0]);
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Enumeration by bounded exhaustive search. The coefficient bounds cover all
// the families above; the expected counts are asserted afterwards.
// ---------------------------------------------------------------------------

namespace detail {

template <typename F>
void scan_classes(int r, int dmin, int dmax, int emin, int emax, F&& visit) {
    DivisorClass c{r, 0, {}};
    std::vector<int> e(static_cast<std::size_t>(r), emin);
    for (int d = dmin; d <= dmax; ++d) {
        std::fill(e.begin(), e.end(), emin);
        for (;;) {
            c.d = d;
            for (int i = 0; i < r; ++i) c.e[i] = e[static_cast<std::size_t>(i)];
            visit(c);
            int i = 0;
            while (i < r && e[static_cast<std::size_t>(i)] == emax) e[static_cast<std::size_t>(i++)] = emin;
            if (i == r) break;
            ++e[static_cast<std::size_t>(i)];
        }
    }
}

} // namespace detail

inline const std::array<int, 8>& curve_counts() {
    // N_r for r = 0..7 (index by r); r >= 3 from the root-system table
    static const std::array<int, 8> n{0, 1, 3, 6, 10, 16, 27, 56};
    return n;
}

// All (-1)-curves, sorted in the generator order eta, mu, (nu,) lambda.
inline std::vector<CurveLabel> enumerate_minus_one_curves(int r) {
    require(r >= 3 && r <= 7, "enumerate_minus_one_curves: r must be in 3..7");
    std::vector<CurveLabel> out;
    detail::scan_classes(r, 0, 3, -2, 1, [&](const DivisorClass& c) {
        if (self_intersection(c) == -1 && anticanonical_degree(c) == 1) {
            auto l = label_of(c);
            require(l.has_value(), "unlabelled (-1)-curve class: " + c.str());
            out.push_back(*l);
        }
    });
    std::sort(out.begin(), out.end());
    require(static_cast<int>(out.size()) == curve_counts()[static_cast<std::size_t>(r)],
            "(-1)-curve count mismatch for r=" + std::to_string(r));
    return out;
}

// All roots: (alpha,alpha) = -2 and alpha orthogonal to the canonical class.
inline std::vector<DivisorClass> enumerate_roots(int r) {
    require(r >= 3 && r <= 7, "enumerate_roots: r must be in 3..7");
    std::vector<DivisorClass> out;
    detail::scan_classes(r, -3, 3, -2, 2, [&](const DivisorClass& c) {
        if (self_intersection(c) == -2 && anticanonical_degree(c) == 0) out.push_back(c);
    });
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Rulings: classes D = E + E' for (-1)-curves with (E,E') = k, with the
// exhaustive list of pairs. (1)-rulings carry r-1 pairs each.
// ---------------------------------------------------------------------------

struct Ruling {
    DivisorClass cls;
    int k = 1;
    std::vector<std::pair<CurveLabel, CurveLabel>> pairs;
    std::string symbol;
};

// Symbol in the D^(n)_I naming for r=7; for r=6 the ruling -K6-E is named
// after the curve E whose coordinate differentiates the cubic form.
inline std::string ruling_symbol(const DivisorClass& c) {
    const int r = c.r;
    if (r == 6) {
        auto e = label_of(DivisorClass::anticanonical(6) - c);
        if (e) return "-K6-" + e->str();
        return c.str();
    }
    if (c == DivisorClass::anticanonical(7)) return "-K7";
    auto collect = [&](int v) {
        std::string s;
        for (int i = 0; i < r; ++i)
            if (c.e[i] == v) s += std::to_string(i + 1);
        return s;
    };
    switch (c.d) {
        case 1: return "D1_" + collect(-1);
        case 2: return "D2_" + collect(0);
        case 3: return "D3_" + collect(0) + collect(-2);
        case 4: return "D4_" + collect(-1);
        case 5: return "D5_" + collect(-1);
        default: return c.str();
    }
}

inline std::vector<Ruling> enumerate_rulings(int r, int k) {
    require(r == 6 || r == 7, "enumerate_rulings: r must be 6 or 7");
    require(k == 1 || k == 2, "enumerate_rulings: k must be 1 or 2");
    auto curves = enumerate_minus_one_curves(r);
    std::map<DivisorClass, Ruling> buckets;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        DivisorClass ci = class_of(curves[i], r);
        for (std::size_t j = i + 1; j < curves.size(); ++j) {
            DivisorClass cj = class_of(curves[j], r);
            if (intersection(ci, cj) != k) continue;
            DivisorClass d = ci + cj;
            auto [it, fresh] = buckets.try_emplace(d);
            if (fresh) {
                it->second.cls = d;
                it->second.k = k;
                it->second.symbol = ruling_symbol(d);
            }
            it->second.pairs.emplace_back(curves[i], curves[j]);
        }
    }
    std::vector<Ruling> out;
    out.reserve(buckets.size());
    for (auto& [cls, rl] : buckets) {
        std::sort(rl.pairs.begin(), rl.pairs.end());
        out.push_back(std::move(rl));
    }
    return out;
}

// N(E)_k: the (-1)-curves E' with (E,E') = k.
inline std::vector<CurveLabel> neighbors(const CurveLabel& e, int r, int k) {
    DivisorClass ce = class_of(e, r);
    std::vector<CurveLabel> out;
    for (const auto& l : enumerate_minus_one_curves(r))
        if (intersection(ce, class_of(l, r)) == k) out.push_back(l);
    return out;
}

// The ruling set used for the reduced embedding test: E1+E over E in N(E1)_1,
// plus (r=7) the extra class 3H-(E1+...+E7)+E2-E1.
inline std::vector<Ruling> membership_set(int r) {
    require(r == 6 || r == 7, "membership_set: r must be 6 or 7");
    auto rulings = enumerate_rulings(r, 1);
    std::map<DivisorClass, const Ruling*> by_class;
    for (const auto& rl : rulings) by_class[rl.cls] = &rl;

    std::vector<Ruling> out;
    DivisorClass e1 = DivisorClass::E(r, 1);
    for (const auto& e : neighbors(CurveLabel::E(1), r, 1)) {
        auto it = by_class.find(e1 + class_of(e, r));
        require(it != by_class.end(), "membership ruling missing: " + e.str());
        out.push_back(*it->second);
    }
    if (r == 7) {
        DivisorClass extra = class_of(CurveLabel::C(1), 7) + DivisorClass::E(7, 2); // D3_21
        auto it = by_class.find(extra);
        require(it != by_class.end(), "extra membership ruling missing");
        out.push_back(*it->second);
    }
    return out;
}

} // namespace torsor
