#pragma once

// Shared reference data for the test suites: the twenty degree-3 rescaling
// conditions, their solved closed forms, and parsing helpers for fixtures
// written in the eta/mu/nu/lambda notation.

#include <string>
#include <vector>

#include "torsor/conditions.hpp"
#include "torsor/parse.hpp"

namespace torsor::fixtures {

// Parses "-eta3''*mu23'' - (a/b)*eta5''*mu25''" into a symbol polynomial with
// coefficients in the parameter field.
inline SymPoly sym_fixture(int r, const std::string& expr, const VarTablePtr& params) {
    std::vector<std::string> names = *rescaling_vars(r);
    const std::size_t nsym = names.size();
    for (const auto& p : *params) names.push_back(p);
    VarTablePtr all = make_vars(names);
    ParamElement e = parse_param(expr, all);

    // the common denominator may involve the parameters only
    Poly den(params);
    for (const auto& [m, c] : e.den().terms()) {
        for (std::size_t i = 0; i < nsym; ++i)
            require(m[i] == 0, "fixture denominator has symbols");
        den.add_term(Monomial(m.begin() + static_cast<long>(nsym), m.end()), c);
    }
    SymPoly out(rescaling_vars(r));
    for (const auto& [m, c] : e.num().terms()) {
        Monomial sym(m.begin(), m.begin() + static_cast<long>(nsym));
        Poly num(params);
        num.add_term(Monomial(m.begin() + static_cast<long>(nsym), m.end()), c);
        out.add_term(sym, ParamElement(num, den));
    }
    return out;
}

inline const std::string G1 = "(a*d-b*c)";
inline const std::string G2 = "((a-1)*(d-1)-(b-1)*(c-1))";
inline const std::string G3 = "(d*(a-c)*(1-b)-c*(b-d)*(1-a))";

// The twenty degree-3 conditions, in membership order (m12..m16, Q2..Q6).
inline const char* kDegree3Conditions[10][2] = {
    {"-eta3''*mu23'' - eta4''*mu24'' - b*eta5''*mu25'' - d*eta6''*mu26''",
     "eta1''*mu12'' + eta4''*mu24'' + eta5''*mu25'' + eta6''*mu26''"},
    {"-eta1''*mu13'' + eta4''*mu34'' + eta5''*mu35'' + eta6''*mu36''",
     "eta2''*mu23'' + eta4''*mu34'' + a*eta5''*mu35'' + c*eta6''*mu36''"},
    {"-eta1''*mu14'' + eta3''*mu34'' + (b-1)*eta5''*mu45'' + (1-d)*eta6''*mu46''",
     "-eta2''*mu24'' + eta3''*mu34'' + (b-a)*eta5''*mu45'' + (c-d)*eta6''*mu46''"},
    {"-eta2''*mu25'' + (a/b)*eta3''*mu35'' + ((a-b)/b)*eta4''*mu45'' + "
     "((a*d-b*c)/b)*eta6''*mu56''",
     "-eta1''*mu15'' + (1/b)*eta3''*mu35'' + ((1-b)/b)*eta4''*mu45'' + "
     "((d-b)/b)*eta6''*mu56''"},
    {"-eta1''*mu16'' + (1/d)*eta3''*mu36'' + ((d-1)/d)*eta4''*mu46'' + "
     "((b-d)/d)*eta5''*mu56''",
     "-eta2''*mu26'' + (c/d)*eta3''*mu36'' + ((d-c)/d)*eta4''*mu46'' - "
     "((a*d-b*c)/d)*eta5''*mu56''"},
    {"a*(c-d)*eta1''*lambda2'' + (d-1)*eta2''*lambda1'' - mu34''*mu56'' + mu36''*mu45''",
     "(a*d-b*c)*eta1''*lambda2'' + (b-d)*eta2''*lambda1'' - mu35''*mu46'' - mu36''*mu45''"},
    {"b*(c-d)*eta1''*lambda3'' + (c-1)*eta3''*lambda1'' - mu24''*mu56'' + mu26''*mu45''",
     "(a*d-b*c)*eta1''*lambda3'' + (a-c)*eta3''*lambda1'' - mu25''*mu46'' - mu26''*mu45''"},
    {"b*c*eta1''*lambda4'' + (b*c-b-c+1)*eta4''*lambda1'' - mu23''*mu56'' + mu26''*mu35''",
     "(a*d-b*c)*eta1''*lambda4'' + ((a-1)*(d-1)-(b-1)*(c-1))*eta4''*lambda1'' + "
     "mu25''*mu36'' - mu26''*mu35''"},
    {"(d-c)*eta1''*lambda5'' + ((a-1)*(d-1)-(b-1)*(c-1))*eta5''*lambda1'' - "
     "mu24''*mu36'' + mu26''*mu34''",
     "c*eta1''*lambda5'' + (a-c)*(1-b)*eta5''*lambda1'' - mu23''*mu46'' - mu26''*mu34''"},
    {"(b-a)*eta1''*lambda6'' + ((a-1)*(d-1)-(b-1)*(c-1))*eta6''*lambda1'' + "
     "mu24''*mu35'' - mu25''*mu34''",
     "a*eta1''*lambda6'' + (c-a)*(d-1)*eta6''*lambda1'' - mu23''*mu45'' + mu25''*mu34''"},
};

// The solved closed forms of the fifteen bound degree-3 factors. The first
// coefficient of mu12'' is -1: eliminating mu24'', mu25'', mu26'' from the
// second m12-condition forces it.
inline std::vector<std::pair<CurveLabel, std::string>> degree3_solutions() {
    using L = CurveLabel;
    return {
        {L::M(1, 3), "mu34'' + mu35'' + mu36''"},
        {L::M(2, 3), "-mu34'' - a*mu35'' - c*mu36''"},
        {L::M(1, 4), "mu34'' + (b-1)*mu45'' + (1-d)*mu46''"},
        {L::M(2, 4), "mu34'' + (b-a)*mu45'' + (c-d)*mu46''"},
        {L::M(1, 5), "(1/b)*mu35'' + ((1-b)/b)*mu45'' + ((d-b)/b)*mu56''"},
        {L::M(2, 5), "(a/b)*mu35'' + ((a-b)/b)*mu45'' + (" + G1 + "/b)*mu56''"},
        {L::M(1, 6), "(1/d)*mu36'' + ((d-1)/d)*mu46'' + ((b-d)/d)*mu56''"},
        {L::M(2, 6), "(c/d)*mu36'' + ((d-c)/d)*mu46'' - (" + G1 + "/d)*mu56''"},
        {L::Q6(1), "-(" + G1 + "/" + G3 + ")*mu34''*mu56'' - (a*(d-c)/" + G3 +
                       ")*mu35''*mu46'' - (c*(b-a)/" + G3 + ")*mu36''*mu45''"},
        {L::Q6(2), "((b-d)/" + G3 + ")*mu34''*mu56'' + ((1-d)/" + G3 +
                       ")*mu35''*mu46'' + ((1-b)/" + G3 + ")*mu36''*mu45''"},
        {L::M(1, 2), "-mu34'' - (a/b)*mu35'' - (c/d)*mu36'' + ((a-b)*(b-1)/b)*mu45'' + "
                     "((d-c)*(d-1)/d)*mu46'' + ((b-d)*" + G1 + "/(b*d))*mu56''"},
        {L::Q6(3), "((a-c)/" + G3 + ")*mu34''*mu56'' + (a*(1-c)/(b*" + G3 +
                       "))*mu35''*mu46'' + (c*(1-a)/(d*" + G3 +
                       "))*mu36''*mu45'' + (1/(b*d))*mu45''*mu46'' - (1/d)*mu45''*mu56'' + "
                       "(1/b)*mu46''*mu56''"},
        {L::Q6(4), "(" + G2 + "/" + G3 + ")*mu34''*mu56'' - (1/(b*d))*mu35''*mu36'' + "
                       "((1-d)*(c-d)*(a-1)/(d*" + G3 + "))*mu35''*mu46'' - "
                       "(1/d)*mu35''*mu56'' + ((1-c)*(b-1)*(a-b)/(b*" + G3 +
                       "))*mu36''*mu45'' - (1/b)*mu36''*mu56''"},
        {L::Q6(5), "(1/d)*mu34''*mu36'' - (1/d)*mu34''*mu46'' + ((b-d)*(1-a)*" + G1 + "/(d*" +
                       G3 + "))*mu34''*mu56'' + (a*" + G2 + "/" + G3 +
                       ")*mu35''*mu46'' + ((b-1)*(a-b)*(a-c)/" + G3 +
                       ")*mu36''*mu45'' - mu36''*mu46''"},
        {L::Q6(6), "-(1/b)*mu34''*mu35'' - (1/b)*mu34''*mu45'' + ((1-c)*(b-d)*" + G1 + "/(b*" +
                       G3 + "))*mu34''*mu56'' - mu35''*mu45'' + ((d-1)*(c-d)*(a-c)/" + G3 +
                       ")*mu35''*mu46'' + (c*" + G2 + "/" + G3 + ")*mu36''*mu45''"},
    };
}

// The nine +1 monomials of the cubic form.
inline const char* kCubicPlusTerms[9] = {
    "eta1'*mu12'*lambda2'", "eta2'*mu23'*lambda3'", "eta3'*mu13'*lambda1'",
    "eta4'*mu46'*lambda6'", "eta5'*mu45'*lambda4'", "eta6'*mu56'*lambda5'",
    "mu14'*mu25'*mu36'",    "mu15'*mu26'*mu34'",    "mu16'*mu24'*mu35'"};

// The solved coordinates displayed for the degree-3 parametrization.
inline std::vector<std::pair<CurveLabel, std::string>> psi6_displays() {
    using L = CurveLabel;
    return {
        {L::M(1, 2), "mu23' + mu24' + mu25' + mu26'"},
        {L::M(1, 3), "mu23' - mu34' - mu35' - mu36'"},
        {L::M(1, 4), "-mu24' - mu34' + mu45' - mu46'"},
        {L::M(1, 5), "-mu25' - mu35' - mu45' + mu56'"},
        {L::M(1, 6), "-mu26' - mu36' + mu46' - mu56'"},
        {L::Q6(2), "mu34'*mu56' + mu35'*mu46' + mu36'*mu45' + lambda1'"},
        {L::Q6(3), "-mu24'*mu56' - mu25'*mu46' - mu26'*mu45' + lambda1'"},
        {L::Q6(4), "-mu23'*mu56' + mu25'*mu36' - mu26'*mu35' - lambda1'"},
        {L::Q6(5), "-mu23'*mu46' - mu24'*mu36' + mu26'*mu34' - lambda1'"},
        {L::Q6(6), "-mu23'*mu45' + mu24'*mu35' - mu25'*mu34' - lambda1'"},
    };
}

// The 15 cubic terms + 30 bilinear terms of the solved lambda1' for r=7: the
// sum over perfect matchings of {2..7} with sign -sgn(matching), plus
// sum_{j<k} mu'_jk (nu'_1k - nu'_1j).
inline ParamElement psi7_lambda1_display(const std::map<CurveLabel, ParamElement>& coords) {
    auto mu = [&](int j, int k) { return coords.at(CurveLabel::M(j, k)); };
    auto nu1 = [&](int l) { return coords.at(CurveLabel::Q7(1, l)); };
    ParamElement rhs;
    std::vector<int> rest{3, 4, 5, 6, 7};
    for (int a : rest) {
        std::vector<int> r1;
        for (int t : rest)
            if (t != a) r1.push_back(t);
        for (std::size_t pick = 1; pick <= 3; ++pick) {
            int w = r1[0], x = r1[pick];
            std::vector<int> yz;
            for (std::size_t t = 1; t <= 3; ++t)
                if (t != pick) yz.push_back(r1[t]);
            std::array<int, 6> m{2, a, std::min(w, x), std::max(w, x),
                                 std::min(yz[0], yz[1]), std::max(yz[0], yz[1])};
            if (m[2] > m[4]) {
                std::swap(m[2], m[4]);
                std::swap(m[3], m[5]);
            }
            int sign = 1;
            for (std::size_t i = 0; i < 6; ++i)
                for (std::size_t j = i + 1; j < 6; ++j)
                    if (m[i] > m[j]) sign = -sign;
            rhs = rhs + mu(m[0], m[1]) * mu(m[2], m[3]) * mu(m[4], m[5]) * Rational(-sign);
        }
    }
    for (int j = 2; j <= 7; ++j)
        for (int k = j + 1; k <= 7; ++k) rhs = rhs + mu(j, k) * (nu1(k) - nu1(j));
    return rhs;
}

} // namespace torsor::fixtures
