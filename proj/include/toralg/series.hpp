// Integer polynomials in one variable t and rational power series built from
// them: the carriers of Hilbert numerators and of Poincare/Bass series.
#ifndef TORALG_SERIES_HPP
#define TORALG_SERIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "toralg/errors.hpp"

namespace toralg {

// Coefficients are int64; every polynomial handled here has tiny degree and
// small coefficients (series prefixes stay well below 2^40 at desk scale).
using IntPoly = std::vector<long long>;

inline void ip_trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline IntPoly ip_trimmed(IntPoly p) {
    ip_trim(p);
    return p;
}

inline bool ip_is_zero(const IntPoly& p) {
    for (long long c : p)
        if (c) return false;
    return true;
}

inline IntPoly ip_add(const IntPoly& a, const IntPoly& b) {
    IntPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    ip_trim(c);
    return c;
}

inline IntPoly ip_sub(const IntPoly& a, const IntPoly& b) {
    IntPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    ip_trim(c);
    return c;
}

inline IntPoly ip_mul(const IntPoly& a, const IntPoly& b) {
    if (ip_is_zero(a) || ip_is_zero(b)) return {};
    IntPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    ip_trim(c);
    return c;
}

inline IntPoly ip_shift(const IntPoly& a, int k) {
    if (ip_is_zero(a)) return {};
    IntPoly c(a.size() + static_cast<std::size_t>(k), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i + static_cast<std::size_t>(k)] = a[i];
    return c;
}

inline long long ip_eval1(const IntPoly& a) {
    long long s = 0;
    for (long long c : a) s += c;
    return s;
}

inline bool ip_eq(const IntPoly& a, const IntPoly& b) { return ip_trimmed(a) == ip_trimmed(b); }

// exact division by (1 - t); caller guarantees a(1) == 0
inline IntPoly ip_div_one_minus_t(const IntPoly& a) {
    if (ip_is_zero(a)) return {};
    // a(t) = (1 - t) q(t): q_i = a_i + q_{i-1}
    IntPoly q(a.size() - 1, 0);
    long long carry = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        carry += a[i];
        q[i] = carry;
    }
    ip_trim(q);
    return q;
}

inline IntPoly ip_binomial_power(long long c0, long long c1, int k) {
    IntPoly r{1};
    for (int i = 0; i < k; ++i) r = ip_mul(r, IntPoly{c0, c1});
    return r;
}

// ---------------------------------------------------------------------------
// Rational series t^shift * num(t) / den(t), den(0) = 1.
// ---------------------------------------------------------------------------

struct RationalSeries {
    int shift = 0;
    IntPoly numerator;
    IntPoly denominator{1};

    // first `count` coefficients of the expansion
    std::vector<long long> expand(int count) const {
        if (denominator.empty() || denominator[0] != 1)
            throw consistency_error("series denominator must have constant term 1");
        std::vector<long long> a(static_cast<std::size_t>(count), 0);
        for (int i = 0; i < count; ++i) {
            long long v =
                i < static_cast<int>(numerator.size()) ? numerator[static_cast<std::size_t>(i)] : 0;
            for (int j = 1; j <= i && j < static_cast<int>(denominator.size()); ++j)
                v -= denominator[static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(i - j)];
            a[static_cast<std::size_t>(i)] = v;
        }
        std::vector<long long> out(static_cast<std::size_t>(count), 0);
        for (int i = 0; i + shift < count; ++i)
            if (i < count) out[static_cast<std::size_t>(i + shift)] = a[static_cast<std::size_t>(i)];
        return out;
    }
};

// equality as rational functions (cross-multiplication, shifts folded in)
inline bool series_equal(const RationalSeries& a, const RationalSeries& b) {
    IntPoly lhs = ip_mul(ip_shift(a.numerator, a.shift), b.denominator);
    IntPoly rhs = ip_mul(ip_shift(b.numerator, b.shift), a.denominator);
    return ip_eq(lhs, rhs);
}

// True iff the expansion of s matches the observed prefix exactly.
inline bool series_crosscheck(const RationalSeries& s, const std::vector<long long>& observed) {
    std::vector<long long> got = s.expand(static_cast<int>(observed.size()));
    return got == observed;
}

// ---------------------------------------------------------------------------
// Rendering. Inline form for JSON-adjacent contexts and logs; block form
// mirrors the two-row superscript layout of the reference output.
// ---------------------------------------------------------------------------

namespace seriesfmt {

inline std::string term_str(long long c, int deg, bool first) {
    std::string out;
    long long a = c < 0 ? -c : c;
    if (first)
        out += c < 0 ? "-" : "";
    else
        out += c < 0 ? " - " : " + ";
    if (deg == 0 || a != 1) out += std::to_string(a);
    if (deg >= 1) {
        out += "T";
        if (deg > 1) out += "^" + std::to_string(deg);
    }
    return out;
}

inline std::string poly_inline(const IntPoly& p) {
    if (ip_is_zero(p)) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        out += term_str(p[i], static_cast<int>(i), first);
        first = false;
    }
    return out;
}

// detects p == (c0 + c1 t)^k for k >= 2 to print the factored power form
inline bool is_binomial_power(const IntPoly& p, long long c0, long long c1, int& k) {
    if (p.size() < 3) return false;
    int deg = static_cast<int>(p.size()) - 1;
    if (ip_eq(p, ip_binomial_power(c0, c1, deg))) {
        k = deg;
        return true;
    }
    return false;
}

// two-row rendering: returns {exponent line, base line}
inline std::pair<std::string, std::string> poly_block(const IntPoly& p) {
    int k = 0;
    if (is_binomial_power(p, 1, 1, k)) {
        std::string base = "(1 + T)";
        std::string exp(base.size(), ' ');
        return {exp + std::to_string(k), base};
    }
    if (is_binomial_power(p, 1, -1, k)) {
        std::string base = "(1 - T)";
        std::string exp(base.size(), ' ');
        return {exp + std::to_string(k), base};
    }
    if (ip_is_zero(p)) return {"", "0"};
    std::string base, exp;
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        int deg = static_cast<int>(i);
        long long a = p[i] < 0 ? -p[i] : p[i];
        std::string piece;
        if (first)
            piece += p[i] < 0 ? "-" : "";
        else
            piece += p[i] < 0 ? " - " : " + ";
        if (deg == 0 || a != 1) piece += std::to_string(a);
        if (deg >= 1) piece += "T";
        base += piece;
        exp.resize(base.size(), ' ');
        if (deg > 1) {
            std::string d = std::to_string(deg);
            exp += d;
            base.resize(exp.size(), ' ');
        }
        first = false;
    }
    // trim trailing spaces on base
    while (!base.empty() && base.back() == ' ') base.pop_back();
    while (!exp.empty() && exp.back() == ' ') exp.pop_back();
    return {exp, base};
}

}  // namespace seriesfmt

inline std::string series_inline(const RationalSeries& s) {
    std::string out;
    if (s.shift == 1)
        out += "T * ";
    else if (s.shift > 1)
        out += "T^" + std::to_string(s.shift) + " * ";
    bool trivial_den = ip_eq(s.denominator, IntPoly{1});
    std::string num = seriesfmt::poly_inline(s.numerator);
    if (trivial_den) {
        out += num;
    } else {
        out += "(" + num + ")/(" + seriesfmt::poly_inline(s.denominator) + ")";
    }
    return out;
}

// Multi-line fraction with superscripts on their own row, centered over the
// bar. Returns the lines without a common indent.
inline std::vector<std::string> series_block(const RationalSeries& s) {
    auto [nexp, nbase] = seriesfmt::poly_block(s.numerator);
    std::string prefix;
    if (s.shift == 1)
        prefix = "T * ";
    else if (s.shift > 1)
        prefix = "T^" + std::to_string(s.shift) + " * ";
    if (ip_eq(s.denominator, IntPoly{1})) {
        std::vector<std::string> lines;
        if (!nexp.empty()) lines.push_back(std::string(prefix.size(), ' ') + nexp);
        lines.push_back(prefix + nbase);
        return lines;
    }
    auto [dexp, dbase] = seriesfmt::poly_block(s.denominator);
    std::size_t width = std::max(nbase.size(), dbase.size()) + 2;
    auto center = [&](const std::string& line, std::size_t base_width) {
        std::size_t pad = (width - base_width) / 2;
        return std::string(prefix.size() + pad, ' ') + line;
    };
    std::vector<std::string> lines;
    if (!nexp.empty()) lines.push_back(center(nexp, nbase.size()));
    lines.push_back(center(nbase, nbase.size()));
    lines.push_back(prefix + std::string(width, '-'));
    if (!dexp.empty()) lines.push_back(center(dexp, dbase.size()));
    lines.push_back(center(dbase, dbase.size()));
    return lines;
}

}  // namespace toralg

#endif
