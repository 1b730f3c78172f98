// Poincare and Bass series by class.
//
// For a quotient of codepth c <= 3 with embedding dimension e, the series are
//
//   P(t) = (1+t)^(e-1) / den(t),        Bass(t) = t^(e-c) * num(t) / den(t),
//
// where den and num depend only on the class and the invariants l, n (and the
// class parameters p, q, r). The complete intersections C(c) have the closed
// forms P = (1+t)^e / (1-t^2)^c and Bass = t^(e-c), handled directly in code.
//
// The remaining classes are driven by the data table below. Coefficients are
// integer-affine expressions in l, n, p, q, r. Every row is exercised by the
// series cross-check tests, which compare expansions against Betti and Bass
// numbers computed by direct resolution.
#ifndef TORALG_SERIES_TABLE_HPP
#define TORALG_SERIES_TABLE_HPP

#include <array>
#include <map>
#include <sstream>

#include "toralg/classify.hpp"
#include "toralg/series.hpp"

namespace toralg {

inline constexpr const char* kSeriesTable = R"(
# class | denominator coefficients t^0..t^5 | bass numerator coefficients t^0..t^5
# coefficient syntax: integer-affine expressions in l, n, p, q, r, e.g. "-n+3"
S | 1, -1, -l, 0, 0, 0          | n, 1, -1, 0, 0, 0
T | 1, -1, -l, -n+3, 0, -1      | n, l, -2, -1, 0, 1
B | 1, -1, -l, -n+1, 1, 0       | n, l-2, -n, 1, 0, 0
G | 1, -1, -l, -n, 1, 0         | n, l-r, -r+1, -1, 1, 0
H | 1, -1, -l, -n+p, q, 0       | n, l-q, 1-p, -1, q, 0
)";

namespace seriestable {

struct Affine {
    long long k0 = 0, kl = 0, kn = 0, kp = 0, kq = 0, kr = 0;

    long long eval(long long l, long long n, long long p, long long q, long long r) const {
        return k0 + kl * l + kn * n + kp * p + kq * q + kr * r;
    }
};

// parses e.g. "-n+3", "l-r", "1-p", "-2"
inline Affine parse_affine(const std::string& text) {
    Affine a;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    while (i < text.size()) {
        long long sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        }
        long long coeff = 1;
        bool saw_digit = false;
        long long v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            ++i;
            saw_digit = true;
        }
        if (saw_digit) coeff = v;
        skip();
        if (i < text.size() && text[i] == '*') {
            ++i;
            skip();
        }
        if (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) {
            char sym = text[i++];
            long long add = sign * coeff;
            switch (sym) {
                case 'l': a.kl += add; break;
                case 'n': a.kn += add; break;
                case 'p': a.kp += add; break;
                case 'q': a.kq += add; break;
                case 'r': a.kr += add; break;
                default: throw consistency_error("series table: unknown symbol");
            }
        } else {
            if (!saw_digit) throw consistency_error("series table: malformed coefficient");
            a.k0 += sign * coeff;
        }
        skip();
    }
    return a;
}

struct Row {
    std::array<Affine, 6> den;
    std::array<Affine, 6> num;
};

inline const std::map<char, Row>& table() {
    static const std::map<char, Row> rows = [] {
        std::map<char, Row> out;
        std::istringstream in(kSeriesTable);
        std::string line;
        while (std::getline(in, line)) {
            std::size_t h = line.find('#');
            if (h != std::string::npos) line = line.substr(0, h);
            bool blank = true;
            for (char ch : line)
                if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
            if (blank) continue;
            std::istringstream cells(line);
            std::string cls, dens, nums;
            std::getline(cells, cls, '|');
            std::getline(cells, dens, '|');
            std::getline(cells, nums, '|');
            char tag = 0;
            for (char ch : cls)
                if (!std::isspace(static_cast<unsigned char>(ch))) tag = ch;
            Row row;
            auto fill = [](const std::string& src, std::array<Affine, 6>& dst) {
                std::istringstream ss(src);
                std::string cell;
                std::size_t k = 0;
                while (std::getline(ss, cell, ',')) {
                    if (k >= dst.size()) throw consistency_error("series table: too many cells");
                    dst[k++] = parse_affine(cell);
                }
                if (k != dst.size()) throw consistency_error("series table: missing cells");
            };
            fill(dens, row.den);
            fill(nums, row.num);
            out[tag] = row;
        }
        return out;
    }();
    return rows;
}

inline IntPoly eval_row(const std::array<Affine, 6>& cells, long long l, long long n, long long p,
                        long long q, long long r) {
    IntPoly out(6, 0);
    for (std::size_t i = 0; i < 6; ++i) out[i] = cells[i].eval(l, n, p, q, r);
    ip_trim(out);
    return out;
}

}  // namespace seriestable

// Series parameters: the class plus e, c, l, n. The class parameters p, q, r
// are read off the RingClass (canonical values for the Gorenstein branch).
inline bool class_has_series(const RingClass& cls) {
    return cls.tag != ClassTag::codepth_gt3 && cls.tag != ClassTag::zero_ring;
}

namespace seriestable {

inline void class_pqr(const RingClass& cls, long long l, long long& p, long long& q,
                      long long& r) {
    switch (cls.tag) {
        case ClassTag::C:
            p = 3;
            q = 1;
            r = 3;
            break;
        case ClassTag::S:
            p = q = r = 0;
            break;
        case ClassTag::B:
            p = 1;
            q = 1;
            r = 2;
            break;
        case ClassTag::T:
            p = 3;
            q = 0;
            r = 0;
            break;
        case ClassTag::G:
            p = 0;
            q = 1;
            r = cls.r;
            break;
        case ClassTag::H:
            p = cls.p;
            q = cls.q;
            r = cls.q;
            break;
        default:
            p = q = r = 0;
            break;
    }
    (void)l;
}

}  // namespace seriestable

inline RationalSeries poincare_series(const RingClass& cls, int e, int c, int l, int n) {
    if (!class_has_series(cls)) throw std::invalid_argument("no series for " + class_string(cls));
    (void)n;
    RationalSeries s;
    if (cls.tag == ClassTag::C) {
        // (1+t)^e / (1-t^2)^c in lowest terms
        s.numerator = ip_binomial_power(1, 1, e - c);
        s.denominator = ip_binomial_power(1, -1, c);
        return s;
    }
    long long p = 0, q = 0, r = 0;
    seriestable::class_pqr(cls, l, p, q, r);
    char tag = class_letter(cls)[0];
    const seriestable::Row& row = seriestable::table().at(tag);
    s.numerator = ip_binomial_power(1, 1, e - 1);
    s.denominator = seriestable::eval_row(row.den, l, n, p, q, r);
    return s;
}

inline RationalSeries bass_series(const RingClass& cls, int e, int c, int l, int n) {
    if (!class_has_series(cls)) throw std::invalid_argument("no series for " + class_string(cls));
    RationalSeries s;
    s.shift = e - c;
    if (cls.tag == ClassTag::C) {
        s.numerator = {1};
        s.denominator = {1};
        return s;
    }
    long long p = 0, q = 0, r = 0;
    seriestable::class_pqr(cls, l, p, q, r);
    char tag = class_letter(cls)[0];
    const seriestable::Row& row = seriestable::table().at(tag);
    s.numerator = seriestable::eval_row(row.num, l, n, p, q, r);
    s.denominator = seriestable::eval_row(row.den, l, n, p, q, r);
    return s;
}

}  // namespace toralg

#endif
