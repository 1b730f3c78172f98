// Shared test utilities: compact ring/polynomial construction and the
// power-series expansion oracle used to freeze expected Betti/Bass values.
#ifndef TORALG_TESTS_HELPERS_HPP
#define TORALG_TESTS_HELPERS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "toralg/parse.hpp"
#include "toralg/polynomial.hpp"

namespace toralg::testing {

inline RingPtr qq_ring(std::vector<std::string> vars) {
    return make_ring(rationals_field(), std::move(vars));
}

inline RingPtr gf_ring(std::uint32_t p, std::vector<std::string> vars) {
    return make_ring(prime_field(p), std::move(vars));
}

template <class K = Rational>
Polynomial<K> pp(const RingPtr& ring, const std::string& text) {
    return parse_polynomial<K>(ring, text);
}

template <class K = Rational>
std::vector<Polynomial<K>> pps(const RingPtr& ring, const std::vector<std::string>& texts) {
    std::vector<Polynomial<K>> out;
    for (const auto& t : texts) out.push_back(parse_polynomial<K>(ring, t));
    return out;
}

// Expansion oracle: first `count` coefficients of num(t)/den(t), den(0) = 1.
// Test-local so expected values never depend on the library's series code.
inline std::vector<long long> expand_series(const std::vector<long long>& num,
                                            const std::vector<long long>& den, int count) {
    std::vector<long long> a(static_cast<std::size_t>(count), 0);
    for (int i = 0; i < count; ++i) {
        long long v = i < static_cast<int>(num.size()) ? num[static_cast<std::size_t>(i)] : 0;
        for (int j = 1; j <= i && j < static_cast<int>(den.size()); ++j)
            v -= den[static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(i - j)];
        a[static_cast<std::size_t>(i)] = v;
    }
    return a;
}

inline std::vector<long long> poly_mul(const std::vector<long long>& a,
                                       const std::vector<long long>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<long long> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

inline std::vector<long long> binomial_power(long long a0, long long a1, int k) {
    std::vector<long long> r{1};
    for (int i = 0; i < k; ++i) r = poly_mul(r, {a0, a1});
    return r;
}

}  // namespace toralg::testing

#endif
