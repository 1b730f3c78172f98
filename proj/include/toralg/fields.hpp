// Coefficient fields: QQ as GMP rationals and prime fields F_p with p < 2^31.
// All arithmetic in the library is exact; there is no floating point anywhere.
#ifndef TORALG_FIELDS_HPP
#define TORALG_FIELDS_HPP

#include <gmpxx.h>

#include <cassert>
#include <cstdint>
#include <string>

#include "toralg/errors.hpp"

namespace toralg {

enum class FieldKind { rationals, prime };

struct CoefficientField {
    FieldKind kind = FieldKind::rationals;
    std::uint32_t characteristic = 0;  // 0 for QQ, a prime < 2^31 otherwise

    bool operator==(const CoefficientField&) const = default;
};

// Deterministic Miller-Rabin; exact for all n < 2^31 with these bases.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
        return static_cast<std::uint64_t>((__uint128_t)a * b % m);
    };
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
        std::uint64_t x = 1, base = a % n, e = d;
        while (e) {
            if (e & 1) x = mulmod(x, base, n);
            base = mulmod(base, base, n);
            e >>= 1;
        }
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

inline CoefficientField rationals_field() { return {FieldKind::rationals, 0}; }

inline CoefficientField prime_field(std::uint32_t p) {
    if (!is_prime(p)) throw unsupported_input_error("characteristic " + std::to_string(p) + " is not prime");
    return {FieldKind::prime, p};
}

// ---------------------------------------------------------------------------
// QQ
// ---------------------------------------------------------------------------

using Rational = mpq_class;

// ---------------------------------------------------------------------------
// F_p. Every value carries its modulus so mixed-modulus arithmetic trips the
// assert instead of corrupting data silently.
// ---------------------------------------------------------------------------

struct Fp {
    std::uint32_t v = 0;
    std::uint32_t p = 0;

    Fp() = default;
    Fp(std::int64_t value, std::uint32_t modulus) : p(modulus) {
        assert(modulus >= 2);
        std::int64_t r = value % static_cast<std::int64_t>(modulus);
        if (r < 0) r += modulus;
        v = static_cast<std::uint32_t>(r);
    }

    bool operator==(const Fp& o) const { return v == o.v; }
    bool operator!=(const Fp& o) const { return v != o.v; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        assert(a.p == b.p);
        std::uint64_t s = static_cast<std::uint64_t>(a.v) + b.v;
        if (s >= a.p) s -= a.p;
        return raw(static_cast<std::uint32_t>(s), a.p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        assert(a.p == b.p);
        std::uint64_t s = static_cast<std::uint64_t>(a.v) + a.p - b.v;
        if (s >= a.p) s -= a.p;
        return raw(static_cast<std::uint32_t>(s), a.p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        assert(a.p == b.p);
        return raw(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v) * b.v % a.p), a.p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
    Fp operator-() const { return raw(v == 0 ? 0 : p - v, p); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    Fp inverse() const {
        assert(v != 0);
        // extended Euclid on (v, p)
        std::int64_t t = 0, newt = 1, r = p, newr = v;
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        assert(r == 1);
        if (t < 0) t += p;
        return raw(static_cast<std::uint32_t>(t), p);
    }

    static Fp raw(std::uint32_t value, std::uint32_t modulus) {
        Fp x;
        x.v = value;
        x.p = modulus;
        return x;
    }
};

// ---------------------------------------------------------------------------
// Uniform interface used by the templated polynomial code.
// ---------------------------------------------------------------------------

template <class K>
struct FieldOps;

template <>
struct FieldOps<Rational> {
    static Rational from_int(std::int64_t v, const CoefficientField&) { return Rational(static_cast<long>(v)); }
    static bool is_zero(const Rational& a) { return sgn(a) == 0; }
    static bool is_one(const Rational& a) { return a == 1; }
    static Rational inverse(const Rational& a) { return Rational(1) / a; }
    static std::string str(const Rational& a) { return a.get_str(); }
};

template <>
struct FieldOps<Fp> {
    static Fp from_int(std::int64_t v, const CoefficientField& f) {
        assert(f.kind == FieldKind::prime);
        return Fp(v, f.characteristic);
    }
    static bool is_zero(const Fp& a) { return a.v == 0; }
    static bool is_one(const Fp& a) { return a.v == 1; }
    static Fp inverse(const Fp& a) { return a.inverse(); }
    static std::string str(const Fp& a) { return std::to_string(a.v); }
};

}  // namespace toralg

#endif
