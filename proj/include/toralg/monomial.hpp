// Monomials with dense exponent vectors and the two graded orders used here.
#ifndef TORALG_MONOMIAL_HPP
#define TORALG_MONOMIAL_HPP

#include <array>
#include <cassert>
#include <cstdint>
#include <stdexcept>

namespace toralg {

// Hard cap on ambient variables; inputs beyond this are rejected at parse time.
inline constexpr int kMaxVars = 16;

struct Monomial {
    std::array<std::uint16_t, kMaxVars> e{};
    std::int32_t deg = 0;   // cached sum of exponents
    std::uint8_t nvars = 0;

    static Monomial one(int n) {
        assert(n >= 0 && n <= kMaxVars);
        Monomial m;
        m.nvars = static_cast<std::uint8_t>(n);
        return m;
    }

    static Monomial var(int n, int i, int power = 1) {
        Monomial m = one(n);
        assert(i >= 0 && i < n);
        m.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(power);
        m.deg = power;
        return m;
    }

    bool is_one() const { return deg == 0; }

    int exponent(int i) const { return e[static_cast<std::size_t>(i)]; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        assert(a.nvars == b.nvars);
        Monomial m = a;
        for (int i = 0; i < a.nvars; ++i) m.e[i] = static_cast<std::uint16_t>(m.e[i] + b.e[i]);
        m.deg = a.deg + b.deg;
        return m;
    }

    // this | m ?
    bool divides(const Monomial& m) const {
        assert(nvars == m.nvars);
        if (deg > m.deg) return false;
        for (int i = 0; i < nvars; ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    // exact quotient; caller guarantees divisibility
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        assert(b.divides(a));
        Monomial m = a;
        for (int i = 0; i < a.nvars; ++i) m.e[i] = static_cast<std::uint16_t>(m.e[i] - b.e[i]);
        m.deg = a.deg - b.deg;
        return m;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        assert(a.nvars == b.nvars);
        Monomial m = a;
        m.deg = 0;
        for (int i = 0; i < a.nvars; ++i) {
            m.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
            m.deg += m.e[i];
        }
        return m;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        assert(a.nvars == b.nvars);
        for (int i = 0; i < a.nvars; ++i)
            if (a.e[i] && b.e[i]) return false;
        return true;
    }

    bool operator==(const Monomial& o) const {
        if (nvars != o.nvars || deg != o.deg) return false;
        for (int i = 0; i < nvars; ++i)
            if (e[i] != o.e[i]) return false;
        return true;
    }
};

enum class OrderKind { degrevlex, deglex };

// Variable precedence is positional: index 0 is the most significant variable,
// i.e. the declared variable order of the ring.
struct MonomialOrder {
    OrderKind kind = OrderKind::degrevlex;

    bool operator==(const MonomialOrder&) const = default;
};

// Returns -1, 0, +1 for a < b, a == b, a > b.
inline int compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
    if (a.nvars != b.nvars) throw std::invalid_argument("monomials from different rings");
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    if (ord.kind == OrderKind::degrevlex) {
        for (int i = a.nvars - 1; i >= 0; --i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
        return 0;
    }
    for (int i = 0; i < a.nvars; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
    return 0;
}

}  // namespace toralg

#endif
