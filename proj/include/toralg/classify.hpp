// The classification decision tree and the formulas recovering p, q, r from
// Betti and Bass numbers. Pure integer arithmetic; no ring computations here.
#ifndef TORALG_CLASSIFY_HPP
#define TORALG_CLASSIFY_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "toralg/errors.hpp"

namespace toralg {

enum class ClassTag { C, S, B, T, G, H, codepth_gt3, zero_ring };

struct RingClass {
    ClassTag tag = ClassTag::C;
    int c = 0;          // parameter of C(c)
    long long r = 0;    // parameter of G(r)
    long long p = 0, q = 0;  // parameters of H(p,q)

    bool operator==(const RingClass&) const = default;
};

inline RingClass class_C(int c) { return {ClassTag::C, c, 0, 0, 0}; }
inline RingClass class_S() { return {ClassTag::S, 0, 0, 0, 0}; }
inline RingClass class_B() { return {ClassTag::B, 0, 0, 0, 0}; }
inline RingClass class_T() { return {ClassTag::T, 0, 0, 0, 0}; }
inline RingClass class_G(long long r) { return {ClassTag::G, 0, r, 0, 0}; }
inline RingClass class_H(long long p, long long q) { return {ClassTag::H, 0, 0, p, q}; }
inline RingClass class_codepth_gt3() { return {ClassTag::codepth_gt3, 0, 0, 0, 0}; }
inline RingClass class_zero_ring() { return {ClassTag::zero_ring, 0, 0, 0, 0}; }

// parameterized rendering: "C(3)", "G(2)", "H(0,0)", "B", "S", "T", ...
inline std::string class_string(const RingClass& cls) {
    switch (cls.tag) {
        case ClassTag::C: return "C(" + std::to_string(cls.c) + ")";
        case ClassTag::S: return "S";
        case ClassTag::B: return "B";
        case ClassTag::T: return "T";
        case ClassTag::G: return "G(" + std::to_string(cls.r) + ")";
        case ClassTag::H:
            return "H(" + std::to_string(cls.p) + "," + std::to_string(cls.q) + ")";
        case ClassTag::codepth_gt3: return "codepth > 3";
        case ClassTag::zero_ring: return "zero ring";
    }
    return "";
}

// non-parameterized letter used by the data table
inline std::string class_letter(const RingClass& cls) {
    switch (cls.tag) {
        case ClassTag::C: return "C";
        case ClassTag::S: return "S";
        case ClassTag::B: return "B";
        case ClassTag::T: return "T";
        case ClassTag::G: return "G";
        case ClassTag::H: return "H";
        case ClassTag::codepth_gt3: return "codepth > 3";
        case ClassTag::zero_ring: return "zero ring";
    }
    return "";
}

struct PQR {
    long long p = 0, q = 0, r = 0;
};

// The homological invariants feeding the decision tree. Betti and Bass
// numbers stay unset until a branch needs them.
struct InvariantBundle {
    int c = 0, e = 0, h = 0, l = 0, n = 0, m = 0;  // m = l + 1
    std::optional<long long> beta2, beta3, beta4;
    std::optional<long long> mu_second;  // mu_{e-2}
    std::optional<long long> mu_top;     // mu_{e-1}
};

inline long long binom(long long a, long long b) {
    if (b < 0 || a < b) return 0;
    long long r = 1;
    for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

inline std::pair<long long, long long> pq_from_bettis(int e, int l, int n, long long b2,
                                                      long long b3, long long b4) {
    long long p = n + static_cast<long long>(l) * e + b2 - b3 + binom(e - 1, 3);
    long long q = (n - p) * e + l * b2 + b3 - b4 + binom(e - 1, 4);
    return {p, q};
}

inline long long r_from_mu(int l, int n, long long mu_second) { return l + n - mu_second; }

inline PQR compute_pqr(int e, int l, int n, long long b2, long long b3, long long b4,
                       long long mu_second) {
    auto [p, q] = pq_from_bettis(e, l, n, b2, b3, b4);
    return {p, q, r_from_mu(l, n, mu_second)};
}

// One pass over the decision tree. Either classifies, or reports which group
// of invariants the reached branch still needs.
enum class NeedInvariant { betti, bass };

struct ClassifyStep {
    std::optional<RingClass> cls;
    std::optional<NeedInvariant> need;
    std::optional<PQR> pqr;  // set when the p/q (and possibly r) were computed
};

inline ClassifyStep classify_step(const InvariantBundle& b) {
    ClassifyStep out;
    if (b.c > 3) {
        out.cls = class_codepth_gt3();
        return out;
    }
    if (b.c <= 1) {
        out.cls = class_C(b.c);
        return out;
    }
    if (b.c == 2) {
        out.cls = (b.h == 0 && b.n == 1) ? class_C(2) : class_S();
        return out;
    }
    // c == 3
    if (b.h == 0 && b.n == 1) {
        long long r = b.l + 1;
        out.pqr = r == 3 ? PQR{3, 1, r} : PQR{0, 1, r};
        out.cls = r == 3 ? class_C(3) : class_G(r);
        return out;
    }
    if (b.h == 2) {
        // rings with c = 3 and h = 2 are Golod
        out.pqr = PQR{0, 0, 0};
        out.cls = class_H(0, 0);
        return out;
    }
    if (!b.beta2 || !b.beta3 || !b.beta4) {
        out.need = NeedInvariant::betti;
        return out;
    }
    auto [p, q] = pq_from_bettis(b.e, b.l, b.n, *b.beta2, *b.beta3, *b.beta4);
    if (p < 0 || q < 0)
        throw consistency_error("invariants produced negative p or q (p=" + std::to_string(p) +
                                ", q=" + std::to_string(q) + ")");
    out.pqr = PQR{p, q, 0};
    if (q >= 2 || p == 2 || p >= 4) {
        out.cls = class_H(p, q);
        return out;
    }
    if (!b.mu_second) {
        out.need = NeedInvariant::bass;
        return out;
    }
    long long r = r_from_mu(b.l, b.n, *b.mu_second);
    out.pqr = PQR{p, q, r};
    if (p == 0) {
        out.cls = (q == r) ? class_H(0, q) : class_G(r);
        return out;
    }
    if (p == 1) {
        out.cls = (q == r) ? class_H(1, q) : class_B();
        return out;
    }
    // p == 3
    if (!b.mu_top) {
        out.need = NeedInvariant::bass;
        return out;
    }
    if (*b.mu_top == *b.mu_second + static_cast<long long>(b.l) * b.n - 2)
        out.cls = class_T();
    else
        out.cls = class_H(3, q);
    return out;
}

// Total version: classifies or throws naming the missing invariant group.
inline RingClass classify_from_invariants(const InvariantBundle& b, PQR* pqr_out = nullptr) {
    ClassifyStep step = classify_step(b);
    if (!step.cls) {
        if (step.need == NeedInvariant::betti)
            throw std::invalid_argument(
                "classification requires the Betti numbers beta_2, beta_3, beta_4");
        throw std::invalid_argument(
            "classification requires the Bass numbers mu_{e-2} and mu_{e-1}");
    }
    if (pqr_out && step.pqr) *pqr_out = *step.pqr;
    return *step.cls;
}

// Alternative discriminant for p = 3, q = 0: tau = beta5 - beta4 - l*beta3
// - (n-3)*beta2 is 1 for class T and 0 for class H(3,q).
inline int beta5_discriminant(int l, int n, long long b2, long long b3, long long b4,
                              long long b5) {
    long long tau = b5 - b4 - static_cast<long long>(l) * b3 - (static_cast<long long>(n) - 3) * b2;
    if (tau != 0 && tau != 1)
        throw consistency_error("beta_5 discriminant out of range: tau = " + std::to_string(tau));
    return static_cast<int>(tau);
}

}  // namespace toralg

#endif
