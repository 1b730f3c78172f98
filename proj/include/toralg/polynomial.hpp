// The polynomial ring descriptor and exact multivariate polynomials over it.
// Values are immutable after construction in the sense that every operation
// returns a fresh normalized polynomial; nothing mutates shared state.
#ifndef TORALG_POLYNOMIAL_HPP
#define TORALG_POLYNOMIAL_HPP

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "toralg/errors.hpp"
#include "toralg/fields.hpp"
#include "toralg/monomial.hpp"

namespace toralg {

struct PolyRing {
    CoefficientField field;
    std::vector<std::string> vars;
    MonomialOrder order;

    int nvars() const { return static_cast<int>(vars.size()); }
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr make_ring(CoefficientField field, std::vector<std::string> vars,
                         MonomialOrder order = {}) {
    if (static_cast<int>(vars.size()) > kMaxVars)
        throw unsupported_input_error("at most " + std::to_string(kMaxVars) +
                                      " variables are supported");
    auto r = std::make_shared<PolyRing>();
    r->field = field;
    r->vars = std::move(vars);
    r->order = order;
    return r;
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    return a && b && a->field == b->field && a->vars == b->vars && a->order == b->order;
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!same_ring(a, b)) throw std::invalid_argument("operands live in different rings");
}

template <class K>
struct Term {
    K c;
    Monomial m;
};

template <class K>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    // Normalizes: sorts terms strictly decreasing, merges duplicates, drops zeros.
    Polynomial(RingPtr ring, std::vector<Term<K>> terms) : ring_(std::move(ring)) {
        terms_ = std::move(terms);
        normalize();
    }

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }

    static Polynomial constant(RingPtr ring, std::int64_t v) {
        K c = FieldOps<K>::from_int(v, ring->field);
        Polynomial p(ring);
        if (!FieldOps<K>::is_zero(c)) p.terms_.push_back({c, Monomial::one(ring->nvars())});
        return p;
    }

    static Polynomial variable(RingPtr ring, int i, int power = 1) {
        Polynomial p(ring);
        p.terms_.push_back({FieldOps<K>::from_int(1, ring->field), Monomial::var(ring->nvars(), i, power)});
        return p;
    }

    static Polynomial term(RingPtr ring, K c, Monomial m) {
        Polynomial p(ring);
        if (!FieldOps<K>::is_zero(c)) p.terms_.push_back({std::move(c), m});
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term<K>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    const Term<K>& leading_term() const {
        if (terms_.empty()) throw std::invalid_argument("leading term of zero polynomial");
        return terms_.front();
    }

    int total_degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.m.deg);
        return d;  // -1 for the zero polynomial
    }

    // True for the zero polynomial as well.
    bool is_homogeneous() const {
        for (const auto& t : terms_)
            if (t.m.deg != terms_.front().m.deg) return false;
        return true;
    }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ring_, b.ring_);
        Polynomial r(a.ring_);
        r.terms_ = merge(a.terms_, b.terms_, a.ring_->order, false);
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ring_, b.ring_);
        Polynomial r(a.ring_);
        r.terms_ = merge(a.terms_, b.terms_, a.ring_->order, true);
        return r;
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& t : r.terms_) t.c = -t.c;
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ring_, b.ring_);
        Polynomial r(a.ring_);
        if (a.is_zero() || b.is_zero()) return r;
        // accumulate b scaled by each term of a; sizes here are desk scale
        for (const auto& t : a.terms_) {
            Polynomial s(a.ring_);
            s.terms_.reserve(b.terms_.size());
            for (const auto& u : b.terms_) s.terms_.push_back({t.c * u.c, t.m * u.m});
            r.terms_ = merge(r.terms_, s.terms_, a.ring_->order, false);
        }
        return r;
    }

    Polynomial scaled(const K& c) const {
        Polynomial r(ring_);
        if (FieldOps<K>::is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({c * t.c, t.m});
        return r;
    }

    // this -= c * m * g, one merge pass; the workhorse of division.
    void sub_scaled(const K& c, const Monomial& m, const Polynomial& g) {
        std::vector<Term<K>> other;
        other.reserve(g.terms_.size());
        for (const auto& t : g.terms_) other.push_back({c * t.c, t.m * m});
        terms_ = merge(terms_, other, ring_->order, true);
    }

    bool operator==(const Polynomial& o) const {
        if (!same_ring(ring_, o.ring_) || terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (!(terms_[i].c == o.terms_[i].c) || !(terms_[i].m == o.terms_[i].m)) return false;
        return true;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& t : terms_) {
            std::string cs = FieldOps<K>::str(t.c);
            bool neg = !cs.empty() && cs[0] == '-';
            if (first) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            if (neg) cs = cs.substr(1);
            std::string ms = monomial_str(t.m);
            if (ms.empty()) {
                out += cs;
            } else {
                if (cs != "1") out += cs + "*";
                out += ms;
            }
            first = false;
        }
        return out;
    }

private:
    RingPtr ring_;
    std::vector<Term<K>> terms_;

    std::string monomial_str(const Monomial& m) const {
        std::string out;
        for (int i = 0; i < m.nvars; ++i) {
            if (m.e[i] == 0) continue;
            if (!out.empty()) out += "*";
            out += ring_->vars[static_cast<std::size_t>(i)];
            if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
        }
        return out;
    }

    void normalize() {
        const MonomialOrder& ord = ring_->order;
        std::sort(terms_.begin(), terms_.end(), [&](const Term<K>& x, const Term<K>& y) {
            return compare(x.m, y.m, ord) > 0;
        });
        std::vector<Term<K>> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().m == t.m)
                out.back().c += t.c;
            else
                out.push_back(std::move(t));
            if (!out.empty() && FieldOps<K>::is_zero(out.back().c)) out.pop_back();
        }
        terms_ = std::move(out);
    }

    // merge two strictly-decreasing term lists, subtracting when `minus`
    static std::vector<Term<K>> merge(const std::vector<Term<K>>& a, const std::vector<Term<K>>& b,
                                      const MonomialOrder& ord, bool minus) {
        std::vector<Term<K>> out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            int c = compare(a[i].m, b[j].m, ord);
            if (c > 0) {
                out.push_back(a[i++]);
            } else if (c < 0) {
                out.push_back(minus ? Term<K>{-b[j].c, b[j].m} : b[j]);
                ++j;
            } else {
                K s = minus ? K(a[i].c - b[j].c) : K(a[i].c + b[j].c);
                if (!FieldOps<K>::is_zero(s)) out.push_back({std::move(s), a[i].m});
                ++i;
                ++j;
            }
        }
        for (; i < a.size(); ++i) out.push_back(a[i]);
        for (; j < b.size(); ++j) out.push_back(minus ? Term<K>{-b[j].c, b[j].m} : b[j]);
        return out;
    }
};

using QPoly = Polynomial<Rational>;
using FpPoly = Polynomial<Fp>;

}  // namespace toralg

#endif
