// Graded free modules, their elements, and module monomial orders.
//
// A FreeModule carries one integer twist per basis vector; an element is a
// sorted term list (coefficient, component, monomial). Two orders are used:
// position-over-term for general module computations and the Schreyer order
// induced by the leading terms of a generating set for syzygy extraction.
#ifndef TORALG_MODULE_HPP
#define TORALG_MODULE_HPP

#include <algorithm>
#include <memory>
#include <vector>

#include "toralg/polynomial.hpp"

namespace toralg {

struct FreeModule {
    std::vector<int> twists;

    int rank() const { return static_cast<int>(twists.size()); }

    static FreeModule with_rank(int r, int twist = 0) {
        FreeModule f;
        f.twists.assign(static_cast<std::size_t>(r), twist);
        return f;
    }
};

// A module monomial: component index plus monomial.
struct MMon {
    int comp = 0;
    Monomial m;

    bool operator==(const MMon& o) const { return comp == o.comp && m == o.m; }
};

class ModuleOrder;
using ModuleOrderPtr = std::shared_ptr<const ModuleOrder>;

class ModuleOrder {
public:
    enum class Kind { pot, schreyer };

    static ModuleOrderPtr pot(MonomialOrder ring_order) {
        auto o = std::make_shared<ModuleOrder>();
        o->kind_ = Kind::pot;
        o->ring_order_ = ring_order;
        return o;
    }

    // Induced order: m e_i > m' e_j iff m*lead(g_i) > m'*lead(g_j) in the
    // parent order, ties broken by smaller generator index first.
    static ModuleOrderPtr schreyer(ModuleOrderPtr parent, std::vector<MMon> leads,
                                   MonomialOrder ring_order) {
        auto o = std::make_shared<ModuleOrder>();
        o->kind_ = Kind::schreyer;
        o->ring_order_ = ring_order;
        o->parent_ = std::move(parent);
        o->leads_ = std::move(leads);
        return o;
    }

    const MonomialOrder& ring_order() const { return ring_order_; }

    // -1/0/+1 for a < b / a == b / a > b
    int compare(const MMon& a, const MMon& b) const {
        if (kind_ == Kind::pot) {
            if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;  // lower position is bigger
            return toralg::compare(a.m, b.m, ring_order_);
        }
        MMon pa{leads_[static_cast<std::size_t>(a.comp)].comp,
                a.m * leads_[static_cast<std::size_t>(a.comp)].m};
        MMon pb{leads_[static_cast<std::size_t>(b.comp)].comp,
                b.m * leads_[static_cast<std::size_t>(b.comp)].m};
        int c = parent_->compare(pa, pb);
        if (c != 0) return c;
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return 0;
    }

private:
    Kind kind_ = Kind::pot;
    MonomialOrder ring_order_;
    ModuleOrderPtr parent_;
    std::vector<MMon> leads_;
};

template <class K>
struct MTerm {
    K c;
    MMon mm;
};

// Element of a free module; terms strictly decreasing in a fixed module order.
// The order is supplied by the caller everywhere it matters, so the value
// itself stays light.
template <class K>
class MVec {
public:
    MVec() = default;
    explicit MVec(RingPtr ring) : ring_(std::move(ring)) {}

    MVec(RingPtr ring, std::vector<MTerm<K>> terms, const ModuleOrder& ord)
        : ring_(std::move(ring)), terms_(std::move(terms)) {
        normalize(ord);
    }

    static MVec zero(RingPtr ring) { return MVec(std::move(ring)); }

    // f * e_comp
    static MVec from_poly(const Polynomial<K>& f, int comp, const ModuleOrder& ord) {
        MVec v(f.ring());
        v.terms_.reserve(f.terms().size());
        for (const auto& t : f.terms()) v.terms_.push_back({t.c, {comp, t.m}});
        v.normalize(ord);
        return v;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<MTerm<K>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    const MTerm<K>& lead() const {
        if (terms_.empty()) throw std::invalid_argument("leading term of zero vector");
        return terms_.front();
    }

    // total degree of a homogeneous element, using the ambient twists
    int degree(const FreeModule& mod) const {
        if (terms_.empty()) throw std::invalid_argument("degree of zero vector");
        return terms_.front().mm.m.deg + mod.twists[static_cast<std::size_t>(terms_.front().mm.comp)];
    }

    bool is_homogeneous(const FreeModule& mod) const {
        if (terms_.empty()) return true;
        int d = degree(mod);
        for (const auto& t : terms_)
            if (t.mm.m.deg + mod.twists[static_cast<std::size_t>(t.mm.comp)] != d) return false;
        return true;
    }

    // component polynomial (for conversions and matrix assembly)
    Polynomial<K> component(int comp) const {
        std::vector<Term<K>> out;
        for (const auto& t : terms_)
            if (t.mm.comp == comp) out.push_back({t.c, t.mm.m});
        return Polynomial<K>(ring_, std::move(out));
    }

    int max_component() const {
        int m = -1;
        for (const auto& t : terms_) m = std::max(m, t.mm.comp);
        return m;
    }

    MVec negated() const {
        MVec r = *this;
        for (auto& t : r.terms_) t.c = -t.c;
        return r;
    }

    MVec scaled(const K& c) const {
        MVec r(ring_);
        if (FieldOps<K>::is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({c * t.c, t.mm});
        return r;
    }

    // this -= c * m * g, single merge pass
    void sub_scaled(const K& c, const Monomial& m, const MVec& g, const ModuleOrder& ord) {
        std::vector<MTerm<K>> other;
        other.reserve(g.terms_.size());
        for (const auto& t : g.terms_) other.push_back({c * t.c, {t.mm.comp, t.mm.m * m}});
        terms_ = merge(terms_, other, ord, true);
    }

    void add(const MVec& g, const ModuleOrder& ord) { terms_ = merge(terms_, g.terms_, ord, false); }
    void sub(const MVec& g, const ModuleOrder& ord) { terms_ = merge(terms_, g.terms_, ord, true); }

    // re-sorts the terms under a different order (e.g. Schreyer -> pot)
    MVec rebased(const ModuleOrder& ord) const {
        MVec r(ring_);
        r.terms_ = terms_;
        r.normalize(ord);
        return r;
    }

    bool operator==(const MVec& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (!(terms_[i].c == o.terms_[i].c) || !(terms_[i].mm == o.terms_[i].mm)) return false;
        return true;
    }

private:
    RingPtr ring_;
    std::vector<MTerm<K>> terms_;

    void normalize(const ModuleOrder& ord) {
        std::sort(terms_.begin(), terms_.end(), [&](const MTerm<K>& x, const MTerm<K>& y) {
            return ord.compare(x.mm, y.mm) > 0;
        });
        std::vector<MTerm<K>> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().mm == t.mm)
                out.back().c += t.c;
            else
                out.push_back(std::move(t));
            if (!out.empty() && FieldOps<K>::is_zero(out.back().c)) out.pop_back();
        }
        terms_ = std::move(out);
    }

    static std::vector<MTerm<K>> merge(const std::vector<MTerm<K>>& a,
                                       const std::vector<MTerm<K>>& b, const ModuleOrder& ord,
                                       bool minus) {
        std::vector<MTerm<K>> out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            int c = ord.compare(a[i].mm, b[j].mm);
            if (c > 0) {
                out.push_back(a[i++]);
            } else if (c < 0) {
                out.push_back(minus ? MTerm<K>{-b[j].c, b[j].mm} : b[j]);
                ++j;
            } else {
                K s = minus ? K(a[i].c - b[j].c) : K(a[i].c + b[j].c);
                if (!FieldOps<K>::is_zero(s)) out.push_back({std::move(s), a[i].mm});
                ++i;
                ++j;
            }
        }
        for (; i < a.size(); ++i) out.push_back(a[i]);
        for (; j < b.size(); ++j) out.push_back(minus ? MTerm<K>{-b[j].c, b[j].mm} : b[j]);
        return out;
    }
};

}  // namespace toralg

#endif
