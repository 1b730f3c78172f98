// Buchberger's algorithm for ideals and submodules of free modules, with
// optional syzygy tracking, plus normal forms, reduced bases, syzygy
// generators, minimal generating sets and the ideal-quotient test.
//
// Pair selection is the normal strategy (minimal degree first). The chain
// criterion is applied lazily at pop time; the coprime criterion is applied
// only to untracked single-component pairs, where it is valid.
#ifndef TORALG_GROEBNER_HPP
#define TORALG_GROEBNER_HPP

#include <climits>
#include <cstdint>
#include <set>
#include <unordered_set>
#include <vector>

#include "toralg/module.hpp"

namespace toralg {

// Guards runaway computations. One unit equals one S-pair reduction.
struct ReductionBudget {
    std::uint64_t limit = 1'000'000;
    std::uint64_t used = 0;

    void charge() {
        if (used >= limit)
            throw resource_limit_error("pair-reduction limit of " + std::to_string(limit) +
                                       " exceeded");
        ++used;
    }
};

// Scaling applied to every new basis element (and its tracking vector).
template <class K>
struct BasisScale;

template <>
struct BasisScale<Fp> {
    static Fp factor(const std::vector<MTerm<Fp>>& ts) { return ts.front().c.inverse(); }
};

template <>
struct BasisScale<Rational> {
    // primitive integer coefficients with positive leading coefficient
    static Rational factor(const std::vector<MTerm<Rational>>& ts) {
        mpz_class g = 0, l = 1;
        for (const auto& t : ts) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_num().get_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.get_den().get_mpz_t());
        }
        Rational f(l, g);
        f.canonicalize();
        if (sgn(ts.front().c) < 0) f = -f;
        return f;
    }
};

template <class K>
MVec<K> mul_poly_vec(const Polynomial<K>& f, const MVec<K>& v, const ModuleOrder& ord) {
    MVec<K> out(v.ring());
    for (const auto& t : f.terms()) out.sub_scaled(-t.c, t.m, v, ord);
    return out;
}

template <class K>
class GBEngine {
public:
    GBEngine(RingPtr ring, FreeModule module, ModuleOrderPtr order, bool track)
        : ring_(std::move(ring)),
          module_(std::move(module)),
          order_(std::move(order)),
          track_(track) {
        by_comp_.resize(static_cast<std::size_t>(module_.rank()));
    }

    // Inputs define the tracking coordinates; zero inputs contribute the
    // trivial syzygy e_i and never join the basis.
    void add_input(MVec<K> v) {
        int idx = static_cast<int>(input_leads_.size());
        if (v.is_zero()) {
            input_leads_.push_back({0, Monomial::one(ring_->nvars())});
            input_twists_.push_back(0);
            pending_zero_inputs_.push_back(idx);
            return;
        }
        input_leads_.push_back(v.lead().mm);
        input_twists_.push_back(v.is_homogeneous(module_) ? v.degree(module_) : 0);
        pending_inputs_.emplace_back(idx, std::move(v));
    }

    // Processes all S-pairs of degree <= max_degree.
    void complete(ReductionBudget& budget, int max_degree = INT_MAX) {
        settle_inputs();
        while (!pairs_.empty() && pairs_.begin()->deg <= max_degree) {
            Pair pr = *pairs_.begin();
            pairs_.erase(pairs_.begin());
            budget.charge();
            process_pair(pr);
        }
    }

    const std::vector<MVec<K>>& basis() const { return basis_; }
    const std::vector<MVec<K>>& basis_tracking() const { return tails_; }
    const std::vector<MVec<K>>& collected_syzygies() const { return syz_; }
    int input_count() const { return static_cast<int>(input_leads_.size()); }

    FreeModule tracking_module() const {
        FreeModule f;
        f.twists = input_twists_;
        return f;
    }

    ModuleOrderPtr tracking_order() const { return tracking_order_; }

    // Full normal form against the current basis; no state change.
    MVec<K> normal_form(MVec<K> v) const {
        reduce_full(v, nullptr);
        return v;
    }

    // Returns (remainder, quotients) with v = remainder + sum_i q_i * input_i,
    // the quotients expressed over the tracking coordinates.
    std::pair<MVec<K>, MVec<K>> tracked_reduce(MVec<K> v) const {
        MVec<K> q(ring_);
        reduce_full(v, &q);
        return {std::move(v), q.negated()};
    }

private:
    struct Pair {
        int deg;
        int j;
        int i;
        auto operator<=>(const Pair&) const = default;
    };

    RingPtr ring_;
    FreeModule module_;
    ModuleOrderPtr order_;
    bool track_;

    std::vector<MVec<K>> basis_;
    std::vector<MVec<K>> tails_;  // tracking vectors, parallel to basis_
    std::vector<std::vector<int>> by_comp_;
    std::set<Pair> pairs_;
    std::unordered_set<std::uint64_t> done_;
    std::vector<MVec<K>> syz_;

    std::vector<MMon> input_leads_;
    std::vector<int> input_twists_;
    std::vector<std::pair<int, MVec<K>>> pending_inputs_;
    std::vector<int> pending_zero_inputs_;
    ModuleOrderPtr tracking_order_;

    static std::uint64_t key(int i, int j) {
        if (i > j) std::swap(i, j);
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(i)) << 32) |
               static_cast<std::uint32_t>(j);
    }

    void settle_inputs() {
        if (pending_inputs_.empty() && pending_zero_inputs_.empty()) return;
        if (track_)
            // extending the lead list preserves all comparisons among the
            // previously existing coordinates
            tracking_order_ = ModuleOrder::schreyer(order_, input_leads_, ring_->order);
        if (track_) {
            for (int idx : pending_zero_inputs_) {
                Polynomial<K> one = Polynomial<K>::constant(ring_, 1);
                syz_.push_back(MVec<K>::from_poly(one, idx, *tracking_order_));
            }
        }
        pending_zero_inputs_.clear();
        for (auto& [idx, v] : pending_inputs_) {
            MVec<K> u(ring_);
            if (track_) {
                Polynomial<K> one = Polynomial<K>::constant(ring_, 1);
                u = MVec<K>::from_poly(one, idx, *tracking_order_);
            }
            add_basis_element(std::move(v), std::move(u));
        }
        pending_inputs_.clear();
    }

    void add_basis_element(MVec<K> h, MVec<K> u) {
        K f = BasisScale<K>::factor(h.terms());
        if (!FieldOps<K>::is_one(f)) {
            h = h.scaled(f);
            if (track_) u = u.scaled(f);
        }
        int n = static_cast<int>(basis_.size());
        const MMon& lead = h.lead().mm;
        for (int i : by_comp_[static_cast<std::size_t>(lead.comp)]) {
            const MMon& li = basis_[static_cast<std::size_t>(i)].lead().mm;
            Monomial L = lcm(li.m, lead.m);
            int deg = L.deg + module_.twists[static_cast<std::size_t>(lead.comp)];
            pairs_.insert({deg, n, i});
        }
        by_comp_[static_cast<std::size_t>(lead.comp)].push_back(n);
        basis_.push_back(std::move(h));
        tails_.push_back(std::move(u));
    }

    bool single_component(const MVec<K>& v) const {
        for (const auto& t : v.terms())
            if (t.mm.comp != v.terms().front().mm.comp) return false;
        return true;
    }

    void process_pair(const Pair& pr) {
        int i = pr.i, j = pr.j;
        const MVec<K>& gi = basis_[static_cast<std::size_t>(i)];
        const MVec<K>& gj = basis_[static_cast<std::size_t>(j)];
        const MMon& li = gi.lead().mm;
        const MMon& lj = gj.lead().mm;
        Monomial L = lcm(li.m, lj.m);

        // chain criterion: sigma_ij is generated by sigma_ik and sigma_kj
        for (int k : by_comp_[static_cast<std::size_t>(li.comp)]) {
            if (k == i || k == j) continue;
            if (!basis_[static_cast<std::size_t>(k)].lead().mm.m.divides(L)) continue;
            if (done_.count(key(i, k)) && done_.count(key(k, j))) {
                done_.insert(key(i, j));
                return;
            }
        }

        // coprime criterion, valid for untracked single-component pairs
        if (!track_ && coprime(li.m, lj.m) && single_component(gi) && single_component(gj)) {
            done_.insert(key(i, j));
            return;
        }

        K inv_i = FieldOps<K>::inverse(gi.lead().c);
        K inv_j = FieldOps<K>::inverse(gj.lead().c);
        Monomial mi = L / li.m;
        Monomial mj = L / lj.m;

        MVec<K> s(ring_);
        s.sub_scaled(-inv_i, mi, gi, *order_);
        s.sub_scaled(inv_j, mj, gj, *order_);

        MVec<K> u(ring_);
        if (track_) {
            u.sub_scaled(-inv_i, mi, tails_[static_cast<std::size_t>(i)], *tracking_order_);
            u.sub_scaled(inv_j, mj, tails_[static_cast<std::size_t>(j)], *tracking_order_);
        }

        reduce_full(s, track_ ? &u : nullptr);

        done_.insert(key(i, j));
        if (s.is_zero()) {
            if (track_ && !u.is_zero()) syz_.push_back(std::move(u));
        } else {
            add_basis_element(std::move(s), std::move(u));
        }
    }

    int find_reducer(const MMon& mm) const {
        for (int k : by_comp_[static_cast<std::size_t>(mm.comp)])
            if (basis_[static_cast<std::size_t>(k)].lead().mm.m.divides(mm.m)) return k;
        return -1;
    }

    // Full reduction. With q non-null, q accumulates -sum c*m*tail_k, so the
    // callers can maintain their tracking invariants.
    void reduce_full(MVec<K>& v, MVec<K>* q) const {
        std::size_t pos = 0;
        while (pos < v.terms().size()) {
            const MTerm<K>& t = v.terms()[pos];
            int k = find_reducer(t.mm);
            if (k < 0) {
                ++pos;
                continue;
            }
            const MVec<K>& b = basis_[static_cast<std::size_t>(k)];
            K c = t.c * FieldOps<K>::inverse(b.lead().c);
            Monomial m = t.mm.m / b.lead().mm.m;
            v.sub_scaled(c, m, b, *order_);
            if (q) q->sub_scaled(c, m, tails_[static_cast<std::size_t>(k)], *tracking_order_);
        }
    }
};

// ---------------------------------------------------------------------------
// Public operations
// ---------------------------------------------------------------------------

template <class K>
MVec<K> poly_to_vec(const Polynomial<K>& f, const ModuleOrder& ord) {
    return MVec<K>::from_poly(f, 0, ord);
}

template <class K>
Polynomial<K> vec_to_poly(const MVec<K>& v) {
    return v.component(0);
}

// Interreduction of a Groebner basis: drops elements with redundant leading
// terms, tail-reduces the rest and scales leading coefficients to 1. The
// result is the unique reduced basis, sorted by ascending leading term.
template <class K>
std::vector<MVec<K>> interreduce(std::vector<MVec<K>> basis, const ModuleOrder& ord) {
    std::sort(basis.begin(), basis.end(), [&](const MVec<K>& a, const MVec<K>& b) {
        return ord.compare(a.lead().mm, b.lead().mm) < 0;
    });
    std::vector<MVec<K>> kept;
    for (auto& g : basis) {
        bool redundant = false;
        for (const auto& h : kept)
            if (h.lead().mm.comp == g.lead().mm.comp && h.lead().mm.m.divides(g.lead().mm.m)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(std::move(g));
    }
    std::vector<MVec<K>> out;
    out.reserve(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) {
        MVec<K> v = kept[i];
        // tail-reduce against the other elements
        std::size_t pos = 1;  // lead is irreducible by construction
        while (pos < v.terms().size()) {
            bool red = false;
            for (std::size_t k = 0; k < kept.size(); ++k) {
                if (k == i) continue;
                const auto& lt = kept[k].lead().mm;
                const MTerm<K>& t = v.terms()[pos];
                if (lt.comp == t.mm.comp && lt.m.divides(t.mm.m)) {
                    K c = t.c * FieldOps<K>::inverse(kept[k].lead().c);
                    v.sub_scaled(c, t.mm.m / lt.m, kept[k], ord);
                    red = true;
                    break;
                }
            }
            if (!red) ++pos;
        }
        out.push_back(v.scaled(FieldOps<K>::inverse(v.lead().c)));
    }
    return out;
}

// Reduced Groebner basis of a submodule.
template <class K>
std::vector<MVec<K>> reduced_groebner_module(RingPtr ring, const FreeModule& mod,
                                             ModuleOrderPtr ord, const std::vector<MVec<K>>& gens,
                                             ReductionBudget& budget) {
    GBEngine<K> engine(ring, mod, ord, false);
    for (const auto& g : gens) engine.add_input(g);
    engine.complete(budget);
    return interreduce(engine.basis(), *ord);
}

// Reduced Groebner basis of an ideal, leading coefficients 1, sorted by
// ascending leading term. The unique reduced basis for the ring's order.
template <class K>
std::vector<Polynomial<K>> reduced_groebner(const std::vector<Polynomial<K>>& gens,
                                            ReductionBudget& budget) {
    if (gens.empty()) throw std::invalid_argument("empty generator list");
    RingPtr ring = gens.front().ring();
    for (const auto& g : gens) require_same_ring(ring, g.ring());
    ModuleOrderPtr ord = ModuleOrder::pot(ring->order);
    FreeModule mod = FreeModule::with_rank(1);
    std::vector<MVec<K>> vgens;
    for (const auto& g : gens) vgens.push_back(poly_to_vec(g, *ord));
    std::vector<MVec<K>> gb = reduced_groebner_module(ring, mod, ord, vgens, budget);
    std::vector<Polynomial<K>> out;
    out.reserve(gb.size());
    for (const auto& v : gb) out.push_back(vec_to_poly(v));
    return out;
}

template <class K>
MVec<K> normal_form(const MVec<K>& f, const std::vector<MVec<K>>& basis, const ModuleOrder& ord) {
    MVec<K> v = f;
    std::size_t pos = 0;
    while (pos < v.terms().size()) {
        bool red = false;
        for (const auto& b : basis) {
            if (b.is_zero()) continue;
            const auto& lt = b.lead().mm;
            const MTerm<K>& t = v.terms()[pos];
            if (lt.comp == t.mm.comp && lt.m.divides(t.mm.m)) {
                K c = t.c * FieldOps<K>::inverse(b.lead().c);
                v.sub_scaled(c, t.mm.m / lt.m, b, ord);
                red = true;
                break;
            }
        }
        if (!red) ++pos;
    }
    return v;
}

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const std::vector<Polynomial<K>>& basis) {
    if (f.is_zero()) return f;
    ModuleOrderPtr ord = ModuleOrder::pot(f.ring()->order);
    std::vector<MVec<K>> vb;
    for (const auto& g : basis)
        if (!g.is_zero()) vb.push_back(poly_to_vec(g, *ord));
    return vec_to_poly(normal_form(poly_to_vec(f, *ord), vb, *ord));
}

// S-polynomial of two ring elements (test utility and criterion checks).
template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g) {
    const auto& lf = f.leading_term();
    const auto& lg = g.leading_term();
    Monomial L = lcm(lf.m, lg.m);
    Polynomial<K> a = f.scaled(FieldOps<K>::inverse(lf.c));
    Polynomial<K> b = g.scaled(FieldOps<K>::inverse(lg.c));
    Polynomial<K> r = Polynomial<K>::zero(f.ring());
    r.sub_scaled(FieldOps<K>::from_int(-1, f.ring()->field), L / lf.m, a);
    r.sub_scaled(FieldOps<K>::from_int(1, f.ring()->field), L / lg.m, b);
    return r;
}

template <class K>
struct SyzygyResult {
    FreeModule module;                  // R^s with twists = degrees of the inputs
    std::vector<MVec<K>> generators;    // each satisfies sum_i v_i * input_i = 0
};

// Generators of the syzygy module of `inputs` inside `mod`. The S-pair
// relations are extracted under the Schreyer order induced by the input
// leading terms, then rebased to position-over-term in R^s.
template <class K>
SyzygyResult<K> syzygies(RingPtr ring, const FreeModule& mod, ModuleOrderPtr ord,
                         const std::vector<MVec<K>>& inputs, ReductionBudget& budget) {
    GBEngine<K> engine(ring, mod, ord, true);
    for (const auto& v : inputs) engine.add_input(v);
    engine.complete(budget);

    SyzygyResult<K> out;
    out.module = engine.tracking_module();
    ModuleOrderPtr pot = ModuleOrder::pot(ring->order);
    for (const auto& s : engine.collected_syzygies()) out.generators.push_back(s.rebased(*pot));
    // canonical order: by degree, then by leading term
    std::stable_sort(out.generators.begin(), out.generators.end(),
                     [&](const MVec<K>& a, const MVec<K>& b) {
                         bool ha = a.is_homogeneous(out.module), hb = b.is_homogeneous(out.module);
                         if (ha && hb) {
                             int da = a.degree(out.module), db = b.degree(out.module);
                             if (da != db) return da < db;
                         }
                         return pot->compare(a.lead().mm, b.lead().mm) < 0;
                     });
    return out;
}

template <class K>
SyzygyResult<K> syzygies(const std::vector<Polynomial<K>>& inputs, ReductionBudget& budget) {
    if (inputs.empty()) throw std::invalid_argument("empty generator list");
    RingPtr ring = inputs.front().ring();
    ModuleOrderPtr ord = ModuleOrder::pot(ring->order);
    std::vector<MVec<K>> v;
    for (const auto& f : inputs) v.push_back(poly_to_vec(f, *ord));
    return syzygies(ring, FreeModule::with_rank(1), ord, v, budget);
}

// Extracts a minimal generating subset of a list of homogeneous module
// elements (graded Nakayama): an element is kept iff it is not in the
// submodule generated by lower-degree elements and previously kept ones.
// Membership is decided against a Groebner basis completed through the
// candidate's degree, which is valid in the graded setting.
template <class K>
std::vector<MVec<K>> minimal_generators(RingPtr ring, const FreeModule& mod, ModuleOrderPtr ord,
                                        const std::vector<MVec<K>>& candidates,
                                        ReductionBudget& budget) {
    std::vector<int> idx;
    for (int i = 0; i < static_cast<int>(candidates.size()); ++i)
        if (!candidates[static_cast<std::size_t>(i)].is_zero()) idx.push_back(i);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        return candidates[static_cast<std::size_t>(a)].degree(mod) <
               candidates[static_cast<std::size_t>(b)].degree(mod);
    });

    GBEngine<K> engine(ring, mod, ord, false);
    std::vector<MVec<K>> kept;
    for (int i : idx) {
        const MVec<K>& v = candidates[static_cast<std::size_t>(i)];
        int d = v.degree(mod);
        engine.complete(budget, d);
        MVec<K> r = engine.normal_form(v);
        if (r.is_zero()) continue;
        kept.push_back(v);
        engine.add_input(std::move(r));
        engine.complete(budget, d);
    }
    return kept;
}

// True iff (I : ell) = I, i.e. ell is a nonzerodivisor on Q/I.
// `igb` must be a Groebner basis of I.
template <class K>
bool colon_equals(const std::vector<Polynomial<K>>& igb, const Polynomial<K>& ell,
                  ReductionBudget& budget) {
    if (ell.is_zero()) throw std::invalid_argument("colon_equals: zero element");
    std::vector<Polynomial<K>> inputs;
    inputs.push_back(ell);
    for (const auto& g : igb) inputs.push_back(g);
    SyzygyResult<K> syz = syzygies(inputs, budget);
    for (const auto& s : syz.generators) {
        Polynomial<K> a = s.component(0);
        if (a.is_zero()) continue;
        if (!normal_form(a, igb).is_zero()) return false;
    }
    return true;
}

}  // namespace toralg

#endif
