// Graded complexes and minimal free resolutions: over the polynomial ring Q
// for the defining ideal, and stepwise over R = Q/I for the residue field.
// Computations over R are realized over Q by adjoining I times the standard
// basis and projecting syzygies back.
#ifndef TORALG_RESOLUTION_HPP
#define TORALG_RESOLUTION_HPP

#include "toralg/groebner.hpp"
#include "toralg/series.hpp"

namespace toralg {

// R = Q/I, with I presented by its reduced Groebner basis (empty when I = 0).
template <class K>
struct QuotientRing {
    RingPtr ring;
    std::vector<Polynomial<K>> igb;

    bool is_polynomial_ring() const { return igb.empty(); }

    Polynomial<K> nf(const Polynomial<K>& f) const {
        return igb.empty() ? f : normal_form(f, igb);
    }

    MVec<K> nf(const MVec<K>& v, const ModuleOrder& ord) const {
        if (igb.empty()) return v;
        MVec<K> out(v.ring());
        for (int c = 0; c <= v.max_component(); ++c) {
            Polynomial<K> p = nf(v.component(c));
            if (!p.is_zero()) out.add(MVec<K>::from_poly(p, c, ord), ord);
        }
        return out;
    }
};

template <class K>
struct GradedMatrix {
    FreeModule source;  // F_{i+1}
    FreeModule target;  // F_i
    std::vector<MVec<K>> cols;  // images of the source basis, in target coordinates

    Polynomial<K> entry(int i, int j) const { return cols[static_cast<std::size_t>(j)].component(i); }

    // the rows as vectors in R^{source.rank()}: the columns of the transpose
    std::vector<MVec<K>> rows(const RingPtr& ring, const ModuleOrder& ord) const {
        std::vector<MVec<K>> out(static_cast<std::size_t>(target.rank()), MVec<K>(ring));
        for (int r = 0; r < target.rank(); ++r) {
            MVec<K> row(ring);
            for (int j = 0; j < source.rank(); ++j) {
                Polynomial<K> p = entry(r, j);
                if (!p.is_zero()) row.add(MVec<K>::from_poly(p, j, ord), ord);
            }
            out[static_cast<std::size_t>(r)] = std::move(row);
        }
        return out;
    }

    // every nonzero entry (i, j) homogeneous of degree source.twists[j] - target.twists[i]
    bool entries_homogeneous() const {
        for (int j = 0; j < source.rank(); ++j)
            for (const auto& t : cols[static_cast<std::size_t>(j)].terms()) {
                int want = source.twists[static_cast<std::size_t>(j)] -
                           target.twists[static_cast<std::size_t>(t.mm.comp)];
                if (t.mm.m.deg != want) return false;
            }
        return true;
    }

    bool has_degree_zero_entry() const {
        for (int j = 0; j < source.rank(); ++j)
            for (const auto& t : cols[static_cast<std::size_t>(j)].terms())
                if (t.mm.m.deg == 0) return true;
        return false;
    }
};

// maps[i] is d_{i+1}: F_{i+1} -> F_i; modules are implied by the maps.
template <class K>
struct GradedComplex {
    RingPtr ring;
    FreeModule f0;
    std::vector<GradedMatrix<K>> maps;

    int length() const { return static_cast<int>(maps.size()); }

    const FreeModule& module(int i) const {
        if (i == 0) return f0;
        return maps[static_cast<std::size_t>(i - 1)].source;
    }

    std::vector<int> ranks() const {
        std::vector<int> out{f0.rank()};
        for (const auto& m : maps) out.push_back(m.source.rank());
        return out;
    }
};

// matrix times vector: v in source coordinates, result in target coordinates
template <class K>
MVec<K> apply_matrix(const GradedMatrix<K>& m, const MVec<K>& v, const ModuleOrder& ord) {
    MVec<K> out(v.ring());
    for (int j = 0; j <= v.max_component(); ++j) {
        Polynomial<K> c = v.component(j);
        if (c.is_zero()) continue;
        out.add(mul_poly_vec(c, m.cols[static_cast<std::size_t>(j)], ord), ord);
    }
    return out;
}

// consecutive compositions are zero over R (exact matrix identity mod I)
template <class K>
bool compositions_vanish(const GradedComplex<K>& C, const QuotientRing<K>& R) {
    ModuleOrderPtr ord = ModuleOrder::pot(C.ring->order);
    for (std::size_t i = 0; i + 1 < C.maps.size(); ++i) {
        for (const auto& col : C.maps[i + 1].cols) {
            MVec<K> image = apply_matrix(C.maps[i], col, *ord);
            if (!R.nf(image, *ord).is_zero()) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Syzygies and minimal generators over R = Q/I
// ---------------------------------------------------------------------------

// Generators of the syzygy module over R of `inputs` inside `mod`:
// syzygies over Q of the inputs together with I times the standard basis,
// projected back to the input coordinates and normal-formed mod I.
template <class K>
SyzygyResult<K> syzygies_over_quotient(const QuotientRing<K>& R, const FreeModule& mod,
                                       const std::vector<MVec<K>>& inputs,
                                       ReductionBudget& budget) {
    RingPtr ring = R.ring;
    ModuleOrderPtr ord = ModuleOrder::pot(ring->order);
    int s = static_cast<int>(inputs.size());
    std::vector<MVec<K>> combined = inputs;
    for (const auto& g : R.igb)
        for (int t = 0; t < mod.rank(); ++t)
            combined.push_back(MVec<K>::from_poly(g, t, *ord));

    SyzygyResult<K> raw = syzygies(ring, mod, ord, combined, budget);

    SyzygyResult<K> out;
    out.module.twists.assign(raw.module.twists.begin(), raw.module.twists.begin() + s);
    for (const auto& z : raw.generators) {
        MVec<K> proj(ring);
        for (int c = 0; c < s && c <= z.max_component(); ++c) {
            Polynomial<K> p = R.nf(z.component(c));
            if (!p.is_zero()) proj.add(MVec<K>::from_poly(p, c, *ord), *ord);
        }
        if (!proj.is_zero()) out.generators.push_back(std::move(proj));
    }
    return out;
}

// Minimal generating subset over R: membership over R is membership over Q of
// the span extended by I times the standard basis.
template <class K>
std::vector<MVec<K>> minimal_generators_over_quotient(const QuotientRing<K>& R,
                                                      const FreeModule& mod,
                                                      const std::vector<MVec<K>>& candidates,
                                                      ReductionBudget& budget) {
    RingPtr ring = R.ring;
    ModuleOrderPtr ord = ModuleOrder::pot(ring->order);

    std::vector<int> idx;
    for (int i = 0; i < static_cast<int>(candidates.size()); ++i)
        if (!candidates[static_cast<std::size_t>(i)].is_zero()) idx.push_back(i);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        return candidates[static_cast<std::size_t>(a)].degree(mod) <
               candidates[static_cast<std::size_t>(b)].degree(mod);
    });

    GBEngine<K> engine(ring, mod, ord, false);
    for (const auto& g : R.igb)
        for (int t = 0; t < mod.rank(); ++t) engine.add_input(MVec<K>::from_poly(g, t, *ord));

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

// ---------------------------------------------------------------------------
// Resolutions
// ---------------------------------------------------------------------------

// One syzygy step: from the columns of `last` to the next minimal differential.
// Returns a matrix with no source basis vector when the syzygy module is zero.
template <class K>
GradedMatrix<K> next_differential(const QuotientRing<K>& R, const GradedMatrix<K>& last,
                                  ReductionBudget& budget) {
    SyzygyResult<K> syz = syzygies_over_quotient(R, last.target, last.cols, budget);
    std::vector<MVec<K>> mins =
        minimal_generators_over_quotient(R, syz.module, syz.generators, budget);
    GradedMatrix<K> d;
    d.target = last.source;
    for (const auto& v : mins) d.source.twists.push_back(v.degree(syz.module));
    d.cols = std::move(mins);
    return d;
}

// Minimal graded free resolution of Q/I over Q. `mingens` must be a minimal
// homogeneous generating set with all degrees >= 1. Terminates in at most
// e = nvars steps because Q is regular.
template <class K>
GradedComplex<K> minimal_free_resolution(RingPtr ring, const std::vector<Polynomial<K>>& mingens,
                                         ReductionBudget& budget) {
    GradedComplex<K> C;
    C.ring = ring;
    C.f0 = FreeModule::with_rank(1);
    if (mingens.empty()) return C;

    QuotientRing<K> Q{ring, {}};
    ModuleOrderPtr ord = ModuleOrder::pot(ring->order);
    GradedMatrix<K> d1;
    d1.target = C.f0;
    for (const auto& g : mingens) {
        d1.source.twists.push_back(g.total_degree());
        d1.cols.push_back(poly_to_vec(g, *ord));
    }
    C.maps.push_back(std::move(d1));

    for (;;) {
        GradedMatrix<K> d = next_differential(Q, C.maps.back(), budget);
        if (d.source.rank() == 0) break;
        C.maps.push_back(std::move(d));
        if (C.length() > ring->nvars())
            throw consistency_error("resolution over the polynomial ring exceeded its length bound");
    }
    return C;
}

// First `steps` differentials of the minimal free resolution of k over R.
template <class K>
GradedComplex<K> residue_field_resolution(const QuotientRing<K>& R, int steps,
                                          ReductionBudget& budget) {
    GradedComplex<K> C;
    C.ring = R.ring;
    C.f0 = FreeModule::with_rank(1);
    int e = R.ring->nvars();
    if (steps <= 0 || e == 0) return C;

    ModuleOrderPtr ord = ModuleOrder::pot(R.ring->order);
    GradedMatrix<K> d1;
    d1.target = C.f0;
    for (int i = 0; i < e; ++i) {
        d1.source.twists.push_back(1);
        d1.cols.push_back(poly_to_vec(Polynomial<K>::variable(R.ring, i), *ord));
    }
    C.maps.push_back(std::move(d1));

    while (C.length() < steps) {
        GradedMatrix<K> d = next_differential(R, C.maps.back(), budget);
        if (d.source.rank() == 0) break;  // only for regular R
        C.maps.push_back(std::move(d));
    }
    return C;
}

// ---------------------------------------------------------------------------
// Minimalization by unit-pivot cancellation
// ---------------------------------------------------------------------------

namespace detail {

template <class K>
struct DenseMap {
    FreeModule source, target;
    std::vector<std::vector<Polynomial<K>>> a;  // [row][col]
};

template <class K>
DenseMap<K> to_dense(const GradedMatrix<K>& m, const RingPtr& ring) {
    DenseMap<K> d;
    d.source = m.source;
    d.target = m.target;
    d.a.assign(static_cast<std::size_t>(m.target.rank()),
               std::vector<Polynomial<K>>(static_cast<std::size_t>(m.source.rank()),
                                          Polynomial<K>::zero(ring)));
    for (int i = 0; i < m.target.rank(); ++i)
        for (int j = 0; j < m.source.rank(); ++j) d.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.entry(i, j);
    return d;
}

template <class K>
GradedMatrix<K> from_dense(const DenseMap<K>& d, const RingPtr& ring, const ModuleOrder& ord) {
    GradedMatrix<K> m;
    m.source = d.source;
    m.target = d.target;
    m.cols.assign(static_cast<std::size_t>(d.source.rank()), MVec<K>(ring));
    for (int j = 0; j < d.source.rank(); ++j) {
        MVec<K> col(ring);
        for (int i = 0; i < d.target.rank(); ++i) {
            const Polynomial<K>& p = d.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (!p.is_zero()) col.add(MVec<K>::from_poly(p, i, ord), ord);
        }
        m.cols[static_cast<std::size_t>(j)] = std::move(col);
    }
    return m;
}

template <class K>
void drop_row(DenseMap<K>& d, int r) {
    d.a.erase(d.a.begin() + r);
    d.target.twists.erase(d.target.twists.begin() + r);
}

template <class K>
void drop_col(DenseMap<K>& d, int c) {
    for (auto& row : d.a) row.erase(row.begin() + c);
    d.source.twists.erase(d.source.twists.begin() + c);
}

}  // namespace detail

// Cancels unit pivots (nonzero constant entries) until none remain. The
// result is a homotopy-equivalent complex with minimal differentials.
template <class K>
GradedComplex<K> minimalize(const GradedComplex<K>& C, const QuotientRing<K>& R) {
    using detail::DenseMap;
    RingPtr ring = C.ring;
    ModuleOrderPtr ord = ModuleOrder::pot(ring->order);

    std::vector<DenseMap<K>> maps;
    for (const auto& m : C.maps) maps.push_back(detail::to_dense(m, ring));

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t t = 0; t < maps.size() && !changed; ++t) {
            DenseMap<K>& A = maps[t];
            for (int r = 0; r < A.target.rank() && !changed; ++r) {
                for (int c = 0; c < A.source.rank() && !changed; ++c) {
                    const Polynomial<K>& piv = A.a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                    if (piv.is_zero() || !piv.is_constant()) continue;
                    K u = piv.leading_term().c;
                    K uinv = FieldOps<K>::inverse(u);
                    // A'[z][y] = A[z][y] - A[z][c] * A[r][y] / u
                    for (int z = 0; z < A.target.rank(); ++z) {
                        if (z == r) continue;
                        const Polynomial<K>& azc = A.a[static_cast<std::size_t>(z)][static_cast<std::size_t>(c)];
                        if (azc.is_zero()) continue;
                        Polynomial<K> f = azc.scaled(uinv);
                        for (int y = 0; y < A.source.rank(); ++y) {
                            if (y == c) continue;
                            const Polynomial<K>& ary = A.a[static_cast<std::size_t>(r)][static_cast<std::size_t>(y)];
                            if (ary.is_zero()) continue;
                            Polynomial<K>& dst = A.a[static_cast<std::size_t>(z)][static_cast<std::size_t>(y)];
                            dst = R.nf(dst - f * ary);
                        }
                    }
                    detail::drop_row(A, r);
                    detail::drop_col(A, c);
                    if (t >= 1) detail::drop_col(maps[t - 1], r);
                    if (t + 1 < maps.size()) detail::drop_row(maps[t + 1], c);
                    changed = true;
                }
            }
        }
    }

    GradedComplex<K> out;
    out.ring = ring;
    out.f0 = maps.empty() ? C.f0 : maps.front().target;
    for (const auto& d : maps) out.maps.push_back(detail::from_dense(d, ring, *ord));
    return out;
}

// ---------------------------------------------------------------------------
// Hilbert data from a finite graded resolution over Q
// ---------------------------------------------------------------------------

struct HilbertData {
    IntPoly numerator;  // K(t) = sum_i (-1)^i sum_j t^{twist_ij}
    int ambient_vars = 0;
    int krull_dim = 0;
    int one_minus_t_multiplicity = 0;
};

template <class K>
HilbertData hilbert_data(const GradedComplex<K>& C) {
    HilbertData h;
    h.ambient_vars = C.ring->nvars();
    IntPoly num;
    for (int i = 0; i <= C.length(); ++i) {
        const FreeModule& f = C.module(i);
        for (int tw : f.twists) {
            if (tw >= static_cast<int>(num.size())) num.resize(static_cast<std::size_t>(tw) + 1, 0);
            num[static_cast<std::size_t>(tw)] += (i % 2 == 0) ? 1 : -1;
        }
    }
    ip_trim(num);
    h.numerator = num;
    while (!ip_is_zero(num) && ip_eval1(num) == 0) {
        num = ip_div_one_minus_t(num);
        ++h.one_minus_t_multiplicity;
    }
    h.krull_dim = h.ambient_vars - h.one_minus_t_multiplicity;
    return h;
}

}  // namespace toralg

#endif
