#pragma once

#include "marking.hpp"

namespace complicial {

inline std::shared_ptr<const Complex> delta_complex(int n) {
    static std::map<int, std::shared_ptr<const Complex>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto p = std::make_shared<Complex>(standard_simplex(n));
    cache[n] = p;
    return p;
}

inline CellId delta_cell(const Complex& D, const std::vector<int>& verts) {
    return simplex_cell_by_verts(D, verts);
}

// Cells of Delta[n] whose vertex set contains all of `req`, dim >= 1.
inline Marking cells_containing(const Complex& D, std::vector<int> req) {
    Marking m;
    for (CellId c = 0; c < D.size(); ++c) {
        if (D.dim(c) < 1) continue;
        auto vs = D.cell_vertices(c);
        bool ok = true;
        for (int r : req)
            if (std::find(vs.begin(), vs.end(), r) == vs.end()) ok = false;
        if (ok) m.insert(c);
    }
    return m;
}

inline std::vector<int> thin_core(int n, int k) {
    std::vector<int> req;
    for (int v : {k - 1, k, k + 1})
        if (0 <= v && v <= n) req.push_back(v);
    return req;
}

inline StratSet delta(int n) { return {delta_complex(n), {}}; }

inline StratSet delta_t(int n) {
    auto cx = delta_complex(n);
    return {cx, {static_cast<CellId>(cx->size()) - 1}};
}

// All simplices containing {k-1,k,k+1} n [n] are thin.
inline StratSet delta_k(int n, int k) {
    auto cx = delta_complex(n);
    return {cx, cells_containing(*cx, thin_core(n, k))};
}

inline CellId codim1_face(const Complex& D, int n, int skip) {
    std::vector<int> verts;
    for (int v = 0; v <= n; ++v)
        if (v != skip) verts.push_back(v);
    return delta_cell(D, verts);
}

inline StratSet delta_k_prime(int n, int k) {
    StratSet X = delta_k(n, k);
    if (k - 1 >= 0) X.t.insert(codim1_face(*X.cx, n, k - 1));
    if (k + 1 <= n) X.t.insert(codim1_face(*X.cx, n, k + 1));
    return X;
}

inline StratSet delta_k_dprime(int n, int k) {
    StratSet X = delta_k_prime(n, k);
    X.t.insert(codim1_face(*X.cx, n, k));
    return X;
}

// Delta[3]^eq: everything above dimension 2, plus [0,2] and [1,3].
inline StratSet delta3_eq() {
    auto cx = delta_complex(3);
    Marking t;
    for (CellId c = 0; c < cx->size(); ++c)
        if (cx->dim(c) >= 3) t.insert(c);
    t.insert(delta_cell(*cx, {0, 2}));
    t.insert(delta_cell(*cx, {1, 3}));
    return {cx, t};
}

inline StratSet sharp(int n) {
    auto cx = delta_complex(n);
    Marking t;
    for (CellId c = 0; c < cx->size(); ++c)
        if (cx->dim(c) >= 1) t.insert(c);
    return {cx, t};
}

// The horn as a stratified set, with its regular inclusion into
// Delta^k[n].
struct HornShape {
    StratSet horn;
    StratSet filled; // Delta^k[n]
    StratMap incl;
};

inline HornShape horn(int n, int k) {
    StratSet full = delta_k(n, k);
    std::set<CellId> gens;
    for (int j = 0; j <= n; ++j)
        if (j != k) gens.insert(codim1_face(*full.cx, n, j));
    Subcomplex S = subcomplex(*full.cx, gens);
    StratSet H{S.complex, restrict_marking(full.t, S.to_sub)};
    return {H, full, StratMap{H, full, S.incl}};
}

struct BoundaryShape {
    StratSet boundary;
    StratSet filled;
    StratMap incl;
};

inline BoundaryShape boundary_incl(int n) {
    StratSet full = delta(n);
    Subcomplex S = [&] {
        if (n == 0) return subcomplex(*full.cx, {});
        std::set<CellId> gens;
        for (int j = 0; j <= n; ++j)
            gens.insert(codim1_face(*full.cx, n, j));
        return subcomplex(*full.cx, gens);
    }();
    StratSet B{S.complex, {}};
    return {B, full, StratMap{B, full, S.incl}};
}

inline StratSet spine(int n) {
    auto cx = delta_complex(n);
    std::set<CellId> gens;
    for (int i = 0; i < n; ++i) gens.insert(delta_cell(*cx, {i, i + 1}));
    Subcomplex S = subcomplex(*cx, gens);
    return {S.complex, {}};
}

// ---- bistratified shapes ----

inline BistratSet delta_c(int n) {
    auto cx = delta_complex(n);
    return {cx, {}, {static_cast<CellId>(cx->size()) - 1}};
}

inline BistratSet delta_t_bi(int n) {
    auto cx = delta_complex(n);
    Marking top{static_cast<CellId>(cx->size()) - 1};
    return {cx, top, top};
}

// All simplices containing {0,1} (resp. {n-1,n}) are cartesian.
inline BistratSet cart_horn_shape(int n, bool initial) {
    auto cx = delta_complex(n);
    Marking c = cells_containing(
        *cx, initial ? std::vector<int>{0, 1} : std::vector<int>{n - 1, n});
    return {cx, {}, std::move(c)};
}

// Delta^k[n]^* and Delta^k[n]^{*,*}.
inline BistratSet cart_thin(int n, int k) {
    StratSet base = delta_k(n, k);
    Marking c = base.t;
    if (k - 1 >= 0) c.insert(codim1_face(*base.cx, n, k - 1));
    if (k + 1 <= n) c.insert(codim1_face(*base.cx, n, k + 1));
    return {base.cx, base.t, std::move(c)};
}

inline BistratSet cart_thin2(int n, int k) {
    BistratSet X = cart_thin(n, k);
    X.c.insert(codim1_face(*X.cx, n, k));
    return X;
}

// ---- the oslash shapes of appendix B ----

// Pattern test for the marking of Delta^k[n] (/) K on a nondegenerate
// pair (v, y): some p with y degenerate at p and the v-vertices around p
// matching the appendix tables.
inline bool oslash_marked(const std::vector<int>& v, const Operator& y_eta,
                          int k, int n, bool anti) {
    int m = static_cast<int>(v.size()) - 1;
    for (int p = 0; p < m; ++p) {
        if (!y_eta.degenerate_at(p)) continue;
        if (!anti) {
            if (k == 0) {
                if (v[static_cast<size_t>(p)] == 0 &&
                    v[static_cast<size_t>(p) + 1] == 1)
                    return true;
            } else if (p >= 1 && p + 1 <= m) {
                int a = v[static_cast<size_t>(p) - 1],
                    b = v[static_cast<size_t>(p)],
                    c = v[static_cast<size_t>(p) + 1];
                if ((a == k - 1 && b == k && c == k + 1) ||
                    (a == k && b == k && c == k + 1))
                    return true;
            }
        } else {
            // anti variant indexes the degeneracy at p-1
            int q = p + 1; // v positions (q-1, q, q+1) with y deg at q-1
            if (k == n) {
                if (v[static_cast<size_t>(q) - 1] == n - 1 &&
                    v[static_cast<size_t>(q)] == n)
                    return true;
            } else if (q + 1 <= m) {
                int a = v[static_cast<size_t>(q) - 1],
                    b = v[static_cast<size_t>(q)],
                    c = v[static_cast<size_t>(q) + 1];
                if ((a == k - 1 && b == k && c == k + 1) ||
                    (a == k - 1 && b == k && c == k))
                    return true;
            }
        }
    }
    return false;
}

struct OslashShape {
    StratSet whole;   // Delta^k[n] (/) K on Delta[n] x K
    StratSet horn;    // Lambda^k[n] (/) K
    StratMap incl;
    std::shared_ptr<ProductResult> prod;
};

// anti = false: (/) (marking around s^p with pattern at p-1,p,p+1);
// anti = true: the rotated variant.
inline OslashShape oslash(int n, int k, const StratSet& K, bool anti = false) {
    const Complex& D = *delta_complex(n);
    auto P = std::make_shared<ProductResult>(product(D, *K.cx));
    Marking t;
    for (CellId c = 0; c < P->complex->size(); ++c) {
        if (P->complex->dim(c) < 1) continue;
        const auto& [v, y] = P->pair_of[static_cast<size_t>(c)];
        if (oslash_marked(D.vertices(v), y.eta, k, n, anti)) t.insert(c);
    }
    StratSet whole{P->complex, std::move(t)};
    // horn part: cells whose Delta[n] component misses some j != k
    std::set<CellId> gens;
    for (CellId c = 0; c < P->complex->size(); ++c) {
        const auto& [v, y] = P->pair_of[static_cast<size_t>(c)];
        auto vs = D.vertices(v);
        std::set<int> used(vs.begin(), vs.end());
        bool in_horn = false;
        for (int j = 0; j <= n; ++j)
            if (j != k && !used.count(j)) in_horn = true;
        if (in_horn) gens.insert(c);
    }
    Subcomplex S = subcomplex(*P->complex, gens);
    StratSet H{S.complex, restrict_marking(whole.t, S.to_sub)};
    return {whole, H, StratMap{H, whole, S.incl}, P};
}

// ---- appendix B trichotomy ----

enum class TriKind { InDomain, Type1, Type2 };

struct TriResult {
    TriKind kind = TriKind::InDomain;
    std::vector<int> witness_v; // Delta[n] part of the witness simplex
    SimplexExpr witness_x;      // K part of the witness simplex
    int p = -1;
};

// v with the tail of its k-run raised to k+1 after position p.
inline std::vector<int> raise_run(const std::vector<int>& v, int k, int p) {
    std::vector<int> out = v;
    int m = static_cast<int>(v.size()) - 1;
    int b = -1;
    for (int i = 0; i <= m; ++i)
        if (v[static_cast<size_t>(i)] == k) b = i;
    for (int i = p + 1; i <= b; ++i) out[static_cast<size_t>(i)] = k + 1;
    return out;
}

// The (m+1)-simplex bar(w)^p = (bar(v)^p, s^p x).
inline std::vector<int> bar_run(const std::vector<int>& v, int k, int p) {
    int m = static_cast<int>(v.size()) - 1;
    int b = -1;
    for (int i = 0; i <= m; ++i)
        if (v[static_cast<size_t>(i)] == k) b = i;
    std::vector<int> out;
    for (int q = 0; q <= m + 1; ++q) {
        if (q <= p) out.push_back(v[static_cast<size_t>(q)]);
        else if (q <= b + 1) out.push_back(k + 1);
        else out.push_back(v[static_cast<size_t>(q) - 1]);
    }
    return out;
}

// Classify a nondegenerate simplex of Delta[n] x L relative to the
// cofibration Lambda^k[n] x L u Delta[n] x K -> Delta[n] x L.  `in_K`
// answers membership of an L-simplex's carrier in K.
inline TriResult trichotomy_classify(
    const Complex& D, const Complex& L, const ProductResult& P, CellId w,
    int n, int k, const std::function<bool(CellId)>& in_K) {
    const auto& [vx, y] = P.pair_of[static_cast<size_t>(w)];
    std::vector<int> v = D.vertices(vx);
    std::set<int> used(v.begin(), v.end());
    bool horn_part = false;
    for (int j = 0; j <= n; ++j)
        if (j != k && !used.count(j)) horn_part = true;
    if (horn_part || in_K(y.cell)) return {TriKind::InDomain, {}, {}, -1};

    auto lowered = [&] {
        std::vector<int> out = v;
        for (int& a : out)
            if (a == k + 1) a = k;
        return out;
    };
    if (!used.count(k)) {
        int q = -1;
        for (int i = 0; i < static_cast<int>(v.size()); ++i)
            if (v[static_cast<size_t>(i)] == k + 1) { q = i; break; }
        return {TriKind::Type1, lowered(), y, q - 1};
    }
    int p = -1;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (v[static_cast<size_t>(i)] == k) p = i;
    bool x_deg_at_p =
        p < y.dim() && y.eta.degenerate_at(p);
    if (!x_deg_at_p) return {TriKind::Type1, lowered(), y, p};
    // Type2: witness (d^p (v lowered), d^p x)
    std::vector<int> u = lowered();
    u.erase(u.begin() + p);
    SimplexExpr xf = L.apply(y, Operator::face(y.dim(), p));
    return {TriKind::Type2, std::move(u), xf, p};
}

// Rebuild the classified simplex from its witness; used as the oracle.
inline CellId trichotomy_reconstruct(const Complex& D, const Complex& L,
                                     const ProductResult& P,
                                     const TriResult& r, int k) {
    assert(r.kind != TriKind::InDomain);
    if (r.kind == TriKind::Type1) {
        std::vector<int> v = raise_run(r.witness_v, k, r.p);
        int m = static_cast<int>(v.size()) - 1;
        SimplexExpr vx = D.apply(D.nondeg(static_cast<CellId>(D.size()) - 1),
                                 Operator(v, D.dim_bound()));
        SimplexExpr e = P.expr(D, L, vx, r.witness_x);
        assert(e.nondegenerate());
        (void)m;
        return e.cell;
    }
    std::vector<int> v = bar_run(r.witness_v, k, r.p);
    int m = static_cast<int>(r.witness_v.size()) - 1;
    SimplexExpr vx = D.apply(D.nondeg(static_cast<CellId>(D.size()) - 1),
                             Operator(v, D.dim_bound()));
    SimplexExpr xs = L.apply(r.witness_x, Operator::degeneracy(m, r.p));
    SimplexExpr e = P.expr(D, L, vx, xs);
    assert(e.nondegenerate());
    return e.cell;
}

} // namespace complicial
