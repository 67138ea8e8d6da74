#pragma once

#include "constructions.hpp"

namespace complicial {

// Fixpoint marking closure: complicial thinness and saturation rules for
// stratified sets, plus the cartesian thinness rule for bistratified
// ones.  Closure is computed up to an explicit search dimension; the
// result is a claim "at bound search_dim".
struct ClosureConfig {
    int search_dim = 3;
    bool thinness = true;
    bool saturation = true;
    bool cart_thinness = true; // bistratified only
};

struct ClosureViolation {
    std::string rule;
    SimplexExpr witness; // the matched top simplex
    CellId added;        // cell the rule would mark
    bool cartesian = false;
};

namespace detail {

// vertex subsets of [n] that must be thin for a map from (Delta^k[n])'
// and the k-face it forces
struct ThinnessPattern {
    int n, k;
    std::vector<std::vector<int>> need; // thin faces (vertex subsets)
    std::vector<int> conclusion;        // the k-face
};

inline const std::vector<ThinnessPattern>& thinness_patterns(int search_dim) {
    static std::map<int, std::vector<ThinnessPattern>> cache;
    auto it = cache.find(search_dim);
    if (it != cache.end()) return it->second;
    std::vector<ThinnessPattern> out;
    for (int n = 2; n <= search_dim; ++n)
        for (int k = 0; k <= n; ++k) {
            ThinnessPattern P{n, k, {}, {}};
            StratSet S = delta_k_prime(n, k);
            for (CellId c : S.t) P.need.push_back(S.cx->cell_vertices(c));
            for (int v = 0; v <= n; ++v)
                if (v != k) P.conclusion.push_back(v);
            out.push_back(std::move(P));
        }
    cache[search_dim] = std::move(out);
    return cache.at(search_dim);
}

// the saturation extension Delta[p] * Delta[3]^eq * Delta[q]:
// a face V of Delta[N] is thin in the eq (resp. sharp) shape exactly when
// its middle block lands in the eq marking (resp. has >= 2 vertices)
struct SaturationPattern {
    int p, q, N;
    std::vector<std::vector<int>> need;  // eq-thin subsets
    std::vector<std::vector<int>> extra; // sharp-but-not-eq subsets
};

inline std::vector<SaturationPattern> saturation_patterns(int search_dim) {
    std::vector<SaturationPattern> out;
    for (int p = -1; p + 5 <= search_dim + 1; ++p)
        for (int q = -1; p + q + 5 <= search_dim; ++q) {
            int N = p + q + 5;
            SaturationPattern S{p, q, N, {}, {}};
            // middle block vertices are p+1 .. p+4
            auto shift = [&](std::vector<int> vm) {
                for (int& v : vm) v += p + 1;
                return vm;
            };
            std::vector<std::vector<int>> eq = {{0, 2}, {1, 3}, {0, 1, 2, 3}};
            // enumerate all VL subsets of the left block, VR of the right
            std::vector<std::vector<int>> lefts{{}}, rights{{}};
            for (int v = 0; v <= p; ++v) {
                size_t sz = lefts.size();
                for (size_t i = 0; i < sz; ++i) {
                    auto w = lefts[i];
                    w.push_back(v);
                    lefts.push_back(std::move(w));
                }
            }
            for (int v = p + 5; v <= N; ++v) {
                size_t sz = rights.size();
                for (size_t i = 0; i < sz; ++i) {
                    auto w = rights[i];
                    w.push_back(v);
                    rights.push_back(std::move(w));
                }
            }
            std::vector<std::vector<int>> mids{{}};
            for (int v = 0; v <= 3; ++v) {
                size_t sz = mids.size();
                for (size_t i = 0; i < sz; ++i) {
                    auto w = mids[i];
                    w.push_back(v);
                    mids.push_back(std::move(w));
                }
            }
            for (const auto& vm : mids) {
                bool is_eq = std::find(eq.begin(), eq.end(), vm) != eq.end();
                bool is_sharp = vm.size() >= 2;
                if (!is_eq && !is_sharp) continue;
                for (const auto& vl : lefts)
                    for (const auto& vr : rights) {
                        std::vector<int> V = vl;
                        for (int v : shift(vm)) V.push_back(v);
                        for (int v : vr) V.push_back(v);
                        if (V.size() < 2) continue;
                        if (is_eq) S.need.push_back(V);
                        else S.extra.push_back(V);
                    }
            }
            out.push_back(std::move(S));
        }
    return out;
}

// cartesian thinness: Delta^k[n]^* -> Delta^k[n]^{*,*}
struct CartPattern {
    int n, k;
    std::vector<std::vector<int>> need_thin;
    std::vector<std::vector<int>> need_cart; // the (k-1)- and (k+1)-faces
    std::vector<int> conclusion;             // the k-face
};

inline std::vector<CartPattern> cart_patterns(int search_dim) {
    std::vector<CartPattern> out;
    for (int n = 2; n <= search_dim; ++n)
        for (int k = 0; k <= n; ++k) {
            CartPattern P{n, k, {}, {}, {}};
            StratSet S = delta_k(n, k);
            for (CellId c : S.t) P.need_thin.push_back(S.cx->cell_vertices(c));
            for (int skip : {k - 1, k + 1}) {
                if (skip < 0 || skip > n) continue;
                std::vector<int> f;
                for (int v = 0; v <= n; ++v)
                    if (v != skip) f.push_back(v);
                P.need_cart.push_back(std::move(f));
            }
            for (int v = 0; v <= n; ++v)
                if (v != k) P.conclusion.push_back(v);
            out.push_back(std::move(P));
        }
    return out;
}

} // namespace detail

struct ClosureReport {
    int rounds = 0;
    int added = 0;
    // closure above search_dim is not computed; results are claims
    // "at bound search_dim"
    bool complete = false;
};

// Smallest marking containing X.t closed under the thinness and
// saturation rules up to cfg.search_dim.
inline StratSet saturate_marked(const StratSet& X, const ClosureConfig& cfg,
                                ClosureReport* rep = nullptr) {
    StratSet R = X;
    const Complex& C = *R.cx;
    int rounds = 0, added = 0;
    bool changed = true;
    auto face_of = [&](const SimplexExpr& w, const std::vector<int>& V) {
        return C.apply(w, Operator(V, w.dim()));
    };
    std::map<int, std::vector<SimplexExpr>> simp_cache;
    auto simplices_of = [&](int n) -> const std::vector<SimplexExpr>& {
        auto it = simp_cache.find(n);
        if (it == simp_cache.end())
            it = simp_cache.emplace(n, C.simplices(n)).first;
        return it->second;
    };
    while (changed) {
        changed = false;
        ++rounds;
        if (cfg.thinness) {
            for (const auto& P : detail::thinness_patterns(cfg.search_dim)) {
                if (P.n > cfg.search_dim) continue;
                for (const auto& w : simplices_of(P.n)) {
                    bool match = true;
                    for (const auto& V : P.need)
                        if (!R.thin(face_of(w, V))) { match = false; break; }
                    if (!match) continue;
                    SimplexExpr f = face_of(w, P.conclusion);
                    if (f.nondegenerate() && C.dim(f.cell) >= 1 &&
                        !R.t.count(f.cell)) {
                        R.t.insert(f.cell);
                        ++added;
                        changed = true;
                    }
                }
            }
        }
        if (cfg.saturation) {
            for (const auto& S : detail::saturation_patterns(cfg.search_dim)) {
                if (S.N > cfg.search_dim) continue;
                for (const auto& w : simplices_of(S.N)) {
                    bool match = true;
                    for (const auto& V : S.need)
                        if (!R.thin(face_of(w, V))) { match = false; break; }
                    if (!match) continue;
                    for (const auto& V : S.extra) {
                        SimplexExpr f = face_of(w, V);
                        if (f.nondegenerate() && C.dim(f.cell) >= 1 &&
                            !R.t.count(f.cell)) {
                            R.t.insert(f.cell);
                            ++added;
                            changed = true;
                        }
                    }
                }
            }
        }
    }
    if (rep) *rep = {rounds, added, false};
    return R;
}

// Bistratified closure: thinness and saturation on t, cartesian thinness
// on c, keeping t inside c.
inline BistratSet saturate_bimarked(const BistratSet& X,
                                    const ClosureConfig& cfg,
                                    ClosureReport* rep = nullptr) {
    BistratSet R = X;
    for (CellId c : R.t) R.c.insert(c);
    const Complex& C = *R.cx;
    int rounds = 0, added = 0;
    auto face_of = [&](const SimplexExpr& w, const std::vector<int>& V) {
        return C.apply(w, Operator(V, w.dim()));
    };
    std::map<int, std::vector<SimplexExpr>> simp_cache;
    auto simplices_of = [&](int n) -> const std::vector<SimplexExpr>& {
        auto it = simp_cache.find(n);
        if (it == simp_cache.end())
            it = simp_cache.emplace(n, C.simplices(n)).first;
        return it->second;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        ++rounds;
        {
            StratSet under{R.cx, R.t};
            ClosureReport r1;
            StratSet closed = saturate_marked(under, cfg, &r1);
            if (closed.t != R.t) {
                for (CellId c : closed.t) {
                    R.t.insert(c);
                    R.c.insert(c);
                }
                added += r1.added;
                changed = true;
            }
        }
        if (cfg.cart_thinness) {
            for (const auto& P : detail::cart_patterns(cfg.search_dim)) {
                if (P.n > cfg.search_dim) continue;
                for (const auto& w : simplices_of(P.n)) {
                    bool match = true;
                    for (const auto& V : P.need_thin)
                        if (!R.thin(face_of(w, V))) { match = false; break; }
                    for (const auto& V : P.need_cart)
                        if (match && !R.cart(face_of(w, V))) match = false;
                    if (!match) continue;
                    SimplexExpr f = face_of(w, P.conclusion);
                    if (f.nondegenerate() && C.dim(f.cell) >= 1 &&
                        !R.c.count(f.cell)) {
                        R.c.insert(f.cell);
                        ++added;
                        changed = true;
                    }
                }
            }
        }
    }
    if (rep) *rep = {rounds, added, false};
    return R;
}

// One scan reporting every unmatched closure obligation.
inline std::vector<ClosureViolation> closure_violations(
    const StratSet& X, const ClosureConfig& cfg) {
    std::vector<ClosureViolation> out;
    std::set<CellId> seen; // one violation per missing mark
    const Complex& C = *X.cx;
    auto face_of = [&](const SimplexExpr& w, const std::vector<int>& V) {
        return C.apply(w, Operator(V, w.dim()));
    };
    if (cfg.thinness)
        for (const auto& P : detail::thinness_patterns(cfg.search_dim))
            for (const auto& w : C.simplices(P.n)) {
                bool match = true;
                for (const auto& V : P.need)
                    if (!X.thin(face_of(w, V))) { match = false; break; }
                if (!match) continue;
                SimplexExpr f = face_of(w, P.conclusion);
                if (f.nondegenerate() && C.dim(f.cell) >= 1 &&
                    !X.t.count(f.cell) && seen.insert(f.cell).second)
                    out.push_back({"thinness", w, f.cell, false});
            }
    if (cfg.saturation)
        for (const auto& S : detail::saturation_patterns(cfg.search_dim))
            for (const auto& w : C.simplices(S.N)) {
                bool match = true;
                for (const auto& V : S.need)
                    if (!X.thin(face_of(w, V))) { match = false; break; }
                if (!match) continue;
                for (const auto& V : S.extra) {
                    SimplexExpr f = face_of(w, V);
                    if (f.nondegenerate() && C.dim(f.cell) >= 1 &&
                        !X.t.count(f.cell) && seen.insert(f.cell).second)
                        out.push_back({"saturation", w, f.cell, false});
                }
            }
    return out;
}

inline bool is_saturated(const StratSet& X, const ClosureConfig& cfg) {
    return closure_violations(X, cfg).empty();
}

} // namespace complicial
