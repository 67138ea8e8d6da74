#pragma once

#include "lifting.hpp"

namespace complicial {

// ----------------------------------------------------------- globes

// The simplicial globes: iterated suspensions of the point, with the
// globular source/target maps cached.
struct GlobeTower {
    std::vector<StratSet> globe;          // G_n
    std::vector<SuspResult> susp;         // G_{n} = Sigma G_{n-1}, n >= 1
    std::vector<SMap> d0, d1;             // G_{n-1} -> G_n
    std::vector<StratSet> boundary;       // dG_n
    std::vector<SMap> boundary_incl;      // dG_n -> G_n
};

inline const GlobeTower& globes(int bound) {
    static std::map<int, std::shared_ptr<GlobeTower>> cache;
    auto it = cache.find(bound);
    if (it != cache.end()) return *it->second;
    auto T = std::make_shared<GlobeTower>();
    T->globe.push_back(delta(0));
    T->susp.emplace_back(); // unused slot 0
    T->d0.emplace_back();
    T->d1.emplace_back();
    {
        StratSet empty{std::make_shared<Complex>(), {}};
        T->boundary.push_back(empty);
        T->boundary_incl.push_back(SMap{empty.cx.get(), T->globe[0].cx.get(), {}});
    }
    for (int n = 1; n <= bound; ++n) {
        SuspResult S = suspension(T->globe[static_cast<size_t>(n) - 1]);
        T->globe.push_back(S.result);
        T->susp.push_back(S);
        // delta maps: base case is the vertex inclusion, then suspend
        if (n == 1) {
            SMap v0{T->globe[0].cx.get(), S.result.cx.get(),
                    {S.result.cx->nondeg(S.bottom)}};
            SMap v1{T->globe[0].cx.get(), S.result.cx.get(),
                    {S.result.cx->nondeg(S.top)}};
            T->d0.push_back(v0);
            T->d1.push_back(v1);
        } else {
            const SuspResult& Sp = T->susp[static_cast<size_t>(n) - 1];
            T->d0.push_back(susp_map(Sp, S, T->globe[static_cast<size_t>(n) - 2],
                                     T->globe[static_cast<size_t>(n) - 1],
                                     T->d0[static_cast<size_t>(n) - 1])
                                .f);
            T->d1.push_back(susp_map(Sp, S, T->globe[static_cast<size_t>(n) - 2],
                                     T->globe[static_cast<size_t>(n) - 1],
                                     T->d1[static_cast<size_t>(n) - 1])
                                .f);
        }
        // boundary: the union of the two monos G_{n-1} -> G_n
        std::set<CellId> gens;
        for (const auto& e : T->d0[static_cast<size_t>(n)].assign)
            gens.insert(e.cell);
        for (const auto& e : T->d1[static_cast<size_t>(n)].assign)
            gens.insert(e.cell);
        Subcomplex B = subcomplex(*S.result.cx, gens);
        T->boundary.push_back(
            {B.complex, restrict_marking(S.result.t, B.to_sub)});
        T->boundary_incl.push_back(B.incl);
    }
    cache[bound] = T;
    return *cache.at(bound);
}

inline StratSet globe(int n) { return globes(n).globe[static_cast<size_t>(n)]; }
inline StratSet globe_boundary(int n) {
    return globes(n).boundary[static_cast<size_t>(n)];
}
inline StratSet globe_t(int n) { return truncate(globe(n), n); }
inline BistratSet globe_c(int n) {
    StratSet g = globe(n);
    BistratSet b = as_bistrat(g);
    for (CellId c = 0; c < b.cx->size(); ++c)
        if (b.cx->dim(c) >= n) b.c.insert(c);
    return b;
}
inline BistratSet globe_t_bi(int n) {
    BistratSet b = globe_c(n);
    b.t = b.c;
    return b;
}

// ------------------------------------------------------------- cells

// An n-cell of C is a stratified map G_n -> C.
struct Cell {
    int n = 0;
    SMap f; // globe(n) -> C
    auto operator<=>(const Cell&) const = default;
};

inline std::vector<Cell> cells_of(const StratSet& C, int n) {
    StratSet G = globe(n);
    std::vector<Cell> out;
    MapSearch s{*G.cx, *C.cx};
    s.admit = [&](CellId c, const SimplexExpr& cand) {
        return !G.t.count(c) || C.thin(cand);
    };
    s.run([&](const SMap& f) {
        out.push_back({n, f});
        return true;
    });
    return out;
}

inline Cell source_of(const Cell& a) {
    const GlobeTower& T = globes(a.n);
    return {a.n - 1, compose(a.f, T.d0[static_cast<size_t>(a.n)])};
}
inline Cell target_of(const Cell& a) {
    const GlobeTower& T = globes(a.n);
    return {a.n - 1, compose(a.f, T.d1[static_cast<size_t>(a.n)])};
}
inline bool parallel(const Cell& a, const Cell& b) {
    if (a.n != b.n) return false;
    if (a.n == 0) return true;
    return source_of(a).f.assign == source_of(b).f.assign &&
           target_of(a).f.assign == target_of(b).f.assign;
}
inline bool composable(const Cell& a, const Cell& b) {
    // a after b: source of a = target of b
    return a.n == b.n && a.n >= 1 &&
           source_of(a).f.assign == target_of(b).f.assign;
}
// thin iff the classifying map factors through the truncated globe
inline bool cell_thin(const StratSet& C, const Cell& a) {
    StratSet Gt = globe_t(a.n);
    for (CellId c : Gt.t)
        if (!C.thin(a.f.assign[static_cast<size_t>(c)])) return false;
    return true;
}

// iterated suspension of a shape, with the composite map tracked
struct IteratedSusp {
    StratSet obj;
    std::vector<SuspResult> stages;
};

inline IteratedSusp iterate_susp(const StratSet& base, int times) {
    IteratedSusp out{base, {}};
    for (int i = 0; i < times; ++i) {
        out.stages.push_back(suspension(out.obj));
        out.obj = out.stages.back().result;
    }
    return out;
}

// Sigma^times of a map between iterated suspensions built from dom/cod
inline SMap iterate_susp_map(const IteratedSusp& dom, const IteratedSusp& cod,
                             const StratSet& dom_base, const StratSet& cod_base,
                             SMap f) {
    StratSet D = dom_base, Cc = cod_base;
    for (size_t i = 0; i < dom.stages.size(); ++i) {
        f = susp_map(dom.stages[i], cod.stages[i], D, Cc, f).f;
        D = dom.stages[i].result;
        Cc = cod.stages[i].result;
    }
    return f;
}

// A composition witness: Sigma^{n-1}(Delta[2]_t) -> C restricting to a and
// b on the spine, with the composite along the long edge.
struct Composition {
    SMap witness;   // Sigma^{n-1} Delta[2]_t -> C
    Cell composite; // a o b
};

inline std::optional<Composition> compose_cells(const StratSet& C,
                                                const Cell& a, const Cell& b) {
    assert(composable(a, b));
    int n = a.n;
    IteratedSusp W = iterate_susp(delta_t(2), n - 1);
    IteratedSusp E01 = iterate_susp(delta(1), n - 1);
    // edge inclusions of Delta[2], suspended; [0,1] carries b, [1,2] a
    SMap m01 = iterate_susp_map(E01, W, delta(1), delta_t(2),
                                delta_operator_map(1, 2, Operator({0, 1}, 2)));
    SMap m12 = iterate_susp_map(E01, W, delta(1), delta_t(2),
                                delta_operator_map(1, 2, Operator({1, 2}, 2)));
    SMap m02 = iterate_susp_map(E01, W, delta(1), delta_t(2),
                                delta_operator_map(1, 2, Operator({0, 2}, 2)));
    // Sigma^{n-1} Delta[1] is the globe G_n on the nose
    MapSearch s{*W.obj.cx, *C.cx};
    for (CellId c = 0; c < E01.obj.cx->size(); ++c) {
        s.forced[m01.assign[static_cast<size_t>(c)].cell] =
            b.f.assign[static_cast<size_t>(c)];
        s.forced[m12.assign[static_cast<size_t>(c)].cell] =
            a.f.assign[static_cast<size_t>(c)];
    }
    s.admit = [&](CellId c, const SimplexExpr& cand) {
        return !W.obj.t.count(c) || C.thin(cand);
    };
    std::optional<Composition> out;
    s.run([&](const SMap& f) {
        Composition comp;
        comp.witness = f;
        comp.composite = Cell{n, compose(f, m02)};
        out = comp;
        return false;
    });
    return out;
}

// A thin (n+1)-cell from a to b.
inline std::optional<Cell> equivalence_witness(const StratSet& C,
                                               const Cell& a, const Cell& b) {
    assert(parallel(a, b));
    int n = a.n;
    const GlobeTower& T = globes(n + 1);
    StratSet G1 = globe(n + 1);
    StratSet G1t = globe_t(n + 1);
    MapSearch s{*G1.cx, *C.cx};
    for (CellId c = 0; c < globe(n).cx->size(); ++c) {
        s.forced[T.d0[static_cast<size_t>(n) + 1]
                     .assign[static_cast<size_t>(c)]
                     .cell] = a.f.assign[static_cast<size_t>(c)];
        s.forced[T.d1[static_cast<size_t>(n) + 1]
                     .assign[static_cast<size_t>(c)]
                     .cell] = b.f.assign[static_cast<size_t>(c)];
    }
    s.admit = [&](CellId c, const SimplexExpr& cand) {
        return !G1t.t.count(c) || C.thin(cand);
    };
    std::optional<Cell> out;
    s.run([&](const SMap& f) {
        out = Cell{n + 1, f};
        return false;
    });
    return out;
}

// ------------------------------------------------ homotopy categories

// pi_n(s, t, C): objects are the n-cells from s to t, arrows are
// equivalence classes of (n+1)-cells; composition uses first-found
// witnesses.  Verdicts carry the fibrancy disclaimer: composites may be
// missing when C is not fibrant at the working bound.
struct HoCategory {
    std::vector<Cell> objects;
    // arrows[i][j]: class representatives of (n+1)-cells i -> j
    std::map<std::pair<int, int>, std::vector<Cell>> arrows;
    // composition[(i,j,k)][(f,g)] -> class index, -1 when no witness
    std::map<std::tuple<int, int, int, int, int>, int> table;
    bool fibrancy_checked = false;
    bool fibrant_at_bound = false;
    int bound = 0;
};

inline HoCategory pi_n(const StratSet& C, const std::optional<Cell>& s,
                       const std::optional<Cell>& t, int fib_bound) {
    HoCategory H;
    H.bound = fib_bound;
    int n = s ? s->n + 1 : 0;
    for (const Cell& x : cells_of(C, n)) {
        if (s && (source_of(x).f.assign != s->f.assign ||
                  target_of(x).f.assign != t->f.assign))
            continue;
        H.objects.push_back(x);
    }
    int N = static_cast<int>(H.objects.size());
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            if (!parallel(H.objects[static_cast<size_t>(i)],
                          H.objects[static_cast<size_t>(j)]))
                continue;
            std::vector<Cell> reps;
            for (const Cell& f : cells_of(C, n + 1)) {
                if (source_of(f).f.assign !=
                        H.objects[static_cast<size_t>(i)].f.assign ||
                    target_of(f).f.assign !=
                        H.objects[static_cast<size_t>(j)].f.assign)
                    continue;
                bool fresh = true;
                for (const Cell& r : reps)
                    if (equivalence_witness(C, r, f)) {
                        fresh = false;
                        break;
                    }
                if (fresh) reps.push_back(f);
            }
            H.arrows[{i, j}] = std::move(reps);
        }
    // composition on representatives
    for (const auto& [ij, fs] : H.arrows)
        for (const auto& [jk, gs] : H.arrows) {
            if (ij.second != jk.first) continue;
            for (int fi = 0; fi < static_cast<int>(fs.size()); ++fi)
                for (int gi = 0; gi < static_cast<int>(gs.size()); ++gi) {
                    auto comp = compose_cells(
                        C, gs[static_cast<size_t>(gi)],
                        fs[static_cast<size_t>(fi)]);
                    int cls = -1;
                    if (comp) {
                        const auto& hs = H.arrows.at({ij.first, jk.second});
                        for (int hi = 0; hi < static_cast<int>(hs.size());
                             ++hi)
                            if (equivalence_witness(
                                    C, hs[static_cast<size_t>(hi)],
                                    comp->composite)) {
                                cls = hi;
                                break;
                            }
                    }
                    H.table[{ij.first, ij.second, jk.second, fi, gi}] = cls;
                }
        }
    H.fibrancy_checked = true;
    H.fibrant_at_bound = check_infty(C, fib_bound).pass;
    return H;
}

// --------------------------------------- globe-wise fibration checks

struct FamilyVerdict {
    std::string family;
    RlpStatus status;
};

struct FibReport {
    bool pass = true;
    std::vector<FamilyVerdict> families;
    void add(const std::string& name, RlpStatus st) {
        families.push_back({name, st});
        if (st != RlpStatus::Has) pass = false;
    }
};

// RLP against dG_n -> G_n and G_n -> (G_n)_t for n <= d.
inline FibReport check_g_trivial_fibration(const StratMap& p, int d,
                                           long budget = -1) {
    FibReport rep;
    for (int n = 0; n <= d; ++n) {
        const GlobeTower& T = globes(n);
        StratMap bi{T.boundary[static_cast<size_t>(n)],
                    T.globe[static_cast<size_t>(n)],
                    T.boundary_incl[static_cast<size_t>(n)]};
        rep.add("globe_boundary(" + std::to_string(n) + ")",
                has_rlp(p, bi, budget).status);
        StratSet G = globe(n), Gt = globe_t(n);
        StratMap ti{G, Gt, identity_map(*G.cx)};
        ti.f.cod = Gt.cx.get();
        rep.add("globe_marking(" + std::to_string(n) + ")",
                has_rlp(p, ti, budget).status);
    }
    return rep;
}

// hom object C(a, b) up to a dimension bound: m-simplices are maps
// Sigma Delta[m] -> C with the two poles at a and b
struct HomObject {
    StratSet result;
    std::vector<std::vector<SMap>> elements;
};

inline HomObject hom_object(const StratSet& C, CellId a, CellId b, int bound) {
    // the cosimplicial suspension m -> Sigma Delta[m]
    std::vector<SuspResult> S;
    std::vector<SuspResult> St;
    for (int m = 0; m <= bound; ++m) {
        S.push_back(suspension(delta(m)));
        St.push_back(suspension(delta_t(m)));
    }
    HomObject H;
    H.elements.resize(static_cast<size_t>(bound) + 1);
    std::vector<std::map<std::vector<SimplexExpr>, int>> index(
        static_cast<size_t>(bound) + 1);
    for (int m = 0; m <= bound; ++m) {
        const StratSet& dom = S[static_cast<size_t>(m)].result;
        MapSearch s{*dom.cx, *C.cx};
        s.forced[S[static_cast<size_t>(m)].bottom] = C.cx->nondeg(a);
        s.forced[S[static_cast<size_t>(m)].top] = C.cx->nondeg(b);
        s.admit = [&](CellId c, const SimplexExpr& cand) {
            return !dom.t.count(c) || C.thin(cand);
        };
        s.run([&](const SMap& f) {
            index[static_cast<size_t>(m)][f.assign] =
                static_cast<int>(H.elements[static_cast<size_t>(m)].size());
            H.elements[static_cast<size_t>(m)].push_back(f);
            return true;
        });
    }
    TableSpec T;
    T.D = bound;
    for (int m = 0; m <= bound; ++m)
        T.counts.push_back(
            static_cast<int>(H.elements[static_cast<size_t>(m)].size()));
    T.act = [&](int dd, int i, const Operator& u) {
        int mp = u.dom_rank();
        const SMap& h =
            H.elements[static_cast<size_t>(dd)][static_cast<size_t>(i)];
        SMap du = delta_operator_map(mp, dd, u);
        SMap su = susp_map(S[static_cast<size_t>(mp)],
                           S[static_cast<size_t>(dd)], delta(mp), delta(dd),
                           du)
                      .f;
        SMap hu = compose(h, su);
        return index[static_cast<size_t>(mp)].at(hu.assign);
    };
    T.thin = [&](int dd, int i) {
        const SMap& h =
            H.elements[static_cast<size_t>(dd)][static_cast<size_t>(i)];
        // thin iff the map extends over the suspension of Delta[m]_t;
        // the complexes agree, only the marking grows
        const StratSet& bigger = St[static_cast<size_t>(dd)].result;
        for (CellId c : bigger.t)
            if (!C.thin(h.assign[static_cast<size_t>(c)])) return false;
        return true;
    };
    H.result = complex_from_table(T).result;
    return H;
}

struct FfEsReport {
    bool essentially_surjective = true;
    bool fully_faithful = true;
    std::vector<std::string> notes;
};

// Bounded fully-faithful / essentially-surjective report: es searches thin
// 1-cell witnesses; ff compares hom objects cellwise up to the bound.
inline FfEsReport check_ff_es(const StratMap& p, int d) {
    FfEsReport rep;
    const StratSet& X = p.dom;
    const StratSet& Y = p.cod;
    // essential surjectivity
    for (CellId y : Y.cx->cells(0)) {
        bool found = false;
        for (CellId x : X.cx->cells(0)) {
            CellId px = p.f.assign[static_cast<size_t>(x)].cell;
            if (px == y) { found = true; break; }
            // thin 1-cell p(x) -> y
            for (const Cell& e : cells_of(Y, 1)) {
                if (!cell_thin(Y, e)) continue;
                if (source_of(e).f.assign[0].cell == px &&
                    target_of(e).f.assign[0].cell == y) {
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found) {
            rep.essentially_surjective = false;
            rep.notes.push_back("vertex " + std::to_string(y) +
                                " has no essential preimage");
        }
    }
    // full faithfulness, cellwise up to the bound
    for (CellId a : X.cx->cells(0))
        for (CellId b : X.cx->cells(0)) {
            HomObject HX = hom_object(X, a, b, d);
            HomObject HY =
                hom_object(Y, p.f.assign[static_cast<size_t>(a)].cell,
                           p.f.assign[static_cast<size_t>(b)].cell, d);
            for (int m = 0; m <= d; ++m) {
                // injectivity and surjectivity of p o - on m-simplices
                std::set<std::vector<SimplexExpr>> images;
                for (const SMap& h : HX.elements[static_cast<size_t>(m)]) {
                    SMap ph = compose(p.f, h);
                    images.insert(ph.assign);
                }
                if (images.size() !=
                    HX.elements[static_cast<size_t>(m)].size()) {
                    rep.fully_faithful = false;
                    rep.notes.push_back("hom(" + std::to_string(a) + "," +
                                        std::to_string(b) +
                                        ") not injective at dim " +
                                        std::to_string(m));
                }
                if (images.size() !=
                    HY.elements[static_cast<size_t>(m)].size()) {
                    rep.fully_faithful = false;
                    rep.notes.push_back("hom(" + std::to_string(a) + "," +
                                        std::to_string(b) +
                                        ") not surjective at dim " +
                                        std::to_string(m));
                }
            }
        }
    return rep;
}

} // namespace complicial
