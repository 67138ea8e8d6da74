#pragma once

#include "homotopy.hpp"

namespace complicial {

// Bistratified lifting: squares and search with both markings.
struct BiSquare {
    BistratMap i, p, top, bottom;
};

inline std::optional<SMap> find_lift_bi(const BiSquare& sq) {
    const Complex& L = *sq.i.cod.cx;
    const Complex& X = *sq.p.dom.cx;
    MapSearch s{L, X};
    for (CellId c = 0; c < sq.i.dom.cx->size(); ++c)
        s.forced[sq.i.f.assign[static_cast<size_t>(c)].cell] =
            sq.top.f.assign[static_cast<size_t>(c)];
    s.admit = [&](CellId c, const SimplexExpr& cand) {
        if (sq.i.cod.t.count(c) && !sq.p.dom.thin(cand)) return false;
        if (sq.i.cod.c.count(c) && !sq.p.dom.cart(cand)) return false;
        return sq.p.f(cand) == sq.bottom.f.assign[static_cast<size_t>(c)];
    };
    std::optional<SMap> found;
    s.run([&](const SMap& f) {
        found = f;
        return false;
    });
    return found;
}

inline RlpStatus has_rlp_bi(const BistratMap& p, const BistratMap& i,
                            long budget = -1) {
    const Complex& K = *i.dom.cx;
    const Complex& L = *i.cod.cx;
    RlpStatus status = RlpStatus::Has;
    MapSearch tops{K, *p.dom.cx};
    tops.budget = budget;
    tops.admit = [&](CellId c, const SimplexExpr& cand) {
        if (i.dom.t.count(c) && !p.dom.thin(cand)) return false;
        if (i.dom.c.count(c) && !p.dom.cart(cand)) return false;
        return true;
    };
    tops.run([&](const SMap& top) {
        MapSearch bots{L, *p.cod.cx};
        bots.budget = budget;
        for (CellId c = 0; c < K.size(); ++c)
            bots.forced[i.f.assign[static_cast<size_t>(c)].cell] =
                p.cod.cx->apply(
                    p.f.assign[static_cast<size_t>(
                        top.assign[static_cast<size_t>(c)].cell)],
                    top.assign[static_cast<size_t>(c)].eta);
        bots.admit = [&](CellId c, const SimplexExpr& cand) {
            if (i.cod.t.count(c) && !p.cod.thin(cand)) return false;
            if (i.cod.c.count(c) && !p.cod.cart(cand)) return false;
            return true;
        };
        bool ok = bots.run([&](const SMap& bottom) {
            BiSquare sq{i, p, BistratMap{i.dom, p.dom, top},
                        BistratMap{i.cod, p.cod, bottom}};
            if (!find_lift_bi(sq)) {
                status = RlpStatus::No;
                return false;
            }
            return true;
        });
        if (bots.exhausted) {
            status = RlpStatus::BudgetExceeded;
            return false;
        }
        return ok && status == RlpStatus::Has;
    });
    if (tops.exhausted) status = RlpStatus::BudgetExceeded;
    return status;
}

// ------------------------------------------- bistratified constructions

// A construction run once with the t markings and once with the c
// markings produces the same underlying complex; merge the two runs.
struct BiSusp {
    BistratSet result;
    SuspResult t_run; // structure maps live here
};

inline BiSusp susp_bi(const BistratSet& X) {
    SuspResult st = suspension(StratSet{X.cx, X.t});
    SuspResult sc = suspension(StratSet{X.cx, X.c});
    assert(st.result.cx->size() == sc.result.cx->size());
    BistratSet R{st.result.cx, st.result.t, sc.result.t};
    for (CellId c : R.t) R.c.insert(c);
    return {R, st};
}

inline BistratMap susp_bi_map(const BiSusp& SD, const BiSusp& SC,
                              const BistratSet& dom, const BistratSet& cod,
                              const SMap& f) {
    StratMap m = susp_map(SD.t_run, SC.t_run, StratSet{dom.cx, dom.t},
                          StratSet{cod.cx, cod.t}, f);
    return {SD.result, SC.result, m.f};
}

// The wedge of a globe variant with a marked interval: the underlying
// wedge of Sigma G_{n-1} |> interval, with the variant's extra marks
// pushed through.
struct BiWedge {
    BistratSet result;
    WedgeResult t_run;
    BistratMap whisker; // the globe variant -> result
    BistratSet source;  // the globe variant (over the wedge's own Sigma)
};

// variant: 0 = G_n, 1 = (G_n)_c, 2 = (G_n)_t;  base: G_{n-1} or its
// boundary (so that K = dG_n is covered with variant 0, base_boundary).
inline BiWedge wedge_globe(int n, int variant, bool base_boundary, bool right,
                           const BistratSet& interval) {
    StratSet X = base_boundary ? globe_boundary(n - 1) : globe(n - 1);
    WedgeResult wt = wedge(X, right, StratSet{interval.cx, interval.t});
    WedgeResult wc = wedge(X, right, StratSet{interval.cx, interval.c});
    assert(wt.result.cx->size() == wc.result.cx->size());
    BistratSet R{wt.result.cx, wt.result.t, wc.result.t};
    // variant marks on the suspension corner: the top n-cells
    BistratSet src = as_bistrat(wt.susp.result);
    if (!base_boundary && variant >= 1) {
        for (CellId c = 0; c < src.cx->size(); ++c)
            if (src.cx->dim(c) >= n) {
                src.c.insert(c);
                if (variant == 2) src.t.insert(c);
            }
        for (CellId c : src.c) {
            SimplexExpr img = wt.col.cocone[3].f.assign[static_cast<size_t>(c)];
            if (img.nondegenerate()) R.c.insert(img.cell);
        }
        if (variant == 2)
            for (CellId c : src.t) {
                SimplexExpr img =
                    wt.col.cocone[3].f.assign[static_cast<size_t>(c)];
                if (img.nondegenerate()) R.t.insert(img.cell);
            }
    }
    for (CellId c : R.t) R.c.insert(c);
    BiWedge out;
    out.result = R;
    out.t_run = wt;
    out.source = src;
    out.whisker = BistratMap{src, R, wt.whisker.f};
    return out;
}

// Functorial wedge map over a base map X_K -> X_L (same interval, side).
inline SMap wedge_map(const WedgeResult& WK, const WedgeResult& WL,
                      const StratSet& XK, const StratSet& XL, const SMap& f,
                      bool right) {
    StratSet T = delta_t(2);
    SMap legG = compose(WL.col.cocone[0].f,
                        product_map(*WK.gprod, *WL.gprod, f,
                                    identity_map(*T.cx)));
    SMap fsusp = susp_map(WK.susp, WL.susp, XK, XL, f).f;
    SMap legS = compose(WL.col.cocone[3].f, fsusp);
    StratSet I = delta(1);
    SMap legI1 = compose(WL.col.cocone[1].f,
                         product_map(*WK.susp.pXI, *WL.susp.pXI, f,
                                     identity_map(*I.cx)));
    SMap legI2 = compose(WL.col.cocone[2].f,
                         product_map(*WK.susp.pXI, *WL.susp.pXI, f,
                                     identity_map(*I.cx)));
    SMap legD = WL.col.cocone[4].f;
    SMap legP = WL.col.cocone[5].f;
    SMap out = induce_from_colimit(
        *WK.col.engine, {&legG, &legI1, &legI2, &legS, &legD, &legP},
        *WL.result.cx);
    std::string why;
    if (!valid_smap(out, &why))
        throw std::logic_error("wedge functor map invalid: " + why);
    (void)right;
    return out;
}

// The corner (K |> I_c u_whisker L) -> (L |> I_c) for a globe pair K -> L.
struct NaiveCorner {
    BistratMap corner;
    BistratColimit dom;
};

// pair_kind: 0 = dG_n -> G_n, 1 = G_n -> (G_n)_c, 2 = (G_n)_c -> (G_n)_t.
inline NaiveCorner naive_corner(int n, int pair_kind, bool right,
                                const BistratSet& interval) {
    BiWedge WL = wedge_globe(n, pair_kind == 0 ? 0 : pair_kind, false, right,
                             interval);
    BiWedge WK = pair_kind == 0
                     ? wedge_globe(n, 0, true, right, interval)
                     : wedge_globe(n, pair_kind - 1, false, right, interval);
    // K -> L on the suspension corners
    SMap kl;
    if (pair_kind == 0) {
        // Sigma(boundary incl)
        StratSet XK = globe_boundary(n - 1), XL = globe(n - 1);
        const GlobeTower& T = globes(n - 1);
        kl = susp_map(WK.t_run.susp, WL.t_run.susp, XK, XL,
                      T.boundary_incl[static_cast<size_t>(n) - 1])
                 .f;
    } else {
        kl = identity_map(*WK.source.cx);
        kl.cod = WL.source.cx.get();
    }
    // pushout of (K -> WK, K -> L)
    BistratColimit push = bistrat_colimit(
        {&WK.result, &WL.source, &WK.source},
        {{2, 0, WK.whisker.f}, {2, 1, kl}});
    // corner legs: WK -> WL functorial, L -> WL whisker
    SMap wkl;
    if (pair_kind == 0) {
        StratSet XK = globe_boundary(n - 1), XL = globe(n - 1);
        const GlobeTower& T = globes(n - 1);
        wkl = wedge_map(WK.t_run, WL.t_run, XK, XL,
                        T.boundary_incl[static_cast<size_t>(n) - 1], right);
    } else {
        wkl = identity_map(*WK.result.cx);
        wkl.cod = WL.result.cx.get();
    }
    SMap leg2 = compose(wkl, WK.whisker.f);
    SMap h = induce_from_colimit(*push.engine,
                                 {&wkl, &WL.whisker.f, &leg2},
                                 *WL.result.cx);
    NaiveCorner out;
    out.dom = push;
    out.corner = BistratMap{push.result, WL.result, h};
    return out;
}

// --------------------------------------------- naive fibration checks

// The marked-interval endpoint inclusions, suspended m times.
inline BistratMap susp_endpoint(int m, int eps, const BistratSet& interval) {
    BistratSet D = interval;
    BistratSet P = as_bistrat(delta(0));
    SMap v{P.cx.get(), D.cx.get(), {D.cx->nondeg(eps)}};
    BistratMap f{P, D, v};
    BistratSet dom = P, cod = D;
    for (int k = 0; k < m; ++k) {
        BiSusp SD = susp_bi(dom), SC = susp_bi(cod);
        f = susp_bi_map(SD, SC, dom, cod, f.f);
        dom = SD.result;
        cod = SC.result;
    }
    return f;
}

struct NaiveFibReport {
    bool pass = true;
    std::vector<FamilyVerdict> families;
    void add(const std::string& name, RlpStatus st) {
        families.push_back({name, st});
        if (st != RlpStatus::Has) pass = false;
    }
};

// The base level of the naive-fibration conditions for a marked map: the
// marked-endpoint lifting plus right- (or left-) cancellability of the
// wedge corners, globe levels <= d.
inline NaiveFibReport check_naive_1_fibration(const BistratMap& p, int d,
                                              bool right, long budget = -1) {
    NaiveFibReport rep;
    BistratSet Ic = {delta_complex(1), {}, {2}};
    rep.add(right ? "endpoint(1)" : "endpoint(0)",
            has_rlp_bi(p, susp_endpoint(0, right ? 1 : 0, Ic), budget));
    for (int n = 1; n <= d; ++n)
        for (int kind = 0; kind <= 2; ++kind) {
            NaiveCorner C = naive_corner(n, kind, right, Ic);
            rep.add("wedge_corner(n=" + std::to_string(n) +
                        ",kind=" + std::to_string(kind) + "," +
                        (right ? "right" : "left") + ")",
                    has_rlp_bi(p, C.corner, budget));
        }
    return rep;
}

enum class FibClass { Right, Left, CoRight, CoLeft };

// Aggregated n-fold conditions: the m-fold suspension of the base shapes,
// with the side fixed by the parity scheme of the fibration class.
inline NaiveFibReport check_naive_fibration(const BistratMap& p, int d,
                                            FibClass cls, long budget = -1) {
    NaiveFibReport rep;
    BistratSet Ic = {delta_complex(1), {}, {2}};
    auto side_at = [&](int m) {
        switch (cls) {
            case FibClass::CoRight: return true;
            case FibClass::CoLeft: return false;
            case FibClass::Right: return m % 2 == 0;
            default: return m % 2 == 1;
        }
    };
    for (int m = 0; m <= d; ++m) {
        bool right = side_at(m);
        BistratMap ep = susp_endpoint(m, right ? 1 : 0, Ic);
        rep.add("endpoint(m=" + std::to_string(m) + "," +
                    (right ? "1" : "0") + ")",
                has_rlp_bi(p, ep, budget));
        for (int n = 1; n + m <= d; ++n)
            for (int kind = 0; kind <= 2; ++kind) {
                NaiveCorner C = naive_corner(n, kind, right, Ic);
                BistratMap shape = C.corner;
                BistratSet dom = shape.dom, cod = shape.cod;
                for (int k = 0; k < m; ++k) {
                    BiSusp SD = susp_bi(dom), SC = susp_bi(cod);
                    shape = susp_bi_map(SD, SC, dom, cod, shape.f);
                    dom = SD.result;
                    cod = SC.result;
                }
                rep.add("wedge_corner(m=" + std::to_string(m) +
                            ",n=" + std::to_string(n) +
                            ",kind=" + std::to_string(kind) + ")",
                        has_rlp_bi(p, shape, budget));
            }
    }
    return rep;
}

} // namespace complicial
