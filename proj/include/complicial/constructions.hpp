#pragma once

#include "shapes.hpp"

namespace complicial {

// ---------------------------------------------------------------- join

// Nondegenerate cells of X * Y are pairs (x or empty, y or empty), not
// both empty; dim = dim x + dim y + 1 with empty counted as -1.
struct JoinResult {
    StratSet result;
    const StratSet* X;
    const StratSet* Y;
    std::map<std::pair<CellId, CellId>, CellId> index; // -1 = empty slot
    std::vector<std::pair<CellId, CellId>> pair_of;

    // canonical join of two simplices (either may be absent)
    SimplexExpr expr(const std::optional<SimplexExpr>& a,
                     const std::optional<SimplexExpr>& b) const {
        Operator ea = a ? a->eta : Operator::empty(-1);
        Operator eb = b ? b->eta : Operator::empty(-1);
        CellId ca = a ? a->cell : -1, cb = b ? b->cell : -1;
        return {join_op(ea, eb), index.at({ca, cb})};
    }
};

inline JoinResult join(const StratSet& X, const StratSet& Y) {
    JoinResult R;
    R.X = &X;
    R.Y = &Y;
    Complex J;
    int DX = X.cx->dim_bound(), DY = Y.cx->dim_bound();
    for (int d = 0; d <= DX + DY + 1; ++d) {
        for (int dx = -1; dx <= d; ++dx) {
            int dy = d - 1 - dx;
            if (dx > DX || dy > DY || dy < -1) continue;
            std::vector<CellId> xs =
                dx < 0 ? std::vector<CellId>{-1} : X.cx->cells(dx);
            std::vector<CellId> ys =
                dy < 0 ? std::vector<CellId>{-1} : Y.cx->cells(dy);
            for (CellId x : xs)
                for (CellId y : ys) {
                    if (x < 0 && y < 0) continue;
                    std::vector<SimplexExpr> faces;
                    for (int i = 0; d > 0 && i <= d; ++i) {
                        std::optional<SimplexExpr> a, b;
                        if (x >= 0) a = X.cx->nondeg(x);
                        if (y >= 0) b = Y.cx->nondeg(y);
                        if (i <= dx) {
                            if (dx == 0) a.reset();
                            else a = X.cx->apply(*a, Operator::face(dx, i));
                        } else {
                            if (dy == 0) b.reset();
                            else b = Y.cx->apply(*b,
                                                 Operator::face(dy, i - dx - 1));
                        }
                        faces.push_back(R.expr(a, b));
                    }
                    CellId c = J.add_cell(d, std::move(faces));
                    R.index[{x, y}] = c;
                    R.pair_of.push_back({x, y});
                }
        }
    }
    Marking t;
    for (CellId c = 0; c < J.size(); ++c) {
        if (J.dim(c) < 1) continue;
        auto [x, y] = R.pair_of[static_cast<size_t>(c)];
        bool thin = false;
        if (x >= 0 && X.cx->dim(x) >= 1 && X.t.count(x)) thin = true;
        if (y >= 0 && Y.cx->dim(y) >= 1 && Y.t.count(y)) thin = true;
        if (thin) t.insert(c);
    }
    R.result = make_strat(std::move(J), std::move(t));
    return R;
}

// f * g on joins already computed for the dom and cod pairs.
inline SMap join_map(const JoinResult& dom, const JoinResult& cod,
                     const SMap& f, const SMap& g) {
    SMap h{dom.result.cx.get(), cod.result.cx.get(), {}};
    for (CellId c = 0; c < dom.result.cx->size(); ++c) {
        auto [x, y] = dom.pair_of[static_cast<size_t>(c)];
        std::optional<SimplexExpr> a, b;
        if (x >= 0) a = f.assign[static_cast<size_t>(x)];
        if (y >= 0) b = g.assign[static_cast<size_t>(y)];
        h.assign.push_back(cod.expr(a, b));
    }
    return h;
}

// ---------------------------------------------------------------- gray

using ThinPred = std::function<bool(const SimplexExpr&)>;

// A pair (x,y) of dimension n is thin when for every partition p+q = n
// the front p-face of x or the back q-face of y is thin.  The cocontinuous
// pretensor is not implemented separately: on finite objects its closure
// agrees with the closure of this marking, so downstream consumers
// saturate on demand instead.
inline Marking gray_marking(const Complex& CX, const Complex& CY,
                            const ProductResult& P, const ThinPred& tx,
                            const ThinPred& ty) {
    Marking out;
    for (CellId c = 0; c < P.complex->size(); ++c) {
        int n = P.complex->dim(c);
        if (n < 1) continue;
        const auto& [a, b] = P.pair_of[static_cast<size_t>(c)];
        bool thin = true;
        for (int p = 0; p <= n && thin; ++p) {
            int q = n - p;
            if (!tx(CX.apply(a, face_partition1(p, q))) &&
                !ty(CY.apply(b, face_partition2(p, q))))
                thin = false;
        }
        if (thin) out.insert(c);
    }
    return out;
}

struct GrayResult {
    StratSet result;
    std::shared_ptr<ProductResult> prod;
    StratMap proj1, proj2; // projections of the underlying product
};

inline GrayResult gray(const StratSet& X, const StratSet& Y) {
    auto P = std::make_shared<ProductResult>(product(*X.cx, *Y.cx));
    Marking t = gray_marking(
        *X.cx, *Y.cx, *P, [&](const SimplexExpr& e) { return X.thin(e); },
        [&](const SimplexExpr& e) { return Y.thin(e); });
    StratSet R{P->complex, std::move(t)};
    return {R, P, StratMap{R, X, P->proj1}, StratMap{R, Y, P->proj2}};
}

inline BistratSet gray_bi(const BistratSet& X, const BistratSet& Y,
                          std::shared_ptr<ProductResult>* keep = nullptr) {
    auto P = std::make_shared<ProductResult>(product(*X.cx, *Y.cx));
    Marking t = gray_marking(
        *X.cx, *Y.cx, *P, [&](const SimplexExpr& e) { return X.thin(e); },
        [&](const SimplexExpr& e) { return Y.thin(e); });
    Marking c = gray_marking(
        *X.cx, *Y.cx, *P, [&](const SimplexExpr& e) { return X.cart(e); },
        [&](const SimplexExpr& e) { return Y.cart(e); });
    if (keep) *keep = P;
    return {P->complex, std::move(t), std::move(c)};
}

// ------------------------------------------------- diamond and co-join

// X (x) Delta[1] (x) Y with the tensor ends and projections tracked.
struct Cylinder {
    StratSet mid;               // X (x) I (x) Y
    StratSet end0, end1;        // X (x) {eps} (x) Y
    SMap incl0, incl1;          // ends into mid
    SMap to_x0, to_y0, to_x1, to_y1;  // end projections
    std::shared_ptr<ProductResult> p1, p2, p1e, p2e0, p2e1;
    StratSet xi; // X (x) I (keeps p1 alive for part extraction)
};

inline Cylinder tensor_cylinder(const StratSet& X, const StratSet& Y) {
    Cylinder C;
    StratSet I = delta(1), pt = delta(0);
    GrayResult XI = gray(X, I);
    C.p1 = XI.prod;
    C.xi = XI.result;
    GrayResult G = gray(XI.result, Y);
    C.p2 = G.prod;
    C.mid = G.result;
    GrayResult XP = gray(X, pt);
    C.p1e = XP.prod;
    for (int eps = 0; eps <= 1; ++eps) {
        SMap vx{pt.cx.get(), I.cx.get(), {I.cx->nondeg(eps)}};
        SMap m1 = product_map(*C.p1e, *C.p1, identity_map(*X.cx), vx);
        GrayResult E = gray(XP.result, Y);
        // markings of the end: as a tensor X (x) {eps} (x) Y
        SMap m2 = product_map(*E.prod, *C.p2, m1, identity_map(*Y.cx));
        StratSet Eres = E.result;
        if (eps == 0) {
            C.end0 = Eres;
            C.incl0 = m2;
            C.p2e0 = E.prod;
            C.to_x0 = compose(C.p1e->proj1, E.prod->proj1);
            C.to_y0 = E.prod->proj2;
        } else {
            C.end1 = Eres;
            C.incl1 = m2;
            C.p2e1 = E.prod;
            C.to_x1 = compose(C.p1e->proj1, E.prod->proj1);
            C.to_y1 = E.prod->proj2;
        }
    }
    return C;
}

struct DiamondResult {
    StratSet result;
    StratColimit col; // objects: mid, end0, end1, X, Y
    Cylinder cyl;
    StratSet Xcopy, Ycopy;
};

inline DiamondResult diamond(const StratSet& X, const StratSet& Y) {
    DiamondResult D;
    D.cyl = tensor_cylinder(X, Y);
    D.Xcopy = X;
    D.Ycopy = Y;
    std::vector<const StratSet*> objs{&D.cyl.mid, &D.cyl.end0, &D.cyl.end1,
                                      &D.Xcopy, &D.Ycopy};
    std::vector<StratArrow> arrows{{1, 0, D.cyl.incl0},
                                   {1, 3, D.cyl.to_x0},
                                   {2, 0, D.cyl.incl1},
                                   {2, 4, D.cyl.to_y1}};
    D.col = strat_colimit(objs, arrows);
    D.result = D.col.result;
    return D;
}

// functorial action of the diamond in both arguments
inline SMap diamond_map(const DiamondResult& A, const DiamondResult& B,
                        const SMap& f, const SMap& g) {
    const Cylinder& CA = A.cyl;
    const Cylinder& CB = B.cyl;
    StratSet I = delta(1), pt = delta(0);
    SMap m1 = product_map(*CA.p1, *CB.p1, f, identity_map(*I.cx));
    SMap mid = compose(B.col.cocone[0].f,
                       product_map(*CA.p2, *CB.p2, m1, g));
    SMap m1e = product_map(*CA.p1e, *CB.p1e, f, identity_map(*pt.cx));
    SMap e0 = compose(B.col.cocone[1].f,
                      product_map(*CA.p2e0, *CB.p2e0, m1e, g));
    SMap e1 = compose(B.col.cocone[2].f,
                      product_map(*CA.p2e1, *CB.p2e1, m1e, g));
    SMap lx = compose(B.col.cocone[3].f, f);
    SMap ly = compose(B.col.cocone[4].f, g);
    SMap out = induce_from_colimit(*A.col.engine, {&mid, &e0, &e1, &lx, &ly},
                                   *B.result.cx);
    std::string why;
    if (!valid_smap(out, &why))
        throw std::logic_error("diamond map invalid: " + why);
    return out;
}

// X *co Y: the colimit of Y (x) I (x) X with the {1} end collapsed to Y
// and the {0} end to X.
struct CojoinResult {
    StratSet result;
    StratColimit col;
    Cylinder cyl;
    StratSet Xcopy, Ycopy;
    StratMap from_x, from_y; // cocone legs
};

inline CojoinResult cojoin(const StratSet& X, const StratSet& Y) {
    CojoinResult R;
    R.cyl = tensor_cylinder(Y, X); // note the order: Y (x) I (x) X
    R.Xcopy = X;
    R.Ycopy = Y;
    std::vector<const StratSet*> objs{&R.cyl.mid, &R.cyl.end0, &R.cyl.end1,
                                      &R.Xcopy, &R.Ycopy};
    std::vector<StratArrow> arrows{{1, 0, R.cyl.incl0},
                                   {1, 3, R.cyl.to_y0}, // {0} end -> X
                                   {2, 0, R.cyl.incl1},
                                   {2, 4, R.cyl.to_x1}}; // {1} end -> Y
    R.col = strat_colimit(objs, arrows);
    R.result = R.col.result;
    R.from_x = R.col.cocone[3];
    R.from_y = R.col.cocone[4];
    return R;
}

// ---------------------------------------------------------- suspension

struct SuspResult {
    StratSet result;
    StratColimit col; // objects: X (x) I, X (x) dI, two points
    CellId bottom = -1, top = -1;
    StratSet XI, XB, Pts;
    std::shared_ptr<ProductResult> pXI, pXB;
    bool circ = false;
};

// circ = false: X (x) Delta[1] with X (x) {eps} collapsed;
// circ = true:  Delta[1] (x) X (the circle-suspension).
inline SuspResult suspension(const StratSet& X, bool circ = false) {
    SuspResult S;
    S.circ = circ;
    StratSet I = delta(1);
    BoundaryShape B = boundary_incl(1);
    GrayResult XI = circ ? gray(I, X) : gray(X, I);
    GrayResult XB = circ ? gray(B.boundary, X) : gray(X, B.boundary);
    S.pXI = XI.prod;
    S.pXB = XB.prod;
    S.XI = XI.result;
    S.XB = XB.result;
    {
        Complex two;
        two.add_vertex();
        two.add_vertex();
        S.Pts = make_strat(std::move(two));
    }
    SMap bi = circ ? product_map(*XB.prod, *XI.prod, B.incl.f,
                                 identity_map(*X.cx))
                   : product_map(*XB.prod, *XI.prod, identity_map(*X.cx),
                                 B.incl.f);
    // X (x) dI -> two points via the boundary component
    SMap proj = circ ? XB.prod->proj1 : XB.prod->proj2;
    SMap fold{S.XB.cx.get(), S.Pts.cx.get(), {}};
    for (CellId c = 0; c < S.XB.cx->size(); ++c) {
        SimplexExpr e = proj.assign[static_cast<size_t>(c)];
        // boundary vertex id (0 or 1) of the constant component
        CellId v = B.boundary.cx->vertices(e)[0];
        int d = S.XB.cx->dim(c);
        Operator collapse({}, 0);
        {
            std::vector<int> img(static_cast<size_t>(d) + 1, 0);
            collapse = Operator(std::move(img), 0);
        }
        fold.assign.push_back(S.Pts.cx->apply(S.Pts.cx->nondeg(v), collapse));
    }
    S.col = strat_colimit({&S.XI, &S.XB, &S.Pts},
                          {{1, 0, bi}, {1, 2, fold}});
    S.result = S.col.result;
    S.bottom = S.col.cocone[2].f.assign[0].cell;
    S.top = S.col.cocone[2].f.assign[1].cell;
    return S;
}

// Functorial action of the suspension.
inline StratMap susp_map(const SuspResult& SX, const SuspResult& SY,
                         const StratSet& X, const StratSet& Y, const SMap& f) {
    StratSet I = delta(1);
    SMap leg0 = compose(
        SY.col.cocone[0].f,
        SX.circ ? product_map(*SX.pXI, *SY.pXI, identity_map(*I.cx), f)
                : product_map(*SX.pXI, *SY.pXI, f, identity_map(*I.cx)));
    BoundaryShape B = boundary_incl(1);
    SMap leg1 = compose(
        SY.col.cocone[1].f,
        SX.circ ? product_map(*SX.pXB, *SY.pXB, identity_map(*B.boundary.cx), f)
                : product_map(*SX.pXB, *SY.pXB, f,
                              identity_map(*B.boundary.cx)));
    SMap leg2 = SY.col.cocone[2].f;
    SMap h = induce_from_colimit(*SX.col.engine, {&leg0, &leg1, &leg2},
                                 *SY.result.cx);
    std::string why;
    if (!valid_smap(h, &why))
        throw std::logic_error("suspension map invalid: " + why);
    return {SX.result, SY.result, h};
}

// ---------------------------------------------------------------- wedge

// Sigma X |> Delta[1] (right = true) or Delta[1] |> Sigma X, with the
// whiskering map from Sigma X.  The interval end may carry a marking
// (Delta[1]_c / Delta[1]_t variants used by the fibration checks).
struct WedgeResult {
    StratSet result;
    SuspResult susp;
    StratMap whisker; // Sigma X -> result
    StratColimit col;
    std::shared_ptr<ProductResult> gprod; // X (x) Delta[2]_t
};

inline SMap delta_operator_map(int m, int n, const Operator& u) {
    // the simplicial map Delta[m] -> Delta[n] induced by u : [m] -> [n]
    const Complex& Dm = *delta_complex(m);
    const Complex& Dn = *delta_complex(n);
    SMap f{&Dm, &Dn, {}};
    for (CellId c = 0; c < Dm.size(); ++c) {
        std::vector<int> vs = Dm.cell_vertices(c);
        f.assign.push_back(Dn.apply(Dn.nondeg(static_cast<CellId>(Dn.size()) - 1),
                                    compose(u, Operator(vs, m))));
    }
    return f;
}

inline WedgeResult wedge(const StratSet& X, bool right,
                         const StratSet& interval_end) {
    WedgeResult W;
    W.susp = suspension(X);
    StratSet T = delta_t(2);
    GrayResult G = gray(X, T);
    W.gprod = G.prod;
    // both interval legs reuse the suspension's X (x) Delta[1]
    SMap d01 = delta_operator_map(1, 2, Operator({0, 1}, 2));
    SMap d12 = delta_operator_map(1, 2, Operator({1, 2}, 2));
    SMap m01 = product_map(*W.susp.pXI, *G.prod, identity_map(*X.cx), d01);
    SMap m12 = product_map(*W.susp.pXI, *G.prod, identity_map(*X.cx), d12);
    const SMap& msusp = right ? m01 : m12;
    const SMap& mfree = right ? m12 : m01;
    SMap to_susp = W.susp.col.cocone[0].f;
    StratSet D = interval_end;
    assert(D.cx.get() == delta_complex(1).get());
    SMap to_D{W.susp.XI.cx.get(), D.cx.get(), W.susp.pXI->proj2.assign};
    // the suspension end at the shared Delta[2] vertex is the free
    // interval's start (the wedge lives under Delta[0] u Delta[1])
    StratSet Pt = delta(0);
    SMap pt_susp{Pt.cx.get(), W.susp.result.cx.get(),
                 {W.susp.result.cx->nondeg(right ? W.susp.top
                                                 : W.susp.bottom)}};
    SMap pt_D{Pt.cx.get(), D.cx.get(), {D.cx->nondeg(right ? 0 : 1)}};
    std::vector<const StratSet*> objs{&G.result, &W.susp.XI, &W.susp.XI,
                                      &W.susp.result, &D, &Pt};
    std::vector<StratArrow> arrows{{1, 0, msusp}, {1, 3, to_susp},
                                   {2, 0, mfree}, {2, 4, to_D},
                                   {5, 3, pt_susp}, {5, 4, pt_D}};
    W.col = strat_colimit(objs, arrows);
    W.result = W.col.result;
    // whisker: induced by X (x) [0,2] inside X (x) Delta[2]_t
    SMap d02 = delta_operator_map(1, 2, Operator({0, 2}, 2));
    SMap legI = compose(W.col.cocone[0].f,
                        product_map(*W.susp.pXI, *G.prod, identity_map(*X.cx),
                                    d02));
    BoundaryShape B = boundary_incl(1);
    SMap legB = compose(legI, product_map(*W.susp.pXB, *W.susp.pXI,
                                          identity_map(*X.cx), B.incl.f));
    // base points: {0} lands where Sigma X (right) or the free interval
    // (left) collapses it, {2} on the other end
    SMap legP{W.susp.Pts.cx.get(), W.result.cx.get(), {}};
    if (right) {
        legP.assign.push_back(
            W.col.cocone[3].f.assign[static_cast<size_t>(W.susp.bottom)]);
        legP.assign.push_back(W.col.cocone[4].f.assign[1]);
    } else {
        legP.assign.push_back(W.col.cocone[4].f.assign[0]);
        legP.assign.push_back(
            W.col.cocone[3].f.assign[static_cast<size_t>(W.susp.top)]);
    }
    SMap h = induce_from_colimit(*W.susp.col.engine, {&legI, &legB, &legP},
                                 *W.result.cx);
    std::string why;
    if (!valid_smap(h, &why))
        throw std::logic_error("wedge whisker invalid: " + why);
    W.whisker = StratMap{W.susp.result, W.result, h};
    return W;
}

// tau_n: mark everything of dimension >= n.
inline StratSet truncate(const StratSet& X, int n) {
    assert(n >= 1);
    StratSet R = X;
    for (CellId c = 0; c < R.cx->size(); ++c)
        if (R.cx->dim(c) >= n) R.t.insert(c);
    return R;
}

inline BistratSet truncate_bi(const BistratSet& X, int n) {
    BistratSet R = X;
    for (CellId c = 0; c < R.cx->size(); ++c)
        if (R.cx->dim(c) >= n) {
            R.t.insert(c);
            R.c.insert(c);
        }
    return R;
}


// ------------------------------------------------------------- gamma

// The comparison map X <> Y -> X * Y, determined on representable pieces
// by sending (k, 0, l) to k and (k, 1, l) to l.
inline StratMap gamma(const DiamondResult& D, const JoinResult& JR) {
    const StratSet& X = *JR.X;
    const StratSet& Y = *JR.Y;
    const Cylinder& C = D.cyl;
    const Complex& I = *delta_complex(1);
    SMap h{D.result.cx.get(), JR.result.cx.get(), {}};
    for (CellId c = 0; c < D.result.cx->size(); ++c) {
        auto [obj, s] = D.col.engine->preimage(c);
        int d = s.dim();
        std::optional<SimplexExpr> img;
        switch (obj) {
            case 3: img = JR.expr(s, std::nullopt); break;
            case 4: img = JR.expr(std::nullopt, s); break;
            case 1: img = JR.expr(C.to_x0(s), std::nullopt); break;
            case 2: img = JR.expr(std::nullopt, C.to_y1(s)); break;
            default: {
                const auto& [a0, y0] = C.p2->pair_of[static_cast<size_t>(s.cell)];
                SimplexExpr a = C.p1->complex->apply(a0, s.eta);
                SimplexExpr y = Y.cx->apply(y0, s.eta);
                const auto& [x0, v0] = C.p1->pair_of[static_cast<size_t>(a.cell)];
                SimplexExpr x = X.cx->apply(x0, a.eta);
                SimplexExpr v = I.apply(v0, a.eta);
                std::vector<CellId> vs = I.vertices(v);
                int p = 0;
                while (p <= d && vs[static_cast<size_t>(p)] == 0) ++p;
                if (p == d + 1) img = JR.expr(x, std::nullopt);
                else if (p == 0) img = JR.expr(std::nullopt, y);
                else
                    img = JR.expr(X.cx->apply(x, face_partition1(p - 1, d - p + 1)),
                                  Y.cx->apply(y, face_partition2(p, d - p)));
            }
        }
        h.assign.push_back(*img);
    }
    std::string why;
    auto m = check_strat_map(h, D.result, JR.result, &why);
    if (!m) throw std::logic_error("gamma failed validation: " + why);
    return *m;
}

// Section of gamma on representables: s(k * 0) = (k,0,0), s(0 * l) = (n,1,l).
inline StratMap gamma_section(int n, int m, const DiamondResult& D,
                              const JoinResult& JR) {
    const Complex& DX = *delta_complex(n);
    const Complex& DY = *delta_complex(m);
    const Complex& I = *delta_complex(1);
    int N = n + m + 1;
    std::vector<int> xv, vv, yv;
    for (int i = 0; i <= N; ++i) {
        xv.push_back(std::min(i, n));
        vv.push_back(i <= n ? 0 : 1);
        yv.push_back(std::max(i - n - 1, 0));
    }
    SimplexExpr xs = DX.apply(DX.nondeg(static_cast<CellId>(DX.size()) - 1),
                              Operator(xv, n));
    SimplexExpr vs = I.apply(I.nondeg(2), Operator(vv, 1));
    SimplexExpr ys = DY.apply(DY.nondeg(static_cast<CellId>(DY.size()) - 1),
                              Operator(yv, m));
    const Cylinder& C = D.cyl;
    SimplexExpr a = C.p1->expr(DX, I, xs, vs);
    SimplexExpr mid = C.p2->expr(*C.p1->complex, DY, a, ys);
    SimplexExpr top = D.col.engine->image(0, mid);
    SMap h{JR.result.cx.get(), D.result.cx.get(), {}};
    for (CellId c = 0; c < JR.result.cx->size(); ++c) {
        auto [x, y] = JR.pair_of[static_cast<size_t>(c)];
        Operator ux = x >= 0 ? Operator(DX.cell_vertices(x), n)
                             : Operator::empty(n);
        Operator uy = y >= 0 ? Operator(DY.cell_vertices(y), m)
                             : Operator::empty(m);
        h.assign.push_back(D.result.cx->apply(top, join_op(ux, uy)));
    }
    std::string why;
    auto sm = check_strat_map(h, JR.result, D.result, &why);
    if (!sm) throw std::logic_error("gamma section invalid: " + why);
    return *sm;
}

// ------------------------------------------------------------ leibniz

enum class Tensor { Product, Gray, Join };

struct TensorResult {
    StratSet result;
    std::shared_ptr<ProductResult> prod; // product/gray only
    std::shared_ptr<JoinResult> jn;      // join only
};

inline TensorResult tensor_of(Tensor kind, const StratSet& A,
                              const StratSet& B) {
    TensorResult R;
    switch (kind) {
        case Tensor::Product: {
            auto P = strat_product(A, B);
            R.result = P.result;
            R.prod = P.prod;
            break;
        }
        case Tensor::Gray: {
            auto G = gray(A, B);
            R.result = G.result;
            R.prod = G.prod;
            break;
        }
        case Tensor::Join: {
            R.jn = std::make_shared<JoinResult>(join(A, B));
            R.result = R.jn->result;
            break;
        }
    }
    return R;
}

inline SMap tensor_map(Tensor kind, const TensorResult& dom,
                       const TensorResult& cod, const SMap& f, const SMap& g) {
    if (kind == Tensor::Join) return join_map(*dom.jn, *cod.jn, f, g);
    return product_map(*dom.prod, *cod.prod, f, g);
}

// The pushout-corner map K.Y u_{K.X} L.X -> L.Y of two monos.
struct LeibnizResult {
    StratSet corner_dom;
    StratSet target;
    StratMap corner;
    StratColimit pushout;
    TensorResult LN;
};

inline LeibnizResult leibniz(const StratMap& f, const StratMap& g,
                             Tensor kind) {
    const StratSet &K = f.dom, &L = f.cod, &M = g.dom, &N = g.cod;
    TensorResult KN = tensor_of(kind, K, N);
    TensorResult LM = tensor_of(kind, L, M);
    TensorResult KM = tensor_of(kind, K, M);
    TensorResult LN = tensor_of(kind, L, N);
    SMap Kg = tensor_map(kind, KM, KN, identity_map(*K.cx), g.f);
    SMap fM = tensor_map(kind, KM, LM, f.f, identity_map(*M.cx));
    SMap fN = tensor_map(kind, KN, LN, f.f, identity_map(*N.cx));
    SMap Lg = tensor_map(kind, LM, LN, identity_map(*L.cx), g.f);
    LeibnizResult R;
    R.LN = LN;
    R.target = LN.result;
    R.pushout = strat_colimit({&KN.result, &LM.result, &KM.result},
                              {{2, 0, Kg}, {2, 1, fM}});
    R.corner_dom = R.pushout.result;
    SMap leg2 = compose(fN, Kg);
    SMap h = induce_from_colimit(*R.pushout.engine, {&fN, &Lg, &leg2},
                                 *LN.result.cx);
    std::string why;
    auto sm = check_strat_map(h, R.corner_dom, R.target, &why);
    if (!sm) throw std::logic_error("leibniz corner invalid: " + why);
    R.corner = *sm;
    return R;
}

// ---------------------------------------------- complex from a table

// Extract generators from a full simplex table given by operator actions,
// the same way colimits are normalized.
struct TableSpec {
    int D = -1;
    std::vector<int> counts;
    std::function<int(int, int, const Operator&)> act; // (dim, idx, u)
    std::function<bool(int, int)> thin;
};

struct TableComplex {
    StratSet result;
    std::vector<std::vector<SimplexExpr>> expr; // per dim, per element
};

inline TableComplex complex_from_table(const TableSpec& T) {
    TableComplex out;
    Complex C;
    Marking t;
    out.expr.assign(static_cast<size_t>(T.D + 1), {});
    for (int d = 0; d <= T.D; ++d) {
        auto& ex = out.expr[static_cast<size_t>(d)];
        ex.resize(static_cast<size_t>(T.counts[static_cast<size_t>(d)]));
        for (int i = 0; i < T.counts[static_cast<size_t>(d)]; ++i) {
            bool deg = false;
            for (int j = 0; j < d && !deg; ++j) {
                int down = T.act(d, i, Operator::face(d, j));
                int back = T.act(d - 1, down, Operator::degeneracy(d - 1, j));
                if (back == i) {
                    const SimplexExpr& below =
                        out.expr[static_cast<size_t>(d - 1)]
                                [static_cast<size_t>(down)];
                    ex[static_cast<size_t>(i)] = SimplexExpr{
                        compose(below.eta, Operator::degeneracy(d - 1, j)),
                        below.cell};
                    deg = true;
                }
            }
            if (deg) continue;
            std::vector<SimplexExpr> faces;
            if (d > 0)
                for (int j = 0; j <= d; ++j)
                    faces.push_back(out.expr[static_cast<size_t>(d - 1)]
                                            [static_cast<size_t>(T.act(
                                                d, i, Operator::face(d, j)))]);
            CellId c = C.add_cell(d, std::move(faces));
            if (d >= 1 && T.thin && T.thin(d, i)) t.insert(c);
            ex[static_cast<size_t>(i)] = SimplexExpr{Operator::identity(d), c};
        }
    }
    out.result = make_strat(std::move(C), std::move(t));
    return out;
}

// ------------------------------------------------- mapping objects

enum class HomKind { Cartesian, GrayLeft, GrayRight, SlashJoin };

// m-simplices are stratified maps Delta[m] . K -> X, thin when the map
// still preserves markings from Delta[m]_t . K; enumeration-based and
// truncated at `bound`.
struct MappingObject {
    StratSet result;
    std::vector<std::vector<SMap>> elements; // per dim
    TableComplex table;
};

inline MappingObject mapping_object(const StratSet& K, const StratSet& X,
                                    int bound, HomKind kind) {
    // the cosimplicial object m -> Delta[m] . K with both markings
    std::vector<TensorResult> O, Ot;
    for (int m = 0; m <= bound; ++m) {
        StratSet dm = delta(m);
        StratSet dmt = delta_t(m);
        switch (kind) {
            case HomKind::Cartesian:
            case HomKind::GrayRight:
            case HomKind::SlashJoin:
                O.push_back(tensor_of(kind == HomKind::Cartesian ? Tensor::Product
                                      : kind == HomKind::GrayRight
                                          ? Tensor::Gray
                                          : Tensor::Join,
                                      dm, K));
                Ot.push_back(tensor_of(kind == HomKind::Cartesian
                                           ? Tensor::Product
                                       : kind == HomKind::GrayRight
                                           ? Tensor::Gray
                                           : Tensor::Join,
                                       dmt, K));
                break;
            case HomKind::GrayLeft:
                O.push_back(tensor_of(Tensor::Gray, K, dm));
                Ot.push_back(tensor_of(Tensor::Gray, K, dmt));
                break;
        }
    }
    auto structure_map = [&](const Operator& u) {
        // O(u) : Delta[m'] . K -> Delta[m] . K
        int mp = u.dom_rank(), mm = u.cod_rank();
        SMap du = delta_operator_map(mp, mm, u);
        Tensor tk = kind == HomKind::Cartesian ? Tensor::Product
                    : kind == HomKind::SlashJoin ? Tensor::Join
                                                 : Tensor::Gray;
        if (kind == HomKind::GrayLeft)
            return tensor_map(tk, O[static_cast<size_t>(mp)],
                              O[static_cast<size_t>(mm)],
                              identity_map(*K.cx), du);
        return tensor_map(tk, O[static_cast<size_t>(mp)],
                          O[static_cast<size_t>(mm)], du,
                          identity_map(*K.cx));
    };
    MappingObject MO;
    MO.elements.resize(static_cast<size_t>(bound) + 1);
    std::vector<std::map<std::vector<SimplexExpr>, int>> index(
        static_cast<size_t>(bound) + 1);
    for (int m = 0; m <= bound; ++m) {
        const StratSet& dom = O[static_cast<size_t>(m)].result;
        MapSearch s{*dom.cx, *X.cx};
        s.admit = [&](CellId c, const SimplexExpr& cand) {
            return !dom.t.count(c) || X.thin(cand);
        };
        s.run([&](const SMap& f) {
            index[static_cast<size_t>(m)][f.assign] =
                static_cast<int>(MO.elements[static_cast<size_t>(m)].size());
            MO.elements[static_cast<size_t>(m)].push_back(f);
            return true;
        });
    }
    TableSpec T;
    T.D = bound;
    for (int m = 0; m <= bound; ++m)
        T.counts.push_back(
            static_cast<int>(MO.elements[static_cast<size_t>(m)].size()));
    T.act = [&, structure_map](int d, int i, const Operator& u) {
        const SMap& h = MO.elements[static_cast<size_t>(d)]
                                   [static_cast<size_t>(i)];
        SMap hu = compose(h, structure_map(u));
        return index[static_cast<size_t>(u.dom_rank())].at(hu.assign);
    };
    T.thin = [&](int d, int i) {
        const SMap& h =
            MO.elements[static_cast<size_t>(d)][static_cast<size_t>(i)];
        for (CellId c : Ot[static_cast<size_t>(d)].result.t)
            if (!X.thin(h.assign[static_cast<size_t>(c)])) return false;
        return true;
    };
    MO.table = complex_from_table(T);
    MO.result = MO.table.result;
    return MO;
}

} // namespace complicial
