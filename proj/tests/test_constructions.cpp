#include <catch_amalgamated.hpp>

#include <complicial/constructions.hpp>
#include <complicial/saturation.hpp>

using namespace complicial;

TEST_CASE("join basics") {
    StratSet D0 = delta(0), D1 = delta(1), D2 = delta(2);
    SECTION("Delta[0] * Delta[1] is Delta[2]") {
        JoinResult J = join(D0, D1);
        J.result.cx->validate();
        REQUIRE(strat_find_iso(J.result, D2).has_value());
    }
    SECTION("marking: Delta[1]_t * Delta[0]") {
        JoinResult J = join(delta_t(1), D0);
        REQUIRE(J.result.t.size() == 2); // the edge 01 and the triangle
        // the marked edge is the (edge, empty) join cell
        CellId e = J.index.at({2, -1});
        REQUIRE(J.result.t.count(e) == 1);
        CellId tri = J.index.at({2, 0});
        REQUIRE(J.result.t.count(tri) == 1);
    }
    SECTION("empty unit") {
        StratSet E{std::make_shared<Complex>(), {}};
        JoinResult J = join(E, D1);
        REQUIRE(strat_find_iso(J.result, D1).has_value());
        JoinResult J2 = join(D1, E);
        REQUIRE(strat_find_iso(J2.result, D1).has_value());
    }
    SECTION("join associativity up to iso") {
        std::vector<StratSet> items{delta(0), delta(1), delta_t(1)};
        for (const auto& X : items)
            for (const auto& Y : items)
                for (const auto& Z : items) {
                    JoinResult XY = join(X, Y);
                    JoinResult L = join(XY.result, Z);
                    JoinResult YZ = join(Y, Z);
                    JoinResult R = join(X, YZ.result);
                    REQUIRE(strat_find_iso(L.result, R.result).has_value());
                }
    }
}

TEST_CASE("gray tensor marking") {
    StratSet D1 = delta(1);
    SECTION("Delta[1] (x) Delta[1]: exactly one thin triangle") {
        GrayResult G = gray(D1, D1);
        REQUIRE(G.result.cx->count(2) == 2);
        int thin = 0;
        CellId thin_cell = -1;
        for (CellId c : G.result.cx->cells(2))
            if (G.result.t.count(c)) {
                ++thin;
                thin_cell = c;
            }
        REQUIRE(thin == 1);
        // no edge is thin
        for (CellId c : G.result.cx->cells(1))
            REQUIRE(G.result.t.count(c) == 0);
        // the thin triangle is the (s0 x, s1 y) shuffle
        const auto& [a, b] = G.prod->pair_of[static_cast<size_t>(thin_cell)];
        REQUIRE(a.eta == Operator::degeneracy(1, 0));
        REQUIRE(b.eta == Operator::degeneracy(1, 1));
    }
    SECTION("unit") {
        GrayResult G = gray(delta(0), delta_t(2));
        REQUIRE(strat_find_iso(G.result, delta_t(2)).has_value());
    }
    SECTION("sharp (x) Y has the product marking") {
        StratSet X = sharp(1), Y = delta_t(2);
        GrayResult G = gray(X, Y);
        StratProduct P = strat_product(X, Y);
        REQUIRE(G.result.t == P.result.t);
        GrayResult G2 = gray(sharp(2), delta_t(1));
        StratProduct P2 = strat_product(sharp(2), delta_t(1));
        REQUIRE(G2.result.t == P2.result.t);
    }
    SECTION("gray associativity up to iso on small marked factors") {
        std::vector<StratSet> items{delta(0), delta(1), delta_t(1)};
        for (const auto& X : items)
            for (const auto& Y : items)
                for (const auto& Z : items) {
                    GrayResult L = gray(gray(X, Y).result, Z);
                    GrayResult R = gray(X, gray(Y, Z).result);
                    REQUIRE(strat_find_iso(L.result, R.result).has_value());
                }
    }
}

TEST_CASE("suspension") {
    SECTION("of the empty set: two points") {
        StratSet E{std::make_shared<Complex>(), {}};
        SuspResult S = suspension(E);
        REQUIRE(S.result.cx->count(0) == 2);
        REQUIRE(S.result.cx->dim_bound() == 0);
    }
    SECTION("of the point: Delta[1]") {
        SuspResult S = suspension(delta(0));
        REQUIRE(strat_find_iso(S.result, delta(1)).has_value());
        REQUIRE(S.bottom != S.top);
    }
    SECTION("of Delta[1]: 2 vertices, 3 edges, 2 triangles, 1 thin") {
        SuspResult S = suspension(delta(1));
        S.result.cx->validate();
        REQUIRE(S.result.cx->count(0) == 2);
        REQUIRE(S.result.cx->count(1) == 3);
        REQUIRE(S.result.cx->count(2) == 2);
        REQUIRE(S.result.t.size() == 1);
        REQUIRE(S.result.cx->dim(*S.result.t.begin()) == 2);
    }
    SECTION("circ suspension of the point is also Delta[1]") {
        SuspResult S = suspension(delta(0), true);
        REQUIRE(strat_find_iso(S.result, delta(1)).has_value());
    }
    SECTION("suspension functoriality") {
        StratSet D0 = delta(0), D1 = delta(1);
        SuspResult S0 = suspension(D0), S1 = suspension(D1);
        SMap v0{D0.cx.get(), D1.cx.get(), {D1.cx->nondeg(0)}};
        StratMap Sf = susp_map(S0, S1, D0, D1, v0);
        REQUIRE(valid_smap(Sf.f));
        // base points go to base points
        REQUIRE(Sf.f.assign[static_cast<size_t>(S0.bottom)].cell == S1.bottom);
        REQUIRE(Sf.f.assign[static_cast<size_t>(S0.top)].cell == S1.top);
    }
}

TEST_CASE("co-join") {
    StratSet D0 = delta(0), D1 = delta(1);
    SECTION("Delta[0] *co Delta[0] = Delta[1]") {
        CojoinResult R = cojoin(D0, D0);
        REQUIRE(strat_find_iso(R.result, delta(1)).has_value());
    }
    SECTION("unit laws with the empty set") {
        StratSet E{std::make_shared<Complex>(), {}};
        CojoinResult R = cojoin(E, D1);
        REQUIRE(strat_find_iso(R.result, D1).has_value());
        CojoinResult R2 = cojoin(D1, E);
        REQUIRE(strat_find_iso(R2.result, D1).has_value());
    }
    SECTION("K = Delta[1] *co Delta[0]: the comparison square") {
        CojoinResult K = cojoin(D1, D0);
        K.result.cx->validate();
        REQUIRE(K.result.cx->count(0) == 3);
        REQUIRE(K.result.cx->count(1) == 4);
        REQUIRE(K.result.cx->count(2) == 2);
        REQUIRE(K.result.t.size() == 1);
        // the thin triangle has three distinct vertices
        CellId tc = *K.result.t.begin();
        auto vs = K.result.cx->cell_vertices(tc);
        std::set<int> distinct(vs.begin(), vs.end());
        REQUIRE(distinct.size() == 3);
        // L is the mirror
        CojoinResult L = cojoin(D0, D1);
        REQUIRE(L.result.cx->count(1) == 4);
        REQUIRE(L.result.t.size() == 1);
    }
}

TEST_CASE("diamond and gamma") {
    SECTION("gamma is an iso on Delta[0] <> Delta[0]") {
        DiamondResult D = diamond(delta(0), delta(0));
        JoinResult J = join(delta(0), delta(0));
        StratMap g = gamma(D, J);
        REQUIRE(strat_find_iso(D.result, delta(1)).has_value());
        REQUIRE(is_mono(g.f));
    }
    SECTION("gamma o s = id and the vertex formula, n,m <= 2") {
        for (int n = 0; n <= 2; ++n)
            for (int m = 0; m <= 2; ++m) {
                StratSet X = delta(n), Y = delta(m);
                DiamondResult D = diamond(X, Y);
                JoinResult J = join(X, Y);
                StratMap g = gamma(D, J);
                StratMap s = gamma_section(n, m, D, J);
                SMap gs = compose(g.f, s.f);
                REQUIRE(gs == identity_map(*J.result.cx));
                // s(gamma(k,eps,l)) = (k + eps(n-k), eps, eps l) on vertices
                SMap sg = compose(s.f, g.f);
                const Cylinder& C = D.cyl;
                const Complex& I = *delta_complex(1);
                for (int k = 0; k <= n; ++k)
                    for (int eps = 0; eps <= 1; ++eps)
                        for (int l = 0; l <= m; ++l) {
                            SimplexExpr a = C.p1->expr(
                                *X.cx, I, X.cx->nondeg(k), I.nondeg(eps));
                            SimplexExpr v = C.p2->expr(*C.p1->complex, *Y.cx,
                                                       a, Y.cx->nondeg(l));
                            CellId dv = D.col.engine->image(0, v).cell;
                            SimplexExpr img =
                                sg.assign[static_cast<size_t>(dv)];
                            int kk = k + eps * (n - k), ll = eps * l;
                            SimplexExpr a2 = C.p1->expr(
                                *X.cx, I, X.cx->nondeg(kk), I.nondeg(eps));
                            SimplexExpr v2 = C.p2->expr(*C.p1->complex, *Y.cx,
                                                        a2, Y.cx->nondeg(ll));
                            REQUIRE(img ==
                                    D.col.engine->image(0, v2));
                        }
            }
    }
}

TEST_CASE("wedge") {
    SECTION("X = Delta[0]: the wedge is Delta[2]_t") {
        WedgeResult W = wedge(delta(0), true, delta(1));
        REQUIRE(strat_find_iso(W.result, delta_t(2)).has_value());
        REQUIRE(valid_smap(W.whisker.f));
        // whisker hits the long edge
        REQUIRE(W.whisker.f.assign.size() == 3);
    }
    SECTION("whisker is a valid stratified map for X = Delta[1]") {
        WedgeResult W = wedge(delta(1), true, delta(1));
        std::string why;
        REQUIRE(check_strat_map(W.whisker.f, W.susp.result, W.result, &why)
                    .has_value());
        WedgeResult W2 = wedge(delta(1), false, delta(1));
        REQUIRE(check_strat_map(W2.whisker.f, W2.susp.result, W2.result, &why)
                    .has_value());
    }
    SECTION("X = empty: two points plus a whisker edge") {
        StratSet E{std::make_shared<Complex>(), {}};
        WedgeResult W = wedge(E, true, delta(1));
        REQUIRE(W.result.cx->count(0) == 3);
        REQUIRE(W.result.cx->count(1) == 1);
        // the free edge starts at the suspension top
        CellId e = W.result.cx->cells(1)[0];
        REQUIRE(W.result.cx->face(e, 1).cell ==
                W.col.cocone[3].f.assign[static_cast<size_t>(W.susp.top)].cell);
    }
}

TEST_CASE("truncation") {
    SECTION("tau_n Delta[n] = Delta[n]_t") {
        for (int n = 1; n <= 4; ++n) {
            StratSet T = truncate(delta(n), n);
            REQUIRE(T.t == delta_t(n).t);
        }
    }
    SECTION("tau_1 Delta[2] = sharp") {
        REQUIRE(truncate(delta(2), 1).t == sharp(2).t);
    }
    SECTION("tau_n tau_m = tau_min on Delta[3]") {
        for (int n = 1; n <= 4; ++n)
            for (int m = 1; m <= 4; ++m) {
                StratSet a = truncate(truncate(delta(3), m), n);
                StratSet b = truncate(delta(3), std::min(n, m));
                REQUIRE(a.t == b.t);
            }
    }
}

TEST_CASE("leibniz corner maps") {
    SECTION("boundary x boundary of Delta[1]") {
        BoundaryShape B = boundary_incl(1);
        LeibnizResult L = leibniz(B.incl, B.incl, Tensor::Product);
        REQUIRE(L.corner_dom.cx->count(0) == 4);
        REQUIRE(L.corner_dom.cx->count(1) == 4);
        REQUIRE(L.corner_dom.cx->count(2) == 0);
        REQUIRE(L.target.cx->count(1) == 5);
        REQUIRE(L.target.cx->count(2) == 2);
        REQUIRE(is_mono(L.corner.f));
    }
    SECTION("horn (x) boundary: the prism corner") {
        HornShape H = horn(2, 1);
        BoundaryShape B = boundary_incl(1);
        LeibnizResult L = leibniz(H.incl, B.incl, Tensor::Gray);
        // target is Delta^1[2] (x) Delta[1]; the corner misses exactly the
        // cells using both the filler and the interior of the interval
        REQUIRE(L.target.cx->count(3) == 3);
        REQUIRE(L.corner_dom.cx->count(3) == 0);
        REQUIRE(L.corner_dom.cx->count(2) == 6); // 8 prism triangles - 2
        REQUIRE(is_mono(L.corner.f));
    }
}

TEST_CASE("mapping objects") {
    SECTION("hom(pt, X) recovers X up to the bound") {
        StratSet X = delta_t(2);
        MappingObject M = mapping_object(delta(0), X, 2, HomKind::Cartesian);
        REQUIRE(strat_find_iso(M.result, X).has_value());
    }
    SECTION("vertex count = number of maps") {
        MappingObject M =
            mapping_object(delta(1), delta(2), 1, HomKind::Cartesian);
        REQUIRE(M.result.cx->count(0) == 6);
    }
}

TEST_CASE("closure engine") {
    ClosureConfig cfg;
    cfg.search_dim = 3;
    SECTION("fixpoint on an already closed set") {
        StratSet X = delta_t(1);
        StratSet Y = saturate_marked(X, cfg);
        REQUIRE(Y.t == X.t);
        REQUIRE(is_saturated(X, cfg));
    }
    SECTION("thinness closure: prime becomes double prime") {
        StratSet X = delta_k_prime(2, 1);
        StratSet Y = saturate_marked(X, cfg);
        REQUIRE(Y.t == delta_k_dprime(2, 1).t);
        REQUIRE_FALSE(is_saturated(X, cfg));
        auto v = closure_violations(X, cfg);
        REQUIRE(v.size() == 1);
        REQUIRE(v[0].rule == "thinness");
    }
    SECTION("saturation closure: eq becomes sharp") {
        ClosureConfig c4;
        c4.search_dim = 4;
        StratSet X = delta3_eq();
        StratSet Y = saturate_marked(X, c4);
        REQUIRE(Y.t == sharp(3).t);
    }
    SECTION("extensive, monotone, idempotent") {
        StratSet A = delta_k_prime(3, 1);
        StratSet B = A;
        B.t.insert(*delta_t(3).t.begin());
        StratSet cA = saturate_marked(A, cfg), cB = saturate_marked(B, cfg);
        for (CellId c : A.t) REQUIRE(cA.t.count(c) == 1);
        for (CellId c : cA.t) REQUIRE(cB.t.count(c) == 1);
        REQUIRE(saturate_marked(cA, cfg).t == cA.t);
    }
    SECTION("cartesian closure: * becomes **") {
        BistratSet X = cart_thin(2, 1);
        BistratSet Y = saturate_bimarked(X, cfg);
        REQUIRE(Y.c == cart_thin2(2, 1).c);
        REQUIRE(Y.t == cart_thin2(2, 1).t);
    }
}

TEST_CASE("suspension agrees with a from-scratch colimit") {
    // independent assembly of the defining pushout, compared by iso
    for (int pick = 0; pick <= 1; ++pick) {
        StratSet X = pick == 0 ? delta(1) : delta_t(1);
        StratSet I = delta(1);
        BoundaryShape B = boundary_incl(1);
        GrayResult XI = gray(X, I);
        GrayResult XB = gray(X, B.boundary);
        SMap bi = product_map(*XB.prod, *XI.prod, identity_map(*X.cx),
                              B.incl.f);
        Complex two;
        two.add_vertex();
        two.add_vertex();
        StratSet Pts = make_strat(std::move(two));
        SMap fold{XB.result.cx.get(), Pts.cx.get(), {}};
        for (CellId c = 0; c < XB.result.cx->size(); ++c) {
            SimplexExpr e = XB.prod->proj2.assign[static_cast<size_t>(c)];
            CellId v = B.boundary.cx->vertices(e)[0];
            int d = XB.result.cx->dim(c);
            std::vector<int> img(static_cast<size_t>(d) + 1, 0);
            fold.assign.push_back(
                Pts.cx->apply(Pts.cx->nondeg(v), Operator(std::move(img), 0)));
        }
        StratColimit manual =
            strat_colimit({&XI.result, &XB.result, &Pts},
                          {{1, 0, bi}, {1, 2, fold}});
        SuspResult S = suspension(X);
        REQUIRE(strat_find_iso(manual.result, S.result).has_value());
    }
}

TEST_CASE("gamma is natural on generators") {
    StratSet Y = delta(1);
    StratSet X1 = delta(1), X2 = delta(2);
    DiamondResult D1 = diamond(X1, Y), D2 = diamond(X2, Y);
    JoinResult J1 = join(X1, Y), J2 = join(X2, Y);
    StratMap g1 = gamma(D1, J1), g2 = gamma(D2, J2);
    for (const auto& f : enumerate_maps(*X1.cx, *X2.cx)) {
        SMap fd = diamond_map(D1, D2, f, identity_map(*Y.cx));
        SMap fj = join_map(J1, J2, f, identity_map(*Y.cx));
        REQUIRE(compose(g2.f, fd).assign == compose(fj, g1.f).assign);
    }
}

TEST_CASE("diamond unit laws with the empty set") {
    StratSet E{std::make_shared<Complex>(), {}};
    StratSet D1t = delta_t(1);
    REQUIRE(strat_find_iso(diamond(E, D1t).result, D1t).has_value());
    REQUIRE(strat_find_iso(diamond(D1t, E).result, D1t).has_value());
}

TEST_CASE("raising the search dimension never removes marks") {
    StratSet X = delta_k_prime(3, 1);
    for (int d = 3; d <= 4; ++d) {
        ClosureConfig lo, hi;
        lo.search_dim = d;
        hi.search_dim = d + 1;
        StratSet a = saturate_marked(X, lo), b = saturate_marked(X, hi);
        for (CellId c : a.t) REQUIRE(b.t.count(c) == 1);
    }
}

TEST_CASE("leibniz with empty legs") {
    StratSet E{std::make_shared<Complex>(), {}};
    StratSet P = delta(0);
    SMap e2p{E.cx.get(), P.cx.get(), {}};
    StratMap i{E, P, e2p};
    LeibnizResult L = leibniz(i, i, Tensor::Product);
    REQUIRE(L.corner_dom.cx->size() == 0);
    REQUIRE(L.target.cx->size() == 1);
}
