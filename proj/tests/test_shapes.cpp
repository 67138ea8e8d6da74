#include <catch_amalgamated.hpp>

#include <complicial/constructions.hpp>
#include <complicial/shapes.hpp>

using namespace complicial;

TEST_CASE("catalog shapes carry the stated markings") {
    SECTION("delta_k: only cells containing the full window") {
        StratSet X = delta_k(2, 1); // = Delta[2]_t
        REQUIRE(X.t.size() == 1);
        REQUIRE(X.cx->dim(*X.t.begin()) == 2);
        REQUIRE(same_marked(X, X));
        StratSet T = delta_t(2);
        REQUIRE(X.t == T.t);
    }
    SECTION("delta3_eq marks the top cell and the two long edges") {
        StratSet X = delta3_eq();
        REQUIRE(X.t.size() == 3);
        REQUIRE(X.t.count(delta_cell(*X.cx, {0, 2})) == 1);
        REQUIRE(X.t.count(delta_cell(*X.cx, {1, 3})) == 1);
        REQUIRE(X.t.count(delta_cell(*X.cx, {0, 1, 2, 3})) == 1);
    }
    SECTION("sharp(2) marks 3 edges and 1 triangle") {
        StratSet X = sharp(2);
        REQUIRE(X.t.size() == 4);
    }
    SECTION("primed shapes grow by the stated faces") {
        StratSet a = delta_k(2, 1), b = delta_k_prime(2, 1),
                 c = delta_k_dprime(2, 1);
        REQUIRE(a.t.size() == 1);
        REQUIRE(b.t.size() == 3);
        REQUIRE(c.t.size() == 4);
        // dprime of Delta^1[2] is the fully marked triangle
        REQUIRE(c.t == sharp(2).t);
    }
    SECTION("horns") {
        HornShape h = horn(2, 1);
        REQUIRE(h.horn.cx->count(0) == 3);
        REQUIRE(h.horn.cx->count(1) == 2);
        REQUIRE(h.horn.cx->count(2) == 0);
        REQUIRE(h.horn.t.empty());
        REQUIRE(valid_smap(h.incl.f));
        HornShape h3 = horn(3, 1);
        REQUIRE(h3.horn.cx->count(2) == 3);
        REQUIRE(h3.horn.t.size() == 1); // the face [0,1,2]
    }
    SECTION("bistratified shapes") {
        BistratSet c = delta_c(2);
        REQUIRE(c.t.empty());
        REQUIRE(c.c.size() == 1);
        BistratSet s = cart_thin(3, 1);
        REQUIRE(s.t.size() == 2);          // [0,1,2] and top
        REQUIRE(s.c.size() == 2 + 2);      // plus faces d0, d2
        BistratSet s2 = cart_thin2(3, 1);
        REQUIRE(s2.c.size() == s.c.size() + 1);
        for (CellId x : s2.t) REQUIRE(s2.c.count(x) == 1);
    }
}

TEST_CASE("regular and entire monomorphism predicates") {
    HornShape h = horn(2, 1);
    REQUIRE(is_regular(h.incl));
    REQUIRE_FALSE(is_entire(h.incl));

    StratSet a = delta_k_prime(2, 1), b = delta_k_dprime(2, 1);
    StratMap i{a, b, identity_map(*a.cx)};
    i.f.cod = b.cx.get();
    REQUIRE(is_entire(i));
    REQUIRE_FALSE(is_regular(i));

    StratSet p = delta(1), q = delta_t(1);
    StratMap j{p, q, identity_map(*p.cx)};
    j.f.cod = q.cx.get();
    REQUIRE(is_entire(j));

    // check_strat_map catches a marking violation
    SMap id = identity_map(*p.cx);
    std::string why;
    REQUIRE_FALSE(check_strat_map(id, q, p, &why).has_value());
    REQUIRE(!why.empty());
    REQUIRE(check_strat_map(id, p, q).has_value());
}

TEST_CASE("degeneracies are thin") {
    StratSet X = delta(1);
    SimplexExpr deg{Operator::degeneracy(0, 0), 0};
    REQUIRE(X.thin(deg));
    REQUIRE_FALSE(X.thin(X.cx->nondeg(2)));
    REQUIRE_FALSE(X.thin(X.cx->nondeg(0))); // vertices never thin
}

TEST_CASE("oslash over the point degenerates to the plain shapes") {
    StratSet pt = delta(0);
    OslashShape o = oslash(2, 1, pt);
    // Delta^1[2] (/) Delta[0] = Delta^1[2]
    StratSet ref = delta_k(2, 1);
    auto iso = strat_find_iso(o.whole, ref);
    REQUIRE(iso.has_value());
    OslashShape o0 = oslash(2, 0, pt);
    REQUIRE(strat_find_iso(o0.whole, delta_k(2, 0)).has_value());
    OslashShape a2 = oslash(2, 2, pt, true);
    REQUIRE(strat_find_iso(a2.whole, delta_k(2, 2)).has_value());
}

static void check_trichotomy_partition(int n, int k, const StratSet& L,
                                       const std::set<CellId>& K_cells) {
    const Complex& D = *delta_complex(n);
    auto P = product(D, *L.cx);
    auto in_K = [&](CellId c) { return K_cells.count(c) > 0; };
    int classified = 0;
    std::map<CellId, int> hit;
    for (CellId w = 0; w < P.complex->size(); ++w) {
        TriResult r = trichotomy_classify(D, *L.cx, P, w, n, k, in_K);
        if (r.kind == TriKind::InDomain) continue;
        ++classified;
        // the witness reconstructs w exactly
        REQUIRE(trichotomy_reconstruct(D, *L.cx, P, r, k) == w);
        hit[w] += 1;
    }
    // oracle: generate all w^p and bar(w)^p from scratch and compare
    std::set<CellId> generated;
    for (CellId wc = 0; wc < P.complex->size(); ++wc) {
        const auto& [vx, y] = P.pair_of[static_cast<size_t>(wc)];
        if (in_K(y.cell)) continue;
        std::vector<int> v = D.vertices(vx);
        bool has_k = std::count(v.begin(), v.end(), k) > 0;
        bool has_k1 = std::count(v.begin(), v.end(), k + 1) > 0;
        if (!has_k || has_k1) continue;
        int a = -2, b = -1;
        for (int i = 0; i < static_cast<int>(v.size()); ++i)
            if (v[static_cast<size_t>(i)] == k) {
                if (a == -2) a = i - 1;
                b = i;
            }
        for (int p = a; p <= b; ++p) {
            // w^p (p = b is w itself)
            std::vector<int> vp = raise_run(v, k, p);
            SimplexExpr vpx =
                D.apply(D.nondeg(static_cast<CellId>(D.size()) - 1),
                        Operator(vp, n));
            SimplexExpr e = P.expr(D, *L.cx, vpx, y);
            if (e.nondegenerate()) {
                // only the ones outside the domain are classified
                std::set<int> used(vp.begin(), vp.end());
                bool horn_part = false;
                for (int j = 0; j <= n; ++j)
                    if (j != k && !used.count(j)) horn_part = true;
                if (!horn_part) generated.insert(e.cell);
            }
            if (p > a) {
                std::vector<int> bv = bar_run(v, k, p);
                SimplexExpr bx = L.cx->apply(
                    y, Operator::degeneracy(static_cast<int>(v.size()) - 1, p));
                SimplexExpr be = P.expr(D, *L.cx, bv.size() ? D.apply(
                    D.nondeg(static_cast<CellId>(D.size()) - 1),
                    Operator(bv, n)) : SimplexExpr{}, bx);
                REQUIRE(be.nondegenerate());
                std::set<int> used(bv.begin(), bv.end());
                bool horn_part = false;
                for (int j = 0; j <= n; ++j)
                    if (j != k && !used.count(j)) horn_part = true;
                if (!horn_part) generated.insert(be.cell);
            }
        }
    }
    for (auto [w, cnt] : hit) REQUIRE(cnt == 1);
    REQUIRE(static_cast<int>(generated.size()) == classified);
    for (CellId w : generated) REQUIRE(hit.count(w) == 1);
}

TEST_CASE("trichotomy is a partition (exhaustive small instances)") {
    // L = Delta[1], K = empty
    check_trichotomy_partition(2, 0, delta(1), {});
    check_trichotomy_partition(2, 1, delta(1), {});
    check_trichotomy_partition(3, 1, delta(1), {});
    check_trichotomy_partition(2, 1, delta(0), {});
    // K = {0} inside L = Delta[1]
    check_trichotomy_partition(2, 1, delta(1), {0});
}

TEST_CASE("catalog inclusions: horns regular, truncations entire") {
    for (int n = 1; n <= 4; ++n) {
        for (int k = 0; k <= n; ++k) {
            HornShape h = horn(n, k);
            REQUIRE(is_regular(h.incl));
        }
        StratSet X = delta_k_prime(n, std::min(1, n));
        StratSet T = truncate(X, n);
        StratMap i{X, T, identity_map(*X.cx)};
        i.f.cod = T.cx.get();
        REQUIRE(is_entire(i));
    }
}
