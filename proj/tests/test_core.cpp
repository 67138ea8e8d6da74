#include <catch_amalgamated.hpp>

#include <complicial/colimit.hpp>
#include <complicial/complex.hpp>
#include <complicial/operators.hpp>
#include <complicial/product.hpp>
#include <complicial/smap.hpp>

#include <random>

using namespace complicial;

TEST_CASE("operator composition and factorization basics") {
    auto s0 = Operator::degeneracy(1, 0); // [2] -> [1]
    auto d2 = Operator::face(2, 2);       // [1] -> [2]
    auto u = compose(s0, Operator::face(2, 2));
    REQUIRE(u.dom_rank() == 1);
    REQUIRE(u.cod_rank() == 1);

    auto id2 = Operator::identity(2);
    auto [p, i] = ez_factorize(id2);
    REQUIRE(p.is_identity());
    REQUIRE(i.is_identity());

    // s0 o d2 as [2] -> [2] with images (0,0,2)
    Operator w({0, 0, 2}, 2);
    auto f = ez_factorize(w);
    REQUIRE(f.surj.images() == std::vector<int>{0, 0, 1});
    REQUIRE(f.inj.images() == std::vector<int>{0, 2});
    REQUIRE(compose(f.inj, f.surj) == w);
}

TEST_CASE("EZ factorization is unique, exhaustively for ranks <= 5") {
    long checked = 0;
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n) {
            // oracle: brute force over all (surjection, injection) pairs
            std::vector<std::pair<Operator, Operator>> pairs;
            for (int k = 0; k <= std::min(m, n); ++k) {
                auto surjs = all_surjections(m, k);
                for (const auto& inj : all_monotone(k, n)) {
                    if (!inj.is_injective()) continue;
                    for (const auto& s : surjs) pairs.push_back({s, inj});
                }
            }
            for (const auto& u : all_monotone(m, n)) {
                int hits = 0;
                for (const auto& [s, i] : pairs)
                    if (compose(i, s) == u) ++hits;
                REQUIRE(hits == 1);
                auto f = ez_factorize(u);
                REQUIRE(f.surj.is_surjective());
                REQUIRE(f.inj.is_injective());
                REQUIRE(compose(f.inj, f.surj) == u);
                ++checked;
            }
        }
    REQUIRE(checked > 1000);
}

TEST_CASE("standard simplices validate and apply normalizes") {
    for (int n = 0; n <= 4; ++n) {
        Complex D = standard_simplex(n);
        D.validate();
        REQUIRE(D.count(0) == n + 1);
        REQUIRE(D.count(n) == 1);
    }
    Complex D2 = standard_simplex(2);
    CellId top = 6; // last cell
    REQUIRE(D2.dim(top) == 2);
    // apply(top, d0) is the stored 0-th face
    auto f0 = D2.apply(D2.nondeg(top), Operator::face(2, 0));
    REQUIRE(f0 == D2.face(top, 0));
    // vertex extraction of a degenerate edge: apply((s0,f), {1}) is f's target
    Complex D1 = standard_simplex(1);
    CellId e = 2;
    SimplexExpr deg{Operator::degeneracy(1, 0), e}; // s0 f, a 2-simplex
    auto v = D1.apply(deg, Operator({0}, 2));
    REQUIRE(v.cell == 0);
    auto v2 = D1.apply(deg, Operator({2}, 2));
    REQUIRE(v2.cell == 1);
    // counting: Delta[1] has 4 simplices in dimension 2
    REQUIRE(D1.simplices(2).size() == 4);
    REQUIRE(point_complex().simplices(3).size() == 1);
}

TEST_CASE("products: counts and shuffle oracle") {
    Complex D1 = standard_simplex(1);
    auto P = product(D1, D1);
    P.complex->validate();
    REQUIRE(P.complex->count(0) == 4);
    REQUIRE(P.complex->count(1) == 5);
    REQUIRE(P.complex->count(2) == 2);
    REQUIRE(P.complex->dim_bound() == 2);

    // oracle: nondegenerate top cells of Delta[p] x Delta[q] are (p,q)
    // shuffles: C(p+q, p)
    Complex D2 = standard_simplex(2);
    auto P2 = product(D2, D1);
    P2.complex->validate();
    REQUIRE(P2.complex->count(3) == 3); // C(3,1) = 3
    REQUIRE(valid_smap(P2.proj1));
    REQUIRE(valid_smap(P2.proj2));

    // unit
    auto PU = product(D2, point_complex());
    REQUIRE(find_iso(*PU.complex, D2).has_value());
}

TEST_CASE("product is associative and unital up to iso (small factors)") {
    Complex D1 = standard_simplex(1);
    Complex D2 = standard_simplex(2);
    const Complex* items[2] = {&D1, &D2};
    for (auto* X : items)
        for (auto* Y : items) {
            auto XY = product(*X, *Y);
            for (auto* Z : items) {
                auto L = product(*XY.complex, *Z);
                auto YZ = product(*Y, *Z);
                auto R = product(*X, *YZ.complex);
                REQUIRE(find_iso(*L.complex, *R.complex).has_value());
            }
        }
}

TEST_CASE("enumerate_maps counts") {
    Complex D0 = point_complex();
    Complex D1 = standard_simplex(1);
    Complex D2 = standard_simplex(2);
    REQUIRE(enumerate_maps(D0, D2).size() == 3);
    REQUIRE(enumerate_maps(D1, D1).size() == 3);
    REQUIRE(enumerate_maps(D2, D1).size() == 4);
    // oracle: maps Delta[m] -> Delta[n] = monotone maps [m] -> [n]
    REQUIRE(enumerate_maps(D2, D2).size() == all_monotone(2, 2).size());
}

TEST_CASE("map composition closure on small complexes") {
    Complex D1 = standard_simplex(1);
    Complex D0 = point_complex();
    auto fs = enumerate_maps(D0, D1);
    auto gs = enumerate_maps(D1, D1);
    for (const auto& f : fs)
        for (const auto& g : gs) {
            SMap h = compose(g, f);
            REQUIRE(valid_smap(h));
            bool found = false;
            for (const auto& k : fs)
                if (k.assign == h.assign) found = true;
            REQUIRE(found);
        }
}

TEST_CASE("colimits: pushouts and quotients") {
    Complex D0 = point_complex();
    Complex E; // empty
    SECTION("two points from a span over empty") {
        SMap l{&E, &D0, {}}, r{&E, &D0, {}};
        ColimitEngine eng({&E, &D0, &D0}, {{0, 1, l}, {0, 2, r}});
        REQUIRE(eng.result().count(0) == 2);
        REQUIRE(eng.result().dim_bound() == 0);
    }
    SECTION("circle: both endpoints of Delta[1] identified") {
        Complex D1 = standard_simplex(1);
        Complex Two;
        Two.add_vertex();
        Two.add_vertex();
        SMap incl{&Two, &D1, {D1.nondeg(0), D1.nondeg(1)}};
        SMap fold{&Two, &D0, {D0.nondeg(0), D0.nondeg(0)}};
        ColimitEngine eng({&Two, &D1, &D0}, {{0, 1, incl}, {0, 2, fold}});
        eng.result().validate();
        REQUIRE(eng.result().count(0) == 1);
        REQUIRE(eng.result().count(1) == 1);
        // the loop's faces are both the unique vertex
        REQUIRE(eng.result().face(1, 0).cell == 0);
        REQUIRE(eng.result().face(1, 1).cell == 0);
    }
    SECTION("identity diagram returns an isomorphic complex") {
        Complex D2 = standard_simplex(2);
        ColimitEngine eng({&D2}, {});
        REQUIRE(find_iso(eng.result(), D2).has_value());
        REQUIRE(valid_smap(eng.cocone(0)));
    }
    SECTION("collapsing an edge of Delta[1]xDelta[1] keeps two triangles") {
        // glue the square's {1} x Delta[1] side to a point
        Complex D1 = standard_simplex(1);
        auto Sq = product(D1, D1);
        Complex* SqC = Sq.complex.get();
        Complex Edge = standard_simplex(1);
        SimplexExpr c1{Operator::degeneracy(0, 0), 1}; // constant edge at 1
        SMap emb{&Edge, SqC, {}};
        emb.assign.push_back(Sq.expr(D1, D1, D1.nondeg(1), D1.nondeg(0)));
        emb.assign.push_back(Sq.expr(D1, D1, D1.nondeg(1), D1.nondeg(1)));
        emb.assign.push_back(Sq.expr(D1, D1, c1, D1.nondeg(2)));
        REQUIRE(valid_smap(emb));
        SMap fold{&Edge, &D0, {D0.nondeg(0), D0.nondeg(0),
                               SimplexExpr{Operator::degeneracy(0, 0), 0}}};
        REQUIRE(valid_smap(fold));
        ColimitEngine eng({&Edge, SqC, &D0}, {{0, 1, emb}, {0, 2, fold}});
        eng.result().validate();
        REQUIRE(eng.result().count(0) == 3);
        REQUIRE(eng.result().count(1) == 4);
        REQUIRE(eng.result().count(2) == 2);
    }
}

TEST_CASE("fuzz: random quotients validate and renormalize") {
    std::mt19937 rng(424242);
    std::vector<Complex> pool;
    pool.push_back(standard_simplex(2));
    pool.push_back(standard_simplex(3));
    {
        auto P = product(standard_simplex(1), standard_simplex(1));
        pool.push_back(*P.complex);
    }
    auto pick = [&](size_t n) {
        return std::uniform_int_distribution<size_t>(0, n - 1)(rng);
    };
    for (int trial = 0; trial < 40; ++trial) {
        const Complex& X = pool[pick(pool.size())];
        // glue a random pair of vertices through a two-point complex
        Complex two;
        two.add_vertex();
        two.add_vertex();
        CellId a = X.cells(0)[pick(X.cells(0).size())];
        CellId b = X.cells(0)[pick(X.cells(0).size())];
        SMap incl{&two, &X, {X.nondeg(a), X.nondeg(b)}};
        Complex pt;
        pt.add_vertex();
        SMap fold{&two, &pt, {pt.nondeg(0), pt.nondeg(0)}};
        ColimitEngine eng({&two, &X, &pt}, {{0, 1, incl}, {0, 2, fold}});
        eng.result().validate();
        REQUIRE(valid_smap(eng.cocone(1)));
        // quotient again: still fine, and vertex count drops by at most one
        const Complex& Q = eng.result();
        REQUIRE(Q.count(0) >= X.count(0) - 1);
        auto P2 = product(Q, pool[0]);
        P2.complex->validate();
        // a second identical run is bit-identical
        ColimitEngine eng2({&two, &X, &pt}, {{0, 1, incl}, {0, 2, fold}});
        REQUIRE(eng2.result().size() == Q.size());
        for (CellId c = 0; c < Q.size(); ++c) {
            REQUIRE(eng2.result().dim(c) == Q.dim(c));
            for (int i = 0; Q.dim(c) > 0 && i <= Q.dim(c); ++i)
                REQUIRE(eng2.result().face(c, i) == Q.face(c, i));
        }
    }
}
