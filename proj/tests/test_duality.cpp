#include <catch_amalgamated.hpp>

#include <complicial/duality.hpp>
#include <complicial/homotopy.hpp>
#include <complicial/interval_complexes.hpp>
#include <complicial/saturation.hpp>

using namespace complicial;

TEST_CASE("op duality") {
    SECTION("op of a simplex is isomorphic to it") {
        for (int n = 0; n <= 3; ++n) {
            StratSet X = delta(n);
            StratSet Y = op_dual(X);
            REQUIRE(strat_find_iso(X, Y).has_value());
        }
    }
    SECTION("op is a strict involution") {
        std::vector<StratSet> items{delta_k_prime(3, 1), sharp(2),
                                    suspension(delta(1)).result};
        for (const auto& X : items) {
            StratSet Y = op_dual(op_dual(X));
            REQUIRE(Y.cx->size() == X.cx->size());
            for (CellId c = 0; c < X.cx->size(); ++c) {
                REQUIRE(X.cx->dim(c) == Y.cx->dim(c));
                for (int i = 0; X.cx->dim(c) > 0 && i <= X.cx->dim(c); ++i)
                    REQUIRE(X.cx->face(c, i) == Y.cx->face(c, i));
            }
            REQUIRE(X.t == Y.t);
        }
    }
    SECTION("op swaps outer horns") {
        HornShape h0 = horn(2, 0), h2 = horn(2, 2), h1 = horn(2, 1);
        REQUIRE(strat_find_iso(op_dual(h0.horn), h2.horn).has_value());
        REQUIRE(strat_find_iso(op_dual(h1.horn), h1.horn).has_value());
        REQUIRE(strat_find_iso(op_dual(delta_k(2, 0)), delta_k(2, 2))
                    .has_value());
    }
}

TEST_CASE("cosimplicial co-join structure validates") {
    const CosimplicialCo& CO = cosimplicial_co(3);
    SECTION("low objects") {
        REQUIRE(strat_find_iso(CO.object(0), delta(0)).has_value());
        REQUIRE(strat_find_iso(CO.object(1), delta(1)).has_value());
        // Delta[2]_co is the co-join comparison K
        CojoinResult K = cojoin(delta(1), delta(0));
        REQUIRE(strat_find_iso(CO.object(2), K.result).has_value());
    }
    SECTION("cosimplicial identities") {
        for (int n = 0; n <= 2; ++n) {
            // d^j d^i = d^i d^{j-1} for i < j
            for (int i = 0; i <= n + 1; ++i)
                for (int j = i + 1; j <= n + 2; ++j) {
                    SMap lhs = compose(CO.coface(n + 1, j), CO.coface(n, i));
                    SMap rhs =
                        compose(CO.coface(n + 1, i), CO.coface(n, j - 1));
                    REQUIRE(lhs.assign == rhs.assign);
                }
        }
        for (int n = 1; n <= 2; ++n)
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j <= n + 1; ++j) {
                    // s^i o d^j : object(n) -> object(n)
                    SMap sd =
                        compose(CO.codegeneracy(n + 1, i), CO.coface(n, j));
                    if (j == i || j == i + 1) {
                        REQUIRE(sd.assign ==
                                identity_map(*CO.object(n).cx).assign);
                    } else if (j < i) {
                        SMap rhs = compose(CO.coface(n - 1, j),
                                           CO.codegeneracy(n, i - 1));
                        REQUIRE(sd.assign == rhs.assign);
                    } else {
                        SMap rhs = compose(CO.coface(n - 1, j - 1),
                                           CO.codegeneracy(n, i));
                        REQUIRE(sd.assign == rhs.assign);
                    }
                }
    }
    SECTION("cofaces and codegeneracies are stratified") {
        for (int n = 0; n <= 2; ++n)
            for (int i = 0; i <= n + 1; ++i) {
                std::string why;
                REQUIRE(check_strat_map(CO.coface(n, i), CO.object(n),
                                        CO.object(n + 1), &why)
                            .has_value());
            }
        for (int n1 = 1; n1 <= 3; ++n1)
            for (int i = 0; i < n1; ++i)
                REQUIRE(check_strat_map(CO.codegeneracy(n1, i), CO.object(n1),
                                        CO.object(n1 - 1))
                            .has_value());
    }
}

TEST_CASE("even and full duality") {
    SECTION("co of points and the interval") {
        REQUIRE(strat_find_iso(co_dual(delta(0), 3), delta(0)).has_value());
        REQUIRE(strat_find_iso(co_dual(delta(1), 3), delta(1)).has_value());
        REQUIRE(strat_find_iso(co_dual(delta_t(1), 3), delta_t(1)).has_value());
    }
    SECTION("co of Delta[2] is the co-join comparison K") {
        StratSet C2 = co_dual(delta(2), 3);
        CojoinResult K = cojoin(delta(1), delta(0));
        REQUIRE(strat_find_iso(C2, K.result).has_value());
    }
    SECTION("co of Delta[n]_t is the truncated co") {
        StratSet A = co_dual(delta_t(2), 3);
        StratSet B = truncate(co_dual(delta(2), 3), 2);
        REQUIRE(strat_find_iso(A, B).has_value());
    }
    SECTION("co commutes with coproducts") {
        // X u Y via a colimit with no arrows
        StratSet D1 = delta(1), D2 = delta(2);
        StratColimit sum = strat_colimit({&D1, &D2}, {});
        StratSet lhs = co_dual(sum.result, 3);
        StratSet c1 = co_dual(D1, 3), c2 = co_dual(D2, 3);
        StratColimit rhs = strat_colimit({&c1, &c2}, {});
        REQUIRE(strat_find_iso(lhs, rhs.result).has_value());
    }
    SECTION("co preserves vertex counts") {
        StratSet X = delta(2);
        REQUIRE(co_dual(X, 3).cx->count(0) == X.cx->count(0));
    }
    SECTION("full duality basics") {
        REQUIRE(strat_find_iso(full_dual(delta(0), 3), delta(0)).has_value());
        REQUIRE(strat_find_iso(full_dual(delta(1), 3), delta(1)).has_value());
        StratSet F = full_dual(delta(2), 3);
        StratSet C2 = co_dual(delta(2), 3);
        for (int d = 0; d <= 2; ++d)
            REQUIRE(F.cx->count(d) == C2.cx->count(d));
    }
}

TEST_CASE("co of globes: cell count reports only") {
    // the even dual of a globe is compared by counts, never asserted
    // isomorphic
    StratSet G2 = globe(2);
    StratSet C = co_dual(G2, 3);
    REQUIRE(C.cx->count(0) == G2.cx->count(0));
    // golden counts for the dual object
    std::vector<int> counts;
    for (int d = 0; d <= C.cx->dim_bound(); ++d) counts.push_back(C.cx->count(d));
    REQUIRE(counts.size() >= 2);
    REQUIRE(counts[0] == 2);
}
