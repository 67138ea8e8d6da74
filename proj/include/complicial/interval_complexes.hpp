#pragma once

#include "constructions.hpp"

namespace complicial {

// The comparison complexes for the interval-tensor formulas: the quotient
// C of Delta[3] x Delta[1] collapsing the two caps onto intervals, its
// marked subobjects A0..A4, B0, B1, and the co-join comparison object R
// with its subobjects K and L.

// Section of a product at a fixed second-factor vertex.
inline SMap const_section(const ProductResult& P, const Complex& A,
                          const Complex& B, CellId bvert) {
    SMap f{&A, P.complex.get(), {}};
    for (CellId c = 0; c < A.size(); ++c) {
        int d = A.dim(c);
        std::vector<int> img(static_cast<size_t>(d) + 1, 0);
        SimplexExpr cst{Operator(std::move(img), 0), bvert};
        f.assign.push_back(P.expr(A, B, A.nondeg(c), cst));
    }
    return f;
}

struct IntervalComplexes {
    StratSet C; // the ambient quotient (unmarked)
    std::shared_ptr<ProductResult> prism;
    std::shared_ptr<ColimitEngine> engine;

    // C-simplex from a list of prism vertices (i, j)
    SimplexExpr csimplex(const std::vector<std::pair<int, int>>& verts) const {
        const Complex& D3 = *delta_complex(3);
        const Complex& D1 = *delta_complex(1);
        std::vector<int> v3, v1;
        for (auto [i, j] : verts) {
            v3.push_back(i);
            v1.push_back(j);
        }
        SimplexExpr a = D3.apply(D3.nondeg(static_cast<CellId>(D3.size()) - 1),
                                 Operator(v3, 3));
        SimplexExpr b = D1.apply(D1.nondeg(2), Operator(v1, 1));
        return engine->image(0, prism->expr(D3, D1, a, b));
    }
    CellId ccell(const std::vector<std::pair<int, int>>& verts) const {
        SimplexExpr e = csimplex(verts);
        assert(e.nondegenerate());
        return e.cell;
    }
};

inline IntervalComplexes interval_complexes() {
    static std::optional<IntervalComplexes> cache;
    if (cache) return *cache;
    IntervalComplexes IC;
    const Complex& D3 = *delta_complex(3);
    const Complex& D1 = *delta_complex(1);
    IC.prism = std::make_shared<ProductResult>(product(D3, D1));
    StratSet Prism{IC.prism->complex, {}};
    StratSet Cap = delta(3);
    StratSet L = delta(1), R = delta(1);
    SMap cap0 = const_section(*IC.prism, D3, D1, 0);
    SMap cap1 = const_section(*IC.prism, D3, D1, 1);
    SMap fold0 = delta_operator_map(3, 1, Operator({0, 0, 0, 1}, 1));
    SMap fold1 = delta_operator_map(3, 1, Operator({0, 1, 1, 1}, 1));
    std::vector<const StratSet*> objs{&Prism, &Cap, &Cap, &L, &R};
    std::vector<StratArrow> arrows{
        {1, 0, cap0}, {1, 3, fold0}, {2, 0, cap1}, {2, 4, fold1}};
    StratColimit col = strat_colimit(objs, arrows);
    IC.C = col.result;
    IC.engine = col.engine;
    cache = IC;
    return IC;
}

// A marked subobject of C generated by the images of the prism simplices
// on a vertex block, marked at the listed prism simplices.
struct MarkedSub {
    StratSet sub;
    SMap incl;                      // sub -> C
    std::map<CellId, CellId> to_sub; // C cell -> sub cell
};

inline MarkedSub csub(const IntervalComplexes& IC,
                      const std::vector<int>& block3,
                      const std::vector<std::vector<std::pair<int, int>>>& marks,
                      bool mark_high_dims = false) {
    std::set<CellId> gens;
    const Complex& CC = *IC.C.cx;
    // every C cell whose preimage uses only the block vertices
    for (CellId c = 0; c < CC.size(); ++c) {
        auto [obj, s] = IC.engine->preimage(c);
        if (obj != 0) continue; // prism representative exists for all cells
        const auto& [a, b] = IC.prism->pair_of[static_cast<size_t>(s.cell)];
        auto v3 = delta_complex(3)->vertices(a);
        bool ok = true;
        for (int v : v3)
            if (std::find(block3.begin(), block3.end(), v) == block3.end())
                ok = false;
        if (ok) gens.insert(c);
    }
    Subcomplex S = subcomplex(CC, gens);
    Marking t;
    for (const auto& m : marks) {
        SimplexExpr e = IC.csimplex(m);
        assert(e.nondegenerate());
        t.insert(S.to_sub.at(e.cell));
    }
    if (mark_high_dims)
        for (const auto& [amb, sub] : S.to_sub)
            if (S.complex->dim(sub) >= 3) t.insert(sub);
    MarkedSub out{{S.complex, std::move(t)}, S.incl, S.to_sub};
    return out;
}

struct IntervalPieces {
    MarkedSub A0, A1, A2, A3, A4, A01, A23, B0, B1;
};

inline IntervalPieces interval_pieces() {
    IntervalComplexes IC = interval_complexes();
    IntervalPieces P;
    using V = std::vector<std::pair<int, int>>;
    P.A0 = csub(IC, {0, 1},
                {V{{0, 0}, {0, 1}, {1, 1}}, V{{0, 0}, {1, 0}, {1, 1}}});
    P.A1 = csub(IC, {1, 2}, {V{{1, 0}, {1, 1}, {2, 1}}});
    P.A2 = csub(IC, {2, 3},
                {V{{2, 0}, {3, 0}, {3, 1}}, V{{2, 0}, {2, 1}, {3, 1}}});
    P.A3 = csub(IC, {0, 2}, {V{{0, 0}, {0, 1}, {2, 1}}});
    P.A4 = csub(IC, {0, 3}, {V{{0, 0}, {0, 1}, {3, 1}}});
    P.A01 = csub(IC, {0, 1, 2},
                 {V{{0, 0}, {0, 1}, {1, 1}}, V{{0, 0}, {1, 0}, {1, 1}},
                  V{{1, 0}, {1, 1}, {2, 1}}});
    // A01 is the union of A0 and A1 inside the [0,1,2] prism: restrict
    {
        std::set<CellId> keep;
        for (auto [amb, sub] : P.A0.to_sub) keep.insert(amb);
        for (auto [amb, sub] : P.A1.to_sub) keep.insert(amb);
        Subcomplex S = subcomplex(*IC.C.cx, keep);
        Marking t;
        for (const auto& m :
             {V{{0, 0}, {0, 1}, {1, 1}}, V{{0, 0}, {1, 0}, {1, 1}},
              V{{1, 0}, {1, 1}, {2, 1}}})
            t.insert(S.to_sub.at(IC.ccell(m)));
        P.A01 = {{S.complex, std::move(t)}, S.incl, S.to_sub};
    }
    {
        std::set<CellId> keep;
        for (auto [amb, sub] : P.A2.to_sub) keep.insert(amb);
        for (auto [amb, sub] : P.A3.to_sub) keep.insert(amb);
        Subcomplex S = subcomplex(*IC.C.cx, keep);
        Marking t;
        for (const auto& m :
             {V{{2, 0}, {3, 0}, {3, 1}}, V{{2, 0}, {2, 1}, {3, 1}},
              V{{0, 0}, {0, 1}, {2, 1}}})
            t.insert(S.to_sub.at(IC.ccell(m)));
        P.A23 = {{S.complex, std::move(t)}, S.incl, S.to_sub};
    }
    P.B0 = csub(IC, {0, 1, 2},
                {V{{0, 0}, {0, 1}, {1, 1}}, V{{0, 0}, {0, 1}, {2, 1}},
                 V{{0, 0}, {1, 1}, {2, 1}}, V{{1, 0}, {1, 1}, {2, 1}},
                 V{{0, 0}, {1, 0}, {1, 1}}, V{{0, 0}, {1, 0}, {2, 1}}},
                true);
    P.B1 = csub(IC, {0, 2, 3},
                {V{{0, 0}, {0, 1}, {2, 1}}, V{{0, 0}, {0, 1}, {3, 1}},
                 V{{0, 0}, {2, 1}, {3, 1}}, V{{2, 0}, {2, 1}, {3, 1}},
                 V{{2, 0}, {3, 0}, {3, 1}}},
                true);
    return P;
}

// ---- the co-join comparison object R ----

// R has vertices 0 (=00), 1 (=01), 2 (the collapsed end), two parallel
// long edges c and c', and contains K = Delta[1] *co Delta[0] and
// L = Delta[0] *co Delta[1] as the subobjects dropping N resp. T2.
struct CojoinComparison {
    StratSet R;
    CellId v0, v1, vstar;
    CellId a, b, c, cp;       // edges 0->1, 1->*, 0->* (two)
    CellId T1, T2, N, Ttop;   // triangles and the tetrahedron
};

inline CojoinComparison cojoin_comparison() {
    CojoinComparison X;
    Complex R;
    X.v0 = R.add_vertex();
    X.v1 = R.add_vertex();
    X.vstar = R.add_vertex();
    auto edge = [&](CellId s, CellId t) {
        return R.add_cell(1, {{Operator::identity(0), t},
                              {Operator::identity(0), s}});
    };
    X.a = edge(X.v0, X.v1);
    X.b = edge(X.v1, X.vstar);
    X.c = edge(X.v0, X.vstar);
    X.cp = edge(X.v0, X.vstar);
    auto nd = [&](CellId cell) { return SimplexExpr{Operator::identity(1), cell}; };
    SimplexExpr degstar{Operator::degeneracy(0, 0), X.vstar};
    SimplexExpr deg0{Operator::degeneracy(0, 0), X.v0};
    X.T1 = R.add_cell(2, {nd(X.b), nd(X.c), nd(X.a)});
    X.T2 = R.add_cell(2, {degstar, nd(X.c), nd(X.cp)});
    X.N = R.add_cell(2, {nd(X.cp), nd(X.c), deg0});
    auto nd2 = [&](CellId cell) { return SimplexExpr{Operator::identity(2), cell}; };
    SimplexExpr s1cp{Operator::degeneracy(1, 1), X.cp};
    SimplexExpr s0cp{Operator::degeneracy(1, 0), X.cp};
    X.Ttop = R.add_cell(3, {s1cp, nd2(X.T2), nd2(X.N), s0cp});
    R.validate();
    X.R = make_strat(std::move(R), {X.T1, X.Ttop});
    return X;
}

} // namespace complicial
