#pragma once

#include "constructions.hpp"

namespace complicial {

// ------------------------------------------------------------ odd duality

// Same cells; the operator action is conjugated by the rank-preserving
// reversal, so face i becomes face n-i with normalization.  Markings are
// unchanged as sets of cells.
inline StratSet op_dual(const StratSet& X) {
    Complex out;
    for (CellId c = 0; c < X.cx->size(); ++c) {
        int d = X.cx->dim(c);
        std::vector<SimplexExpr> faces;
        if (d > 0)
            for (int i = 0; i <= d; ++i) {
                const SimplexExpr& f = X.cx->face(c, d - i);
                faces.push_back({reverse_op(f.eta), f.cell});
            }
        out.add_cell(d, std::move(faces));
    }
    out.validate();
    return {std::make_shared<Complex>(std::move(out)), X.t};
}

inline BistratSet op_dual_bi(const BistratSet& X) {
    StratSet u = op_dual(StratSet{X.cx, X.t});
    return {u.cx, X.t, X.c};
}

// op of a map, between already-dualized complexes (cell ids match)
inline SMap op_dual_map(const SMap& f, const Complex& opdom,
                        const Complex& opcod) {
    SMap g{&opdom, &opcod, {}};
    for (const auto& x : f.assign)
        g.assign.push_back({reverse_op(x.eta), x.cell});
    return g;
}

// --------------------------------------------------- the co-join monad

// T X = X *co Delta[0].  The even duality comes from the monad structure
// on T: the unit is the X-end cocone, the multiplication is induced by
// the max-pairing (i,j,x) -> (i v j, x) on the interval coordinates.
// Levels store T^k(empty); the cosimplicial object is n -> T^{n+1}(empty).
class CosimplicialCo {
public:
    explicit CosimplicialCo(int bound) : bound_(bound) {
        levels_.push_back(StratSet{std::make_shared<Complex>(), {}});
        for (int k = 1; k <= bound + 2; ++k) {
            steps_.push_back(
                std::make_shared<CojoinResult>(cojoin(levels_.back(), delta(0))));
            levels_.push_back(steps_.back()->result);
        }
        for (int n = 0; n <= bound_; ++n) {
            std::vector<SMap> dn, sn;
            for (int i = 0; i <= n + 1; ++i) {
                // d^i = T^i(unit at level n+1-i)
                SMap f = unit(n + 1 - i);
                for (int k = 0; k < i; ++k)
                    f = monad_map(n + 1 - i + k, n + 2 - i + k, f);
                dn.push_back(std::move(f));
            }
            for (int i = 0; i <= n; ++i) {
                // s^i : object(n+1) -> object(n) = T^i(mult at lv n-i)
                SMap f = mult(n - i);
                for (int k = 0; k < i; ++k)
                    f = monad_map(n + 2 - i + k, n + 1 - i + k, f);
                sn.push_back(std::move(f));
            }
            cofaces_.push_back(std::move(dn));
            codegens_.push_back(std::move(sn));
        }
    }

    int bound() const { return bound_; }
    // object(n) = Delta[n]_co = T^{n+1}(empty)
    const StratSet& object(int n) const {
        return levels_[static_cast<size_t>(n) + 1];
    }
    const SMap& coface(int n, int i) const {
        return cofaces_[static_cast<size_t>(n)][static_cast<size_t>(i)];
    }
    // s^i : object(n+1) -> object(n); stored under index n+1
    const SMap& codegeneracy(int n1, int i) const {
        return codegens_[static_cast<size_t>(n1) - 1][static_cast<size_t>(i)];
    }

    // co of an arbitrary operator u : [a] -> [b], covariantly
    SMap co_of(const Operator& u) const {
        auto [p, inj] = ez_factorize(u);
        SMap f = identity_map(*object(u.dom_rank()).cx);
        {
            Operator s = p;
            while (!s.is_identity()) {
                int i = 0;
                while (!s.degenerate_at(i)) ++i;
                f = compose(codegeneracy(s.dom_rank(), i), f);
                std::vector<int> img = s.images();
                img.erase(img.begin() + i);
                s = Operator(std::move(img), s.cod_rank());
            }
        }
        {
            std::vector<bool> hit(static_cast<size_t>(inj.cod_rank()) + 1,
                                  false);
            for (int v : inj.images()) hit[static_cast<size_t>(v)] = true;
            int rank = inj.dom_rank();
            for (int v = 0; v <= inj.cod_rank(); ++v) {
                if (hit[static_cast<size_t>(v)]) continue;
                f = compose(coface(rank, v), f);
                ++rank;
            }
        }
        return f;
    }

private:
    const StratSet& lv(int k) const { return levels_[static_cast<size_t>(k)]; }
    const CojoinResult& step(int k) const {
        return *steps_[static_cast<size_t>(k) - 1]; // presentation of lv(k)
    }

    // unit lv(k) -> lv(k+1)
    SMap unit(int k) const { return step(k + 1).from_x.f; }

    // T(f) for f : lv(a) -> lv(b)
    SMap monad_map(int a, int b, const SMap& f) const {
        const CojoinResult& RA = step(a + 1);
        const CojoinResult& RB = step(b + 1);
        SMap mid = compose(RB.col.cocone[0].f,
                           product_map(*RA.cyl.p2, *RB.cyl.p2,
                                       identity_map(*RA.cyl.p1->complex), f));
        SMap e0 = compose(RB.col.cocone[1].f,
                          product_map(*RA.cyl.p2e0, *RB.cyl.p2e0,
                                      identity_map(*RA.cyl.p1e->complex), f));
        SMap e1 = compose(RB.col.cocone[2].f,
                          product_map(*RA.cyl.p2e1, *RB.cyl.p2e1,
                                      identity_map(*RA.cyl.p1e->complex), f));
        SMap la = compose(RB.col.cocone[3].f, f);
        SMap lp = RB.col.cocone[4].f;
        SMap out = induce_from_colimit(*RA.col.engine,
                                       {&mid, &e0, &e1, &la, &lp},
                                       *lv(b + 1).cx);
        std::string why;
        if (!valid_smap(out, &why))
            throw std::logic_error("co-join functor map invalid: " + why);
        return out;
    }

    // the pairing value on (interval simplex v, T A simplex t), where
    // A = lv(k): a simplex of T A = lv(k+1)
    SimplexExpr pair_value(int k, const SimplexExpr& v,
                           const SimplexExpr& t) const {
        const CojoinResult& R1 = step(k + 1);
        const Complex& I = *delta_complex(1);
        auto [obj, srep] = R1.col.engine->preimage(t.cell);
        auto constant = [&](int dim, CellId vert, const Complex& in) {
            return in.apply(in.nondeg(vert),
                            Operator(std::vector<int>(
                                         static_cast<size_t>(dim) + 1, 0),
                                     0));
        };
        auto vee = [&](const SimplexExpr& w) {
            std::vector<CellId> a = I.vertices(v), b = I.vertices(w);
            std::vector<int> m;
            for (size_t q = 0; q < a.size(); ++q)
                m.push_back(std::max(a[q], b[q]));
            return I.apply(I.nondeg(2), Operator(m, 1));
        };
        auto into_mid = [&](const SimplexExpr& w, const SimplexExpr& x) {
            SimplexExpr ptc = constant(w.dim(), 0, *delta_complex(0));
            SimplexExpr pv = R1.cyl.p1->expr(*delta_complex(0), I, ptc, w);
            SimplexExpr m =
                R1.cyl.p2->expr(*R1.cyl.p1->complex, *lv(k).cx, pv, x);
            return R1.col.engine->image(0, m);
        };
        switch (obj) {
            case 0: {
                SimplexExpr s = R1.cyl.mid.cx->apply(srep, t.eta);
                const auto& [a0, x0] =
                    R1.cyl.p2->pair_of[static_cast<size_t>(s.cell)];
                SimplexExpr a = R1.cyl.p1->complex->apply(a0, s.eta);
                SimplexExpr x = lv(k).cx->apply(x0, s.eta);
                const auto& vpair =
                    R1.cyl.p1->pair_of[static_cast<size_t>(a.cell)];
                SimplexExpr w = I.apply(vpair.second, a.eta);
                return into_mid(vee(w), x);
            }
            case 1: {
                SimplexExpr s = R1.cyl.end0.cx->apply(srep, t.eta);
                return pair_value(k, v,
                                  R1.col.engine->image(0, R1.cyl.incl0(s)));
            }
            case 2: {
                SimplexExpr s = R1.cyl.end1.cx->apply(srep, t.eta);
                return pair_value(k, v,
                                  R1.col.engine->image(0, R1.cyl.incl1(s)));
            }
            case 3: {
                SimplexExpr x = lv(k).cx->apply(srep, t.eta);
                return into_mid(vee(constant(v.dim(), 0, I)), x);
            }
            default: {
                SimplexExpr p = R1.from_y.f.assign[0];
                return lv(k + 1).cx->apply(
                    p, Operator(std::vector<int>(
                                    static_cast<size_t>(v.dim()) + 1, 0),
                                0));
            }
        }
    }

    // mult : T T A -> T A for A = lv(k)
    SMap mult(int k) const {
        const StratSet& TA = lv(k + 1);
        const CojoinResult& R2 = step(k + 2);
        const Complex& I = *delta_complex(1);
        SMap mid{R2.cyl.mid.cx.get(), TA.cx.get(), {}};
        for (CellId c = 0; c < R2.cyl.mid.cx->size(); ++c) {
            const auto& [a0, t0] = R2.cyl.p2->pair_of[static_cast<size_t>(c)];
            const auto& vpair =
                R2.cyl.p1->pair_of[static_cast<size_t>(a0.cell)];
            SimplexExpr w = I.apply(vpair.second, a0.eta);
            mid.assign.push_back(pair_value(k, w, t0));
        }
        SMap e0 = compose(mid, R2.cyl.incl0);
        SMap e1 = compose(mid, R2.cyl.incl1);
        SMap lta = identity_map(*TA.cx);
        // the outer collapsed point goes to the inner one
        SMap lp{R2.from_y.f.dom, TA.cx.get(),
                {step(k + 1).from_y.f.assign[0]}};
        SMap out = induce_from_colimit(*R2.col.engine,
                                       {&mid, &e0, &e1, &lta, &lp}, *TA.cx);
        std::string why;
        if (!valid_smap(out, &why))
            throw std::logic_error("co-join multiplication invalid: " + why);
        return out;
    }

    int bound_;
    std::vector<StratSet> levels_;
    std::vector<std::shared_ptr<CojoinResult>> steps_;
    std::vector<std::vector<SMap>> cofaces_;
    std::vector<std::vector<SMap>> codegens_;
};

inline const CosimplicialCo& cosimplicial_co(int bound) {
    static std::map<int, std::shared_ptr<CosimplicialCo>> cache;
    auto it = cache.find(bound);
    if (it == cache.end())
        it = cache.emplace(bound, std::make_shared<CosimplicialCo>(bound))
                 .first;
    return *it->second;
}

// ------------------------------------------------------------ even duality

// X_co: glue one copy of Delta[dim x]_co per nondegenerate cell x along
// the cosimplicial maps of the face expressions; a marked cell
// contributes tau_dim of its copy.
inline StratSet co_dual(const StratSet& X, int co_bound) {
    if (X.cx->dim_bound() > co_bound)
        throw std::runtime_error("co_dual: dimension exceeds the bound");
    const CosimplicialCo& CO = cosimplicial_co(std::max(co_bound, 1));
    std::vector<StratSet> owned;
    std::vector<StratArrow> arrows;
    std::vector<int> cell_obj(static_cast<size_t>(X.cx->size()));
    for (CellId c = 0; c < X.cx->size(); ++c) {
        int d = X.cx->dim(c);
        StratSet O = CO.object(d);
        if (X.t.count(c) && d >= 1) O = truncate(O, d);
        owned.push_back(O);
        cell_obj[static_cast<size_t>(c)] = static_cast<int>(owned.size()) - 1;
    }
    for (CellId c = 0; c < X.cx->size(); ++c) {
        int d = X.cx->dim(c);
        for (int i = 0; d > 0 && i <= d; ++i) {
            const SimplexExpr& fc = X.cx->face(c, i);
            owned.push_back(CO.object(d - 1));
            int ridx = static_cast<int>(owned.size()) - 1;
            arrows.push_back({ridx, cell_obj[static_cast<size_t>(c)],
                              CO.co_of(Operator::face(d, i))});
            arrows.push_back({ridx, cell_obj[static_cast<size_t>(fc.cell)],
                              CO.co_of(fc.eta)});
        }
    }
    std::vector<const StratSet*> objs;
    for (const auto& o : owned) objs.push_back(&o);
    StratColimit col = strat_colimit(objs, arrows);
    return col.result;
}

inline StratSet full_dual(const StratSet& X, int co_bound) {
    return op_dual(co_dual(X, co_bound));
}

} // namespace complicial
