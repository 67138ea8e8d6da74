#pragma once

#include "colimit.hpp"
#include "product.hpp"

namespace complicial {

// Marked cells of positive dimension.  A simplex is thin when its eta is
// non-injective (degenerate) or its carrier cell is marked; dimension-0
// simplices are never thin.
using Marking = std::set<CellId>;

struct StratSet {
    std::shared_ptr<const Complex> cx;
    Marking t;

    const Complex& complex() const { return *cx; }
    bool thin(const SimplexExpr& x) const {
        if (!x.eta.is_injective()) return true;
        return cx->dim(x.cell) >= 1 && t.count(x.cell) > 0;
    }
};

struct BistratSet {
    std::shared_ptr<const Complex> cx;
    Marking t; // thin
    Marking c; // cartesian, t subset of c

    const Complex& complex() const { return *cx; }
    bool thin(const SimplexExpr& x) const {
        if (!x.eta.is_injective()) return true;
        return cx->dim(x.cell) >= 1 && t.count(x.cell) > 0;
    }
    bool cart(const SimplexExpr& x) const {
        if (!x.eta.is_injective()) return true;
        return cx->dim(x.cell) >= 1 && c.count(x.cell) > 0;
    }
    StratSet underlying() const { return {cx, t}; }
};

inline BistratSet as_bistrat(const StratSet& X) { return {X.cx, X.t, X.t}; }

inline StratSet make_strat(Complex&& C, Marking t = {}) {
    return {std::make_shared<Complex>(std::move(C)), std::move(t)};
}

inline bool same_marked(const StratSet& X, const StratSet& Y) {
    return X.cx.get() == Y.cx.get() && X.t == Y.t;
}

struct StratMap {
    StratSet dom, cod;
    SMap f;

    SimplexExpr operator()(const SimplexExpr& x) const { return f(x); }
};

struct BistratMap {
    BistratSet dom, cod;
    SMap f;
};

// Wrap a simplicial map as a stratified morphism; reports the first
// offending cell when thinness is not preserved.
inline std::optional<StratMap> check_strat_map(const SMap& f,
                                               const StratSet& dom,
                                               const StratSet& cod,
                                               std::string* why = nullptr) {
    if (!valid_smap(f, why)) return std::nullopt;
    for (CellId c : dom.t) {
        if (!cod.thin(f(dom.cx->nondeg(c)))) {
            if (why)
                *why = "marked cell " + std::to_string(c) +
                       " has non-thin image";
            return std::nullopt;
        }
    }
    return StratMap{dom, cod, f};
}

inline std::optional<BistratMap> check_bistrat_map(const SMap& f,
                                                   const BistratSet& dom,
                                                   const BistratSet& cod,
                                                   std::string* why = nullptr) {
    if (!valid_smap(f, why)) return std::nullopt;
    for (CellId c : dom.t)
        if (!cod.thin(f(dom.cx->nondeg(c)))) {
            if (why) *why = "thin cell " + std::to_string(c) + " not preserved";
            return std::nullopt;
        }
    for (CellId c : dom.c)
        if (!cod.cart(f(dom.cx->nondeg(c)))) {
            if (why)
                *why = "cartesian cell " + std::to_string(c) + " not preserved";
            return std::nullopt;
        }
    return BistratMap{dom, cod, f};
}

inline StratMap strat_identity(const StratSet& X) {
    return {X, X, identity_map(*X.cx)};
}

inline StratMap strat_compose(const StratMap& g, const StratMap& f) {
    return {f.dom, g.cod, compose(g.f, f.f)};
}

// Entire: identity on the underlying simplicial set (marking may grow).
inline bool is_entire(const StratMap& i) {
    if (i.dom.cx->size() != i.cod.cx->size()) return false;
    for (CellId c = 0; c < i.dom.cx->size(); ++c)
        if (i.f.assign[static_cast<size_t>(c)] != i.cod.cx->nondeg(c))
            return false;
    for (CellId c : i.dom.t)
        if (!i.cod.t.count(c)) return false;
    return true;
}

// Regular: a simplex of the domain is thin exactly when its image is.
inline bool is_regular(const StratMap& i) {
    if (!is_mono(i.f)) return false;
    for (CellId c = 0; c < i.dom.cx->size(); ++c) {
        if (i.dom.cx->dim(c) == 0) continue;
        bool dom_thin = i.dom.t.count(c) > 0;
        bool cod_thin = i.cod.thin(i.f.assign[static_cast<size_t>(c)]);
        if (dom_thin != cod_thin) return false;
    }
    return true;
}

// Marking transported through a colimit: a result cell is marked iff it
// has a marked preimage.
inline Marking push_marking(const ColimitEngine& eng,
                            const std::vector<const Complex*>& objs,
                            const std::vector<const Marking*>& marks) {
    Marking out;
    for (int o = 0; o < static_cast<int>(objs.size()); ++o)
        for (CellId c : *marks[static_cast<size_t>(o)]) {
            SimplexExpr img =
                eng.cocone(o).assign[static_cast<size_t>(c)];
            if (img.nondegenerate()) out.insert(img.cell);
        }
    return out;
}

struct StratArrow {
    int from, to;
    SMap f;
};

struct StratColimit {
    StratSet result;
    std::vector<StratMap> cocone;
    std::shared_ptr<ColimitEngine> engine;
};

inline StratColimit strat_colimit(const std::vector<const StratSet*>& objs,
                                  const std::vector<StratArrow>& arrows) {
    std::vector<const Complex*> cs;
    std::vector<const Marking*> ms;
    for (auto* o : objs) {
        cs.push_back(o->cx.get());
        ms.push_back(&o->t);
    }
    std::vector<DiagArrow> as;
    for (const auto& a : arrows) as.push_back({a.from, a.to, a.f});
    auto eng = std::make_shared<ColimitEngine>(cs, as);
    StratSet R{eng->result_ptr(), push_marking(*eng, cs, ms)};
    StratColimit out{R, {}, eng};
    for (int o = 0; o < static_cast<int>(objs.size()); ++o)
        out.cocone.push_back(StratMap{*objs[static_cast<size_t>(o)], R,
                                      eng->cocone(o)});
    return out;
}

struct BistratColimit {
    BistratSet result;
    std::vector<BistratMap> cocone;
    std::shared_ptr<ColimitEngine> engine;
};

inline BistratColimit bistrat_colimit(const std::vector<const BistratSet*>& objs,
                                      const std::vector<StratArrow>& arrows) {
    std::vector<const Complex*> cs;
    std::vector<const Marking*> ts, ccs;
    for (auto* o : objs) {
        cs.push_back(o->cx.get());
        ts.push_back(&o->t);
        ccs.push_back(&o->c);
    }
    std::vector<DiagArrow> as;
    for (const auto& a : arrows) as.push_back({a.from, a.to, a.f});
    auto eng = std::make_shared<ColimitEngine>(cs, as);
    BistratSet R{eng->result_ptr(), push_marking(*eng, cs, ts),
                 push_marking(*eng, cs, ccs)};
    for (CellId c : R.t) R.c.insert(c);
    BistratColimit out{R, {}, eng};
    for (int o = 0; o < static_cast<int>(objs.size()); ++o)
        out.cocone.push_back(BistratMap{*objs[static_cast<size_t>(o)], R,
                                        eng->cocone(o)});
    return out;
}

// Cartesian product of stratified sets: a pair is thin iff both
// components are.
struct StratProduct {
    StratSet result;
    StratMap proj1, proj2;
    std::shared_ptr<ProductResult> prod;
};

inline StratProduct strat_product(const StratSet& X, const StratSet& Y) {
    auto P = std::make_shared<ProductResult>(product(*X.cx, *Y.cx));
    Marking t;
    for (CellId c = 0; c < P->complex->size(); ++c) {
        if (P->complex->dim(c) == 0) continue;
        const auto& [a, b] = P->pair_of[static_cast<size_t>(c)];
        if (X.thin(a) && Y.thin(b)) t.insert(c);
    }
    StratSet R{P->complex, std::move(t)};
    return {R, StratMap{R, X, P->proj1}, StratMap{R, Y, P->proj2}, P};
}

struct BistratProduct {
    BistratSet result;
    std::shared_ptr<ProductResult> prod;
};

inline BistratProduct bistrat_product(const BistratSet& X, const BistratSet& Y) {
    auto P = std::make_shared<ProductResult>(product(*X.cx, *Y.cx));
    Marking t, c;
    for (CellId cid = 0; cid < P->complex->size(); ++cid) {
        if (P->complex->dim(cid) == 0) continue;
        const auto& [a, b] = P->pair_of[static_cast<size_t>(cid)];
        if (X.thin(a) && Y.thin(b)) t.insert(cid);
        if (X.cart(a) && Y.cart(b)) c.insert(cid);
    }
    return {BistratSet{P->complex, std::move(t), std::move(c)}, P};
}

// Marking-aware isomorphism search.
inline std::optional<SMap> strat_find_iso(const StratSet& X, const StratSet& Y) {
    if (X.t.size() != Y.t.size()) return std::nullopt;
    return find_iso(*X.cx, *Y.cx, [&](CellId a, CellId b) {
        return X.t.count(a) == Y.t.count(b);
    });
}

inline std::optional<SMap> bistrat_find_iso(const BistratSet& X,
                                            const BistratSet& Y) {
    if (X.t.size() != Y.t.size() || X.c.size() != Y.c.size())
        return std::nullopt;
    return find_iso(*X.cx, *Y.cx, [&](CellId a, CellId b) {
        return X.t.count(a) == Y.t.count(b) && X.c.count(a) == Y.c.count(b);
    });
}

// Subcomplex generated by a set of cells, with its inclusion.
struct Subcomplex {
    std::shared_ptr<Complex> complex;
    SMap incl;                     // subcomplex -> ambient
    std::map<CellId, CellId> to_sub; // ambient cell -> sub cell (if present)
};

inline Subcomplex subcomplex(const Complex& X, const std::set<CellId>& gens) {
    std::set<CellId> keep;
    std::function<void(CellId)> close = [&](CellId c) {
        if (!keep.insert(c).second) return;
        for (int i = 0; i <= X.dim(c) && X.dim(c) > 0; ++i)
            close(X.face(c, i).cell);
    };
    for (CellId c : gens) close(c);
    Subcomplex S;
    S.complex = std::make_shared<Complex>();
    // dimension order: ambient ids are already dimension-sorted
    for (CellId c : keep) {
        int d = X.dim(c);
        std::vector<SimplexExpr> faces;
        if (d > 0)
            for (int i = 0; i <= d; ++i) {
                const auto& f = X.face(c, i);
                faces.push_back({f.eta, S.to_sub.at(f.cell)});
            }
        S.to_sub[c] = S.complex->add_cell(d, std::move(faces));
    }
    S.incl = SMap{S.complex.get(), &X, {}};
    S.incl.assign.resize(static_cast<size_t>(S.complex->size()));
    for (auto [amb, sub] : S.to_sub)
        S.incl.assign[static_cast<size_t>(sub)] = X.nondeg(amb);
    return S;
}

inline Marking restrict_marking(const Marking& m,
                                const std::map<CellId, CellId>& to_sub) {
    Marking out;
    for (CellId c : m) {
        auto it = to_sub.find(c);
        if (it != to_sub.end()) out.insert(it->second);
    }
    return out;
}

} // namespace complicial
