#pragma once

#include <functional>
#include <optional>

#include "complex.hpp"

namespace complicial {

// A simplicial map, stored as one image simplex per nondegenerate cell of
// the domain.
struct SMap {
    const Complex* dom = nullptr;
    const Complex* cod = nullptr;
    std::vector<SimplexExpr> assign; // indexed by dom cell id

    SimplexExpr operator()(const SimplexExpr& x) const {
        return cod->apply(assign[static_cast<size_t>(x.cell)], x.eta);
    }
    SimplexExpr operator()(CellId c) const {
        return assign[static_cast<size_t>(c)];
    }
};

inline SMap identity_map(const Complex& X) {
    SMap f{&X, &X, {}};
    for (CellId c = 0; c < X.size(); ++c) f.assign.push_back(X.nondeg(c));
    return f;
}

// g o f.
inline SMap compose(const SMap& g, const SMap& f) {
    assert(f.cod == g.dom);
    SMap h{f.dom, g.cod, {}};
    h.assign.reserve(f.assign.size());
    for (const auto& x : f.assign) h.assign.push_back(g(x));
    return h;
}

inline bool valid_smap(const SMap& f, std::string* why = nullptr) {
    const Complex& K = *f.dom;
    if (f.assign.size() != static_cast<size_t>(K.size())) {
        if (why) *why = "assignment not total";
        return false;
    }
    for (CellId c = 0; c < K.size(); ++c) {
        int d = K.dim(c);
        const SimplexExpr& img = f.assign[static_cast<size_t>(c)];
        if (img.cell < 0 || img.cell >= f.cod->size() ||
            !img.eta.is_surjective() ||
            img.eta.cod_rank() != f.cod->dim(img.cell)) {
            if (why) *why = "image of cell " + std::to_string(c) +
                            " is not a simplex of the codomain";
            return false;
        }
        if (img.dim() != d) {
            if (why) *why = "dimension mismatch at cell " + std::to_string(c);
            return false;
        }
        for (int i = 0; d > 0 && i <= d; ++i) {
            SimplexExpr lhs = f.cod->apply(f.assign[static_cast<size_t>(c)],
                                           Operator::face(d, i));
            SimplexExpr rhs = f(K.face(c, i));
            if (lhs != rhs) {
                if (why)
                    *why = "face " + std::to_string(i) + " of cell " +
                           std::to_string(c) + " not preserved";
                return false;
            }
        }
    }
    return true;
}

// Monomorphism test: nondegenerate cells map to distinct nondegenerate
// simplices (equivalent to levelwise injectivity by EZ uniqueness).
inline bool is_mono(const SMap& f) {
    std::set<SimplexExpr> seen;
    for (const auto& x : f.assign) {
        if (!x.nondegenerate()) return false;
        if (!seen.insert(x).second) return false;
    }
    return true;
}

inline bool operator==(const SMap& a, const SMap& b) {
    return a.dom == b.dom && a.cod == b.cod && a.assign == b.assign;
}

// All simplicial maps K -> X by dimension-ordered backtracking, with an
// optional partial assignment and a node budget.  Calls sink(f); stop
// early when sink returns false.
struct MapSearch {
    const Complex& K;
    const Complex& X;
    std::map<CellId, SimplexExpr> forced;
    // extra per-cell admissibility (marking constraints etc.)
    std::function<bool(CellId, const SimplexExpr&)> admit;
    long budget = -1; // candidate tests; -1 = unlimited

    bool exhausted = false;

    template <typename Sink>
    bool run(Sink&& sink) {
        std::vector<SimplexExpr> assign(static_cast<size_t>(K.size()));
        std::vector<std::vector<SimplexExpr>> pool(
            static_cast<size_t>(K.dim_bound()) + 1);
        for (int d = 0; d <= K.dim_bound(); ++d) pool[static_cast<size_t>(d)] =
            X.simplices(d);
        long used = 0;
        return rec(0, assign, pool, used, sink);
    }

private:
    template <typename Sink>
    bool rec(CellId c, std::vector<SimplexExpr>& assign,
             const std::vector<std::vector<SimplexExpr>>& pool, long& used,
             Sink&& sink) {
        if (c == K.size()) {
            SMap f{&K, &X, assign};
            return sink(f);
        }
        int d = K.dim(c);
        auto fits = [&](const SimplexExpr& cand) {
            if (budget >= 0 && ++used > budget) {
                exhausted = true;
                return false;
            }
            for (int i = 0; d > 0 && i <= d; ++i) {
                const SimplexExpr& fc = K.face(c, i);
                SimplexExpr want =
                    X.apply(assign[static_cast<size_t>(fc.cell)], fc.eta);
                if (X.apply(cand, Operator::face(d, i)) != want) return false;
            }
            return !admit || admit(c, cand);
        };
        auto it = forced.find(c);
        if (it != forced.end()) {
            if (!fits(it->second)) return true;
            assign[static_cast<size_t>(c)] = it->second;
            return rec(c + 1, assign, pool, used, sink);
        }
        for (const auto& cand : pool[static_cast<size_t>(d)]) {
            if (exhausted) return false;
            if (!fits(cand)) continue;
            assign[static_cast<size_t>(c)] = cand;
            if (!rec(c + 1, assign, pool, used, sink)) return false;
        }
        return true;
    }
};

inline std::vector<SMap> enumerate_maps(const Complex& K, const Complex& X) {
    std::vector<SMap> out;
    MapSearch s{K, X};
    s.run([&](const SMap& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

// An isomorphism, if one exists.  `match` can impose extra cell-to-cell
// constraints (marking-awareness).
inline std::optional<SMap> find_iso(
    const Complex& X, const Complex& Y,
    const std::function<bool(CellId, CellId)>& match = nullptr) {
    if (X.dim_bound() != Y.dim_bound()) return std::nullopt;
    for (int d = 0; d <= X.dim_bound(); ++d)
        if (X.count(d) != Y.count(d)) return std::nullopt;
    std::vector<SimplexExpr> assign(static_cast<size_t>(X.size()));
    std::vector<bool> taken(static_cast<size_t>(Y.size()), false);
    std::function<bool(CellId)> rec = [&](CellId c) -> bool {
        if (c == X.size()) return true;
        int d = X.dim(c);
        for (CellId y : Y.cells(d)) {
            if (taken[static_cast<size_t>(y)]) continue;
            if (match && !match(c, y)) continue;
            bool ok = true;
            for (int i = 0; d > 0 && i <= d && ok; ++i) {
                const SimplexExpr& fc = X.face(c, i);
                SimplexExpr want =
                    Y.apply(assign[static_cast<size_t>(fc.cell)], fc.eta);
                if (Y.apply(Y.nondeg(y), Operator::face(d, i)) != want)
                    ok = false;
            }
            if (!ok) continue;
            assign[static_cast<size_t>(c)] = Y.nondeg(y);
            taken[static_cast<size_t>(y)] = true;
            if (rec(c + 1)) return true;
            taken[static_cast<size_t>(y)] = false;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    SMap f{&X, &Y, assign};
    assert(valid_smap(f));
    return f;
}

} // namespace complicial
