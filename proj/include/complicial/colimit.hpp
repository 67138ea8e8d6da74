#pragma once

#include <memory>

#include "smap.hpp"

namespace complicial {

// Colimit of a finite diagram of simplicial maps, computed dimensionwise
// on full simplex tables: quotient classes are formed by union-find,
// degenerate classes are detected and eliminated, and the result is
// re-expressed in canonical generator form.
struct DiagArrow {
    int from;
    int to;
    SMap f;
};

class ColimitEngine {
public:
    ColimitEngine(std::vector<const Complex*> objs, std::vector<DiagArrow> arrows)
        : objs_(std::move(objs)), arrows_(std::move(arrows)) {
        dmax_ = -1;
        for (auto* o : objs_) dmax_ = std::max(dmax_, o->dim_bound());
        build();
    }

    const Complex& result() const { return *out_; }
    std::shared_ptr<Complex> result_ptr() const { return out_; }
    const SMap& cocone(int obj) const {
        return cocones_[static_cast<size_t>(obj)];
    }

    // A deterministic preimage (object, simplex) of a result cell.
    std::pair<int, SimplexExpr> preimage(CellId c) const {
        auto [d, cls] = cell_class_[static_cast<size_t>(c)];
        const Elt& e = elts_[static_cast<size_t>(d)][static_cast<size_t>(cls)];
        return {e.obj, e.x};
    }

    // Canonical expression of an object's simplex in the colimit.
    SimplexExpr image(int obj, const SimplexExpr& x) const {
        return out_->apply(cocones_[static_cast<size_t>(obj)].assign
                               [static_cast<size_t>(x.cell)],
                           x.eta);
    }

private:
    struct Elt {
        int obj;
        SimplexExpr x;
        auto operator<=>(const Elt&) const = default;
    };

    int find(int d, int i) const {
        auto& p = parent_[static_cast<size_t>(d)];
        while (p[static_cast<size_t>(i)] != i) i = p[static_cast<size_t>(i)];
        return i;
    }
    void unite(int d, int a, int b) {
        a = find(d, a);
        b = find(d, b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent_[static_cast<size_t>(d)][static_cast<size_t>(b)] = a;
    }

    int index_of(int d, const Elt& e) const {
        return idx_[static_cast<size_t>(d)].at(e);
    }

    // class representative element (smallest index) of a class at dim d
    int class_of(int d, const Elt& e) const { return find(d, index_of(d, e)); }

    // action of an operator on a class, via any representative
    int act(int dto, int cls_dim, int cls, const Operator& u) const {
        const Elt& rep = elts_[static_cast<size_t>(cls_dim)]
                              [static_cast<size_t>(cls)];
        SimplexExpr y = objs_[static_cast<size_t>(rep.obj)]->apply(rep.x, u);
        return class_of(dto, {rep.obj, y});
    }

    void build() {
        elts_.assign(static_cast<size_t>(dmax_ + 1), {});
        idx_.assign(static_cast<size_t>(dmax_ + 1), {});
        parent_.assign(static_cast<size_t>(dmax_ + 1), {});
        for (int d = 0; d <= dmax_; ++d) {
            auto& es = elts_[static_cast<size_t>(d)];
            for (int o = 0; o < static_cast<int>(objs_.size()); ++o)
                for (const auto& x : objs_[static_cast<size_t>(o)]->simplices(d))
                    es.push_back({o, x});
            auto& ix = idx_[static_cast<size_t>(d)];
            for (int i = 0; i < static_cast<int>(es.size()); ++i)
                ix[es[static_cast<size_t>(i)]] = i;
            auto& p = parent_[static_cast<size_t>(d)];
            p.resize(es.size());
            std::iota(p.begin(), p.end(), 0);
            for (const auto& ar : arrows_) {
                for (const auto& x :
                     objs_[static_cast<size_t>(ar.from)]->simplices(d)) {
                    SimplexExpr fx = ar.f(x);
                    unite(d, ix.at({ar.from, x}), ix.at({ar.to, fx}));
                }
            }
        }
        // canonical expressions per class, built dimension by dimension
        out_ = std::make_shared<Complex>();
        expr_.assign(static_cast<size_t>(dmax_ + 1), {});
        for (int d = 0; d <= dmax_; ++d) {
            auto& es = elts_[static_cast<size_t>(d)];
            auto& ex = expr_[static_cast<size_t>(d)];
            ex.assign(es.size(), std::nullopt);
            for (int i = 0; i < static_cast<int>(es.size()); ++i) {
                if (find(d, i) != i || ex[static_cast<size_t>(i)]) continue;
                // degenerate iff q = s^j(d^j q) for some j
                std::optional<SimplexExpr> got;
                for (int j = 0; j < d && !got; ++j) {
                    int down = act(d - 1, d, i, Operator::face(d, j));
                    int back =
                        act(d, d - 1, down, Operator::degeneracy(d - 1, j));
                    if (back == i) {
                        const SimplexExpr& below =
                            *expr_[static_cast<size_t>(d - 1)]
                                  [static_cast<size_t>(down)];
                        got = SimplexExpr{
                            compose(below.eta, Operator::degeneracy(d - 1, j)),
                            below.cell};
                    }
                }
                if (got) {
                    ex[static_cast<size_t>(i)] = got;
                    continue;
                }
                // nondegenerate: becomes a new cell
                std::vector<SimplexExpr> faces;
                if (d > 0)
                    for (int j = 0; j <= d; ++j) {
                        int down = act(d - 1, d, i, Operator::face(d, j));
                        faces.push_back(*expr_[static_cast<size_t>(d - 1)]
                                              [static_cast<size_t>(down)]);
                    }
                CellId c = out_->add_cell(d, std::move(faces));
                cell_class_.push_back({d, i});
                ex[static_cast<size_t>(i)] = SimplexExpr{Operator::identity(d), c};
            }
        }
        // cocones
        cocones_.clear();
        for (int o = 0; o < static_cast<int>(objs_.size()); ++o) {
            SMap f{objs_[static_cast<size_t>(o)], out_.get(), {}};
            for (CellId c = 0; c < objs_[static_cast<size_t>(o)]->size(); ++c) {
                int d = objs_[static_cast<size_t>(o)]->dim(c);
                int cls = class_of(
                    d, {o, objs_[static_cast<size_t>(o)]->nondeg(c)});
                f.assign.push_back(
                    *expr_[static_cast<size_t>(d)][static_cast<size_t>(cls)]);
            }
            cocones_.push_back(std::move(f));
        }
    }

    std::vector<const Complex*> objs_;
    std::vector<DiagArrow> arrows_;
    int dmax_;
    std::vector<std::vector<Elt>> elts_;
    std::vector<std::map<Elt, int>> idx_;
    mutable std::vector<std::vector<int>> parent_;
    std::vector<std::vector<std::optional<SimplexExpr>>> expr_;
    std::vector<std::pair<int, int>> cell_class_;
    std::shared_ptr<Complex> out_;
    std::vector<SMap> cocones_;
};

// Map out of a colimit, induced by compatible maps legs[o] : objs[o] -> T.
inline SMap induce_from_colimit(const ColimitEngine& eng,
                                const std::vector<const SMap*>& legs,
                                const Complex& target) {
    const Complex& R = eng.result();
    SMap h{&R, &target, std::vector<SimplexExpr>(static_cast<size_t>(R.size()),
                                                 SimplexExpr{})};
    std::vector<bool> done(static_cast<size_t>(R.size()), false);
    for (int o = 0; o < static_cast<int>(legs.size()); ++o) {
        const SMap& leg = *legs[static_cast<size_t>(o)];
        const SMap& coc = eng.cocone(o);
        for (CellId c = 0; c < static_cast<int>(coc.assign.size()); ++c) {
            const SimplexExpr& img = coc.assign[static_cast<size_t>(c)];
            if (!img.nondegenerate()) continue;
            if (done[static_cast<size_t>(img.cell)]) continue;
            h.assign[static_cast<size_t>(img.cell)] =
                leg.assign[static_cast<size_t>(c)];
            done[static_cast<size_t>(img.cell)] = true;
        }
    }
    for (bool b : done)
        if (!b) throw std::logic_error("induced map: colimit cell without a leg");
    return h;
}

} // namespace complicial
