#pragma once

#include <memory>

#include "smap.hpp"

namespace complicial {

// Binary product.  Nondegenerate d-cells are the jointly nondegenerate
// pairs of d-simplices; faces are computed componentwise and renormalized
// by stripping common degeneracies.
struct ProductResult {
    std::shared_ptr<Complex> complex;
    SMap proj1, proj2;
    std::map<std::pair<SimplexExpr, SimplexExpr>, CellId> index;
    std::vector<std::pair<SimplexExpr, SimplexExpr>> pair_of;

    // canonical expression of an arbitrary simplex pair
    SimplexExpr expr(const Complex& X, const Complex& Y, SimplexExpr a,
                     SimplexExpr b) const {
        assert(a.dim() == b.dim());
        Operator sigma = Operator::identity(a.dim());
        while (true) {
            int m = a.dim();
            int i = -1;
            for (int j = 0; j < m; ++j)
                if (a.eta.degenerate_at(j) && b.eta.degenerate_at(j)) {
                    i = j;
                    break;
                }
            if (i < 0) break;
            sigma = compose(Operator::degeneracy(m - 1, i), sigma);
            a = X.apply(a, Operator::face(m, i));
            b = Y.apply(b, Operator::face(m, i));
        }
        return {sigma, index.at({a, b})};
    }
};

inline ProductResult product(const Complex& X, const Complex& Y) {
    ProductResult R;
    R.complex = std::make_shared<Complex>();
    Complex& P = *R.complex;
    int D = X.dim_bound() + Y.dim_bound();
    if (X.dim_bound() < 0 || Y.dim_bound() < 0) D = -1;
    for (int d = 0; d <= D; ++d) {
        for (const auto& a : X.simplices(d))
            for (const auto& b : Y.simplices(d)) {
                bool joint_nondeg = true;
                for (int j = 0; j < d && joint_nondeg; ++j)
                    if (a.eta.degenerate_at(j) && b.eta.degenerate_at(j))
                        joint_nondeg = false;
                if (!joint_nondeg) continue;
                std::vector<SimplexExpr> faces;
                if (d > 0)
                    for (int i = 0; i <= d; ++i)
                        faces.push_back(
                            R.expr(X, Y, X.apply(a, Operator::face(d, i)),
                                   Y.apply(b, Operator::face(d, i))));
                CellId c = P.add_cell(d, std::move(faces));
                R.index[{a, b}] = c;
                R.pair_of.push_back({a, b});
            }
    }
    R.proj1 = SMap{&P, &X, {}};
    R.proj2 = SMap{&P, &Y, {}};
    for (CellId c = 0; c < P.size(); ++c) {
        R.proj1.assign.push_back(R.pair_of[static_cast<size_t>(c)].first);
        R.proj2.assign.push_back(R.pair_of[static_cast<size_t>(c)].second);
    }
    return R;
}

// f x g on products already computed for dom and cod pairs.
inline SMap product_map(const ProductResult& dom, const ProductResult& cod,
                        const SMap& f, const SMap& g) {
    SMap h{dom.complex.get(), cod.complex.get(), {}};
    for (CellId c = 0; c < dom.complex->size(); ++c) {
        const auto& [a, b] = dom.pair_of[static_cast<size_t>(c)];
        h.assign.push_back(cod.expr(*f.cod, *g.cod, f(a), g(b)));
    }
    return h;
}

} // namespace complicial
