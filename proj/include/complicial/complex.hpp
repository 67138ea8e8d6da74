#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "operators.hpp"

namespace complicial {

using CellId = int;

// A simplex in Eilenberg-Zilber canonical form: a surjection applied to a
// nondegenerate cell.  Two expressions denote the same simplex iff they
// are equal.
struct SimplexExpr {
    Operator eta; // surjective, [dim] ->> [dim of cell]
    CellId cell = -1;

    int dim() const { return eta.dom_rank(); }
    bool nondegenerate() const { return eta.is_identity(); }
    auto operator<=>(const SimplexExpr&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const SimplexExpr& x) {
    return os << x.eta << "@c" << x.cell;
}

// A finite simplicial set presented by its nondegenerate cells and their
// face expressions.  Cells are created in nondecreasing dimension order;
// ids are stable and deterministic.
class Complex {
public:
    CellId add_cell(int dim, std::vector<SimplexExpr> faces) {
        assert(dim == 0 ? faces.empty()
                        : faces.size() == static_cast<size_t>(dim) + 1);
        assert(cells_.empty() || cells_.back().dim <= dim);
        cells_.push_back({dim, std::move(faces)});
        if (static_cast<int>(by_dim_.size()) <= dim)
            by_dim_.resize(static_cast<size_t>(dim) + 1);
        CellId id = static_cast<CellId>(cells_.size()) - 1;
        by_dim_[static_cast<size_t>(dim)].push_back(id);
        return id;
    }
    CellId add_vertex() { return add_cell(0, {}); }

    int size() const { return static_cast<int>(cells_.size()); }
    int dim_bound() const { return static_cast<int>(by_dim_.size()) - 1; }
    int dim(CellId c) const { return cells_[static_cast<size_t>(c)].dim; }
    const std::vector<CellId>& cells(int d) const {
        static const std::vector<CellId> none;
        if (d < 0 || d > dim_bound()) return none;
        return by_dim_[static_cast<size_t>(d)];
    }
    const SimplexExpr& face(CellId c, int i) const {
        return cells_[static_cast<size_t>(c)].faces[static_cast<size_t>(i)];
    }
    int count(int d) const { return static_cast<int>(cells(d).size()); }

    SimplexExpr nondeg(CellId c) const {
        return {Operator::identity(dim(c)), c};
    }

    // Canonical form of x . u (the presheaf action).
    SimplexExpr apply(const SimplexExpr& x, const Operator& u) const {
        assert(u.cod_rank() == x.dim());
        auto [p, i] = ez_factorize(compose(x.eta, u));
        SimplexExpr y = apply_injective(x.cell, i);
        return {compose(y.eta, p), y.cell};
    }

    std::vector<CellId> vertices(const SimplexExpr& x) const {
        std::vector<CellId> out;
        for (int j = 0; j <= x.dim(); ++j)
            out.push_back(apply(x, Operator({j}, x.dim())).cell);
        return out;
    }
    std::vector<CellId> cell_vertices(CellId c) const {
        return vertices(nondeg(c));
    }

    // All n-simplices, degenerate ones included, in deterministic order.
    std::vector<SimplexExpr> simplices(int n) const {
        std::vector<SimplexExpr> out;
        for (int k = 0; k <= std::min(n, dim_bound()); ++k) {
            auto etas = all_surjections(n, k);
            for (CellId c : cells(k))
                for (const auto& e : etas) out.push_back({e, c});
        }
        return out;
    }

    // Simplicial identities in canonical form, for every cell.
    void validate() const {
        for (CellId c = 0; c < size(); ++c) {
            int d = dim(c);
            for (int i = 0; d > 0 && i <= d; ++i) {
                const auto& f = face(c, i);
                if (f.dim() != d - 1 || !f.eta.is_surjective())
                    throw std::logic_error("malformed face expression");
                if (f.cell < 0 || f.cell >= size() || dim(f.cell) != f.eta.cod_rank())
                    throw std::logic_error("face cell out of range");
            }
            for (int j = 1; d >= 2 && j <= d; ++j)
                for (int i = 0; i < j; ++i) {
                    SimplexExpr a = apply(face(c, j), Operator::face(d - 1, i));
                    SimplexExpr b = apply(face(c, i), Operator::face(d - 1, j - 1));
                    if (a != b)
                        throw std::logic_error(
                            "simplicial identity failed at cell " +
                            std::to_string(c));
                }
        }
    }

private:
    struct CellData {
        int dim;
        std::vector<SimplexExpr> faces;
    };

    // c . i for injective i, by walking stored faces.
    SimplexExpr apply_injective(CellId c, const Operator& i) const {
        if (i.is_identity()) return nondeg(c);
        int k = i.cod_rank();
        int missing = -1;
        {
            std::vector<bool> hit(static_cast<size_t>(k) + 1, false);
            for (int v : i.images()) hit[static_cast<size_t>(v)] = true;
            for (int t = k; t >= 0; --t)
                if (!hit[static_cast<size_t>(t)]) { missing = t; break; }
        }
        std::vector<int> img;
        img.reserve(i.images().size());
        for (int v : i.images()) img.push_back(v > missing ? v - 1 : v);
        return apply(face(c, missing), Operator(std::move(img), k - 1));
    }

    std::vector<CellData> cells_;
    std::vector<std::vector<CellId>> by_dim_;
};

// The standard simplex: nondegenerate cells are the nonempty vertex
// subsets of [n], in (dimension, lexicographic) order.
inline Complex standard_simplex(int n) {
    Complex X;
    std::map<std::vector<int>, CellId> ids;
    for (int v = 0; v <= n; ++v) ids[{v}] = X.add_vertex();
    for (int d = 1; d <= n; ++d) {
        // lexicographic d+1 subsets of [n]
        std::vector<int> sel(static_cast<size_t>(d) + 1);
        for (int i = 0; i <= d; ++i) sel[static_cast<size_t>(i)] = i;
        while (true) {
            std::vector<SimplexExpr> faces;
            for (int i = 0; i <= d; ++i) {
                std::vector<int> f = sel;
                f.erase(f.begin() + i);
                faces.push_back({Operator::identity(d - 1), ids.at(f)});
            }
            ids[sel] = X.add_cell(d, std::move(faces));
            int i = d;
            while (i >= 0 && sel[static_cast<size_t>(i)] == n - (d - i)) --i;
            if (i < 0) break;
            ++sel[static_cast<size_t>(i)];
            for (int j = i + 1; j <= d; ++j)
                sel[static_cast<size_t>(j)] = sel[static_cast<size_t>(j - 1)] + 1;
        }
    }
    return X;
}

// Vertex subset -> cell id inside standard_simplex(n).
inline CellId simplex_cell_by_verts(const Complex& delta,
                                    const std::vector<int>& verts) {
    // ids are assigned in (dim, lex) order by construction
    SimplexExpr top = delta.nondeg(static_cast<CellId>(delta.size()) - 1);
    return delta.apply(top, Operator(verts, delta.dim_bound())).cell;
}

inline Complex empty_complex() { return Complex(); }

inline Complex point_complex() {
    Complex X;
    X.add_vertex();
    return X;
}

} // namespace complicial
