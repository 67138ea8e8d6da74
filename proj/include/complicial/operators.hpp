#pragma once

#include <cassert>
#include <compare>
#include <numeric>
#include <ostream>
#include <vector>

namespace complicial {

// A morphism of the (augmented) simplex category: a monotone map
// [m] -> [n].  The augmented rank -1 (empty image list) is allowed; it is
// used by the join bookkeeping where one side of x * y is empty.
class Operator {
public:
    Operator() : cod_(-1) {}
    Operator(std::vector<int> images, int cod_rank)
        : cod_(cod_rank), img_(std::move(images)) {
        assert(is_monotone());
    }

    static Operator identity(int n) {
        std::vector<int> img(static_cast<size_t>(n + 1));
        std::iota(img.begin(), img.end(), 0);
        return Operator(std::move(img), n);
    }
    // d^i : [n-1] -> [n], skips i.
    static Operator face(int n, int i) {
        std::vector<int> img;
        img.reserve(static_cast<size_t>(n));
        for (int j = 0; j <= n; ++j)
            if (j != i) img.push_back(j);
        return Operator(std::move(img), n);
    }
    // s^i : [n+1] -> [n], repeats i.
    static Operator degeneracy(int n, int i) {
        std::vector<int> img;
        img.reserve(static_cast<size_t>(n + 2));
        for (int j = 0; j <= n + 1; ++j) img.push_back(j <= i ? j : j - 1);
        return Operator(std::move(img), n);
    }
    // The rank -1 slot of the augmented simplex category.
    static Operator empty(int cod_rank) { return Operator({}, cod_rank); }

    int dom_rank() const { return static_cast<int>(img_.size()) - 1; }
    int cod_rank() const { return cod_; }
    int operator()(int i) const { return img_[static_cast<size_t>(i)]; }
    const std::vector<int>& images() const { return img_; }

    bool is_monotone() const {
        for (size_t i = 0; i + 1 < img_.size(); ++i)
            if (img_[i] > img_[i + 1]) return false;
        return img_.empty() || (img_.front() >= 0 && img_.back() <= cod_);
    }
    bool is_identity() const {
        if (cod_ != dom_rank()) return false;
        for (size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != static_cast<int>(i)) return false;
        return true;
    }
    bool is_injective() const {
        for (size_t i = 0; i + 1 < img_.size(); ++i)
            if (img_[i] == img_[i + 1]) return false;
        return true;
    }
    bool is_surjective() const {
        int expect = 0;
        for (int v : img_) {
            if (v == expect) ++expect;
            else if (v > expect) return false;
        }
        return expect == cod_ + 1;
    }
    // True when i and i+1 have the same image (the operator factors
    // through s^i).
    bool degenerate_at(int i) const {
        return img_[static_cast<size_t>(i)] == img_[static_cast<size_t>(i) + 1];
    }

    auto operator<=>(const Operator&) const = default;

private:
    int cod_;
    std::vector<int> img_;
};

// u o v (v applied first).  v : [a] -> [b], u : [b] -> [c].
inline Operator compose(const Operator& u, const Operator& v) {
    assert(u.dom_rank() == v.cod_rank());
    std::vector<int> img;
    img.reserve(v.images().size());
    for (int x : v.images()) img.push_back(u(x));
    return Operator(std::move(img), u.cod_rank());
}

// Unique Eilenberg-Zilber factorization u = inj o surj.
struct EzFactors {
    Operator surj;
    Operator inj;
};

inline EzFactors ez_factorize(const Operator& u) {
    std::vector<int> hit;
    for (int v : u.images())
        if (hit.empty() || hit.back() != v) hit.push_back(v);
    std::vector<int> p;
    p.reserve(u.images().size());
    int idx = -1;
    for (int v : u.images()) {
        if (idx < 0 || hit[static_cast<size_t>(idx)] != v) ++idx;
        p.push_back(idx);
    }
    int k = static_cast<int>(hit.size()) - 1;
    return {Operator(std::move(p), k), Operator(std::move(hit), u.cod_rank())};
}

// Injective operator with the given (sorted, distinct) vertex images.
inline Operator vertex_inclusion(const std::vector<int>& verts, int cod_rank) {
    return Operator(verts, cod_rank);
}

// Join of operators: u * v : [a+b+1] -> [a'+b'+1], acting blockwise.
// Either side may have the empty rank -1 domain.
inline Operator join_op(const Operator& u, const Operator& v) {
    std::vector<int> img;
    img.reserve(u.images().size() + v.images().size());
    for (int x : u.images()) img.push_back(x);
    for (int x : v.images()) img.push_back(x + u.cod_rank() + 1);
    return Operator(std::move(img), u.cod_rank() + v.cod_rank() + 1);
}

// Partition operators (p,q) of n = p+q.
// Degeneration partition operators [n] -> [p], [n] -> [q].
inline Operator degen_partition1(int p, int q) {
    std::vector<int> img;
    for (int k = 0; k <= p + q; ++k) img.push_back(k <= p ? k : p);
    return Operator(std::move(img), p);
}
inline Operator degen_partition2(int p, int q) {
    std::vector<int> img;
    for (int k = 0; k <= p + q; ++k) img.push_back(k <= p ? 0 : k - p);
    return Operator(std::move(img), q);
}
// Face partition operators [p] -> [n], [q] -> [n].
inline Operator face_partition1(int p, int q) {
    std::vector<int> img;
    for (int k = 0; k <= p; ++k) img.push_back(k);
    return Operator(std::move(img), p + q);
}
inline Operator face_partition2(int p, int q) {
    std::vector<int> img;
    for (int k = 0; k <= q; ++k) img.push_back(k + p);
    return Operator(std::move(img), p + q);
}
// Triple face partition operators for p+q+r = n.
inline Operator face_partition3(int p, int q, int r, int slot) {
    int n = p + q + r;
    std::vector<int> img;
    switch (slot) {
        case 1:
            for (int k = 0; k <= p; ++k) img.push_back(k);
            break;
        case 2:
            for (int k = 0; k <= q; ++k) img.push_back(k + p);
            break;
        default:
            for (int k = 0; k <= r; ++k) img.push_back(k + p + q);
            break;
    }
    return Operator(std::move(img), n);
}

// Rank-preserving reversal: conjugating the action by this realizes the
// odd duality on operators.  op(u)(i) = n - u(m - i).
inline Operator reverse_op(const Operator& u) {
    int m = u.dom_rank(), n = u.cod_rank();
    std::vector<int> img;
    img.reserve(u.images().size());
    for (int i = 0; i <= m; ++i) img.push_back(n - u(m - i));
    return Operator(std::move(img), n);
}

// All monotone surjections [n] ->> [k], in lexicographic image order.
inline std::vector<Operator> all_surjections(int n, int k) {
    std::vector<Operator> out;
    if (k > n || k < 0) return out;
    std::vector<int> img(static_cast<size_t>(n + 1));
    // choose the k positions (among 1..n) where the value increases
    std::vector<int> rise(static_cast<size_t>(k), 0);
    for (int i = 0; i < k; ++i) rise[static_cast<size_t>(i)] = i + 1;
    auto emit = [&] {
        int v = 0;
        size_t r = 0;
        for (int i = 0; i <= n; ++i) {
            if (r < rise.size() && rise[r] == i) { ++v; ++r; }
            img[static_cast<size_t>(i)] = v;
        }
        out.emplace_back(img, k);
    };
    if (k == 0) { emit(); return out; }
    while (true) {
        emit();
        int i = k - 1;
        while (i >= 0 && rise[static_cast<size_t>(i)] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++rise[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            rise[static_cast<size_t>(j)] = rise[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

// All monotone maps [m] -> [n], lexicographic.
inline std::vector<Operator> all_monotone(int m, int n) {
    std::vector<Operator> out;
    if (m < 0) { out.push_back(Operator::empty(n)); return out; }
    std::vector<int> img(static_cast<size_t>(m + 1), 0);
    while (true) {
        out.emplace_back(img, n);
        int i = m;
        while (i >= 0 && img[static_cast<size_t>(i)] == n) --i;
        if (i < 0) break;
        int v = img[static_cast<size_t>(i)] + 1;
        for (int j = i; j <= m; ++j) img[static_cast<size_t>(j)] = v;
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Operator& u) {
    os << "[";
    for (size_t i = 0; i < u.images().size(); ++i)
        os << (i ? "," : "") << u.images()[i];
    return os << "]->" << u.cod_rank();
}

} // namespace complicial
