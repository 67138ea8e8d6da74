#pragma once

#include "saturation.hpp"
#include "serialize.hpp"

namespace complicial {

// ------------------------------------------------------ lift search

struct Square {
    StratMap i;      // K -> L, mono
    StratMap p;      // X -> Y
    StratMap top;    // K -> X
    StratMap bottom; // L -> Y
};

inline bool square_commutes(const Square& sq) {
    return compose(sq.p.f, sq.top.f).assign ==
           compose(sq.bottom.f, sq.i.f).assign;
}

// Complete search for a diagonal L -> X.
inline std::optional<SMap> find_lift(const Square& sq) {
    assert(square_commutes(sq));
    const Complex& L = *sq.i.cod.cx;
    const Complex& X = *sq.p.dom.cx;
    MapSearch s{L, X};
    for (CellId c = 0; c < sq.i.dom.cx->size(); ++c)
        s.forced[sq.i.f.assign[static_cast<size_t>(c)].cell] =
            sq.top.f.assign[static_cast<size_t>(c)];
    s.admit = [&](CellId c, const SimplexExpr& cand) {
        if (sq.i.cod.t.count(c) && !sq.p.dom.thin(cand)) return false;
        return sq.p.f(cand) == sq.bottom.f.assign[static_cast<size_t>(c)];
    };
    std::optional<SMap> found;
    s.run([&](const SMap& f) {
        found = f;
        return false;
    });
    return found;
}

enum class RlpStatus { Has, No, BudgetExceeded };

struct RlpReport {
    RlpStatus status = RlpStatus::Has;
    long squares = 0;
    std::optional<Square> counterexample;
};

// Enumerate all commuting squares (top, bottom) over (i, p) and search
// for lifts.  Budget counts enumeration nodes; exceeding it yields an
// explicit BudgetExceeded verdict rather than a sampled answer.
inline RlpReport has_rlp(const StratMap& p, const StratMap& i,
                         long budget = -1) {
    RlpReport rep;
    const Complex& K = *i.dom.cx;
    const Complex& X = *p.dom.cx;
    const Complex& L = *i.cod.cx;
    MapSearch tops{K, X};
    tops.budget = budget;
    tops.admit = [&](CellId c, const SimplexExpr& cand) {
        return !i.dom.t.count(c) || p.dom.thin(cand);
    };
    bool done = tops.run([&](const SMap& top) {
        MapSearch bots{L, *p.cod.cx};
        bots.budget = budget;
        for (CellId c = 0; c < K.size(); ++c)
            bots.forced[i.f.assign[static_cast<size_t>(c)].cell] =
                p.f(top(K.nondeg(c)));
        bots.admit = [&](CellId c, const SimplexExpr& cand) {
            return !i.cod.t.count(c) || p.cod.thin(cand);
        };
        bool ok = bots.run([&](const SMap& bottom) {
            ++rep.squares;
            Square sq{i, p, StratMap{i.dom, p.dom, top},
                      StratMap{i.cod, p.cod, bottom}};
            if (!find_lift(sq)) {
                rep.status = RlpStatus::No;
                rep.counterexample = sq;
                return false;
            }
            return true;
        });
        if (bots.exhausted) {
            rep.status = RlpStatus::BudgetExceeded;
            return false;
        }
        return ok && rep.status == RlpStatus::Has;
    });
    if (tops.exhausted) rep.status = RlpStatus::BudgetExceeded;
    (void)done;
    return rep;
}

// The terminal stratified set.
inline StratSet terminal_strat() { return delta(0); }

inline StratMap to_terminal(const StratSet& X) {
    StratSet pt = terminal_strat();
    SMap f{X.cx.get(), pt.cx.get(), {}};
    for (CellId c = 0; c < X.cx->size(); ++c) {
        std::vector<int> img(static_cast<size_t>(X.cx->dim(c)) + 1, 0);
        f.assign.push_back(
            SimplexExpr{Operator(std::move(img), 0), 0});
    }
    return {X, pt, f};
}

// ------------------------------------------- bounded fibrancy checking

struct InftyFailure {
    std::string family; // e.g. "horn(2,1)"
    SMap map_in;        // the unfillable map from the source shape
};

struct InftyReport {
    bool pass = true;
    int dim = 0;
    long checks = 0;
    std::optional<InftyFailure> failure;
};

// RLP of X -> 1 against horns, thinness and saturation extensions up to
// dimension d; the verdict is explicitly "up to dimension d".
inline InftyReport check_infty(const StratSet& X, int d) {
    InftyReport rep;
    rep.dim = d;
    // complicial horns: search an extension along the regular inclusion
    for (int n = 1; n <= d && rep.pass; ++n)
        for (int k = 0; k <= n && rep.pass; ++k) {
            HornShape H = horn(n, k);
            MapSearch s{*H.horn.cx, *X.cx};
            s.admit = [&](CellId c, const SimplexExpr& cand) {
                return !H.horn.t.count(c) || X.thin(cand);
            };
            s.run([&](const SMap& f) {
                ++rep.checks;
                MapSearch ext{*H.filled.cx, *X.cx};
                for (CellId c = 0; c < H.horn.cx->size(); ++c)
                    ext.forced[H.incl.f.assign[static_cast<size_t>(c)].cell] =
                        f.assign[static_cast<size_t>(c)];
                ext.admit = [&](CellId c, const SimplexExpr& cand) {
                    return !H.filled.t.count(c) || X.thin(cand);
                };
                bool found = false;
                ext.run([&](const SMap&) {
                    found = true;
                    return false;
                });
                if (!found) {
                    rep.pass = false;
                    rep.failure = InftyFailure{
                        "horn(" + std::to_string(n) + "," + std::to_string(k) +
                            ")",
                        f};
                    return false;
                }
                return true;
            });
        }
    // entire extensions: a map extends iff it already preserves the
    // larger marking
    auto entire_family = [&](const StratSet& small, const StratSet& big,
                             const std::string& name) {
        if (!rep.pass) return;
        MapSearch s{*small.cx, *X.cx};
        s.admit = [&](CellId c, const SimplexExpr& cand) {
            return !small.t.count(c) || X.thin(cand);
        };
        s.run([&](const SMap& f) {
            ++rep.checks;
            for (CellId c : big.t)
                if (!X.thin(f.assign[static_cast<size_t>(c)])) {
                    rep.pass = false;
                    rep.failure = InftyFailure{name, f};
                    return false;
                }
            return true;
        });
    };
    for (int n = 2; n <= d && rep.pass; ++n)
        for (int k = 0; k <= n && rep.pass; ++k)
            entire_family(delta_k_prime(n, k), delta_k_dprime(n, k),
                          "thinness(" + std::to_string(n) + "," +
                              std::to_string(k) + ")");
    for (int p = -1; p + 5 <= d && rep.pass; ++p)
        for (int q = -1; p + q + 5 <= d && rep.pass; ++q) {
            StratSet eqj =
                join(join(delta(p), delta3_eq()).result, delta(q)).result;
            StratSet shj =
                join(join(delta(p), sharp(3)).result, delta(q)).result;
            entire_family(eqj, shj,
                          "saturation(" + std::to_string(p) + "," +
                              std::to_string(q) + ")");
        }
    return rep;
}

// ------------------------------------------------------- certificates

// A certificate replays a claimed anodyne extension as a sequence of
// pushouts of named generating cofibrations, all embedded in the target.
// Steps attach the whole shape V by vertex images (resolved in the
// target) or by explicit per-cell simplex descriptors.

struct CertStepShape {
    // V with both markings, and the subset of V-cells forming the source U
    BistratSet V;
    Marking Ut, Uc;             // source markings (subsets of V's)
    std::set<CellId> U_cells;   // source cells
    std::string describe;
};

struct CertOutcome {
    bool valid = false;
    int failed_step = -1; // -1: target/embedding, steps are 0-based
    std::string reason;
};

namespace certdetail {

inline StratSet shape_param(const std::string& name) {
    if (name == "empty") return StratSet{std::make_shared<Complex>(), {}};
    if (name == "point") return delta(0);
    if (name == "interval") return delta(1);
    if (name == "interval_t") return delta_t(1);
    if (name == "boundary1") return boundary_incl(1).boundary;
    throw SchemaError("unknown shape parameter: " + name);
}

inline BistratSet lift_bi(const StratSet& X) { return as_bistrat(X); }

inline CertStepShape make_shape(const json& js) {
    std::string kind = js.at("shape").get<std::string>();
    CertStepShape S;
    S.describe = kind;
    auto from_incl = [&](const StratSet& U, const StratSet& V,
                         const SMap& incl) {
        S.V = as_bistrat(V);
        for (CellId c = 0; c < U.cx->size(); ++c)
            S.U_cells.insert(incl.assign[static_cast<size_t>(c)].cell);
        for (CellId c : U.t) {
            CellId img = incl.assign[static_cast<size_t>(c)].cell;
            S.Ut.insert(img);
            S.Uc.insert(img);
        }
    };
    if (kind == "horn") {
        HornShape H = horn(js.at("n").get<int>(), js.at("k").get<int>());
        from_incl(H.horn, H.filled, H.incl.f);
    } else if (kind == "boundary") {
        BoundaryShape B = boundary_incl(js.at("n").get<int>());
        from_incl(B.boundary, B.filled, B.incl.f);
    } else if (kind == "thinness") {
        int n = js.at("n").get<int>(), k = js.at("k").get<int>();
        StratSet big = delta_k_dprime(n, k);
        S.V = as_bistrat(big);
        for (CellId c = 0; c < big.cx->size(); ++c) S.U_cells.insert(c);
        S.Ut = delta_k_prime(n, k).t;
        S.Uc = S.Ut;
        S.describe = "thinness";
    } else if (kind == "saturation") {
        int n = js.at("n").get<int>(), m = js.at("m").get<int>();
        StratSet eqj = join(join(delta(n), delta3_eq()).result, delta(m)).result;
        StratSet shj = join(join(delta(n), sharp(3)).result, delta(m)).result;
        S.V = as_bistrat(shj);
        for (CellId c = 0; c < shj.cx->size(); ++c) S.U_cells.insert(c);
        S.Ut = eqj.t;
        S.Uc = S.Ut;
    } else if (kind == "oslash_horn") {
        int n = js.at("n").get<int>(), k = js.at("k").get<int>();
        bool anti = js.value("anti", false);
        StratSet K = shape_param(js.at("param").get<std::string>());
        OslashShape O = oslash(n, k, K, anti);
        from_incl(O.horn, O.whole, O.incl.f);
    } else if (kind == "leibniz") {
        auto mono_of = [&](const json& jm) -> StratMap {
            std::string mk = jm.at("shape").get<std::string>();
            if (mk == "horn") {
                HornShape H =
                    horn(jm.at("n").get<int>(), jm.at("k").get<int>());
                return H.incl;
            }
            if (mk == "horn_prime") {
                HornShape H =
                    horn(jm.at("n").get<int>(), jm.at("k").get<int>());
                StratSet big =
                    delta_k_prime(jm.at("n").get<int>(), jm.at("k").get<int>());
                return StratMap{H.horn, big, H.incl.f};
            }
            if (mk == "boundary") {
                BoundaryShape B = boundary_incl(jm.at("n").get<int>());
                return B.incl;
            }
            throw SchemaError("unknown leibniz factor: " + mk);
        };
        StratMap f = mono_of(js.at("f"));
        StratMap g = mono_of(js.at("g"));
        std::string tn = js.at("tensor").get<std::string>();
        Tensor t = tn == "gray"      ? Tensor::Gray
                   : tn == "product" ? Tensor::Product
                                     : Tensor::Join;
        LeibnizResult L = leibniz(f, g, t);
        S.V = as_bistrat(L.target);
        for (CellId c = 0; c < L.corner_dom.cx->size(); ++c)
            S.U_cells.insert(
                L.corner.f.assign[static_cast<size_t>(c)].cell);
        for (CellId c : L.corner_dom.t) {
            CellId img = L.corner.f.assign[static_cast<size_t>(c)].cell;
            S.Ut.insert(img);
            S.Uc.insert(img);
        }
        S.describe = "leibniz(" + tn + ")";
    } else if (kind == "cart_thinness") {
        int n = js.at("n").get<int>(), k = js.at("k").get<int>();
        BistratSet big = cart_thin2(n, k);
        S.V = big;
        for (CellId c = 0; c < big.cx->size(); ++c) S.U_cells.insert(c);
        BistratSet small = cart_thin(n, k);
        S.Ut = small.t;
        S.Uc = small.c;
    } else if (kind == "cart_trivialization") {
        int n = js.at("n").get<int>();
        BistratSet big = delta_t_bi(n);
        S.V = big;
        for (CellId c = 0; c < big.cx->size(); ++c) S.U_cells.insert(c);
        BistratSet small = delta_c(n);
        S.Ut = small.t;
        S.Uc = small.c;
    } else {
        throw SchemaError("unknown step shape: " + kind);
    }
    return S;
}

// all d-simplices of B with the given vertex sequence, in id order
inline std::vector<SimplexExpr> simplices_with_vertices(
    const Complex& B, int d, const std::vector<CellId>& verts) {
    std::vector<SimplexExpr> out;
    for (const auto& s : B.simplices(d))
        if (B.vertices(s) == verts) out.push_back(s);
    return out;
}

// image assignments of a full shape map V -> B from the attach field
inline std::vector<SimplexExpr> resolve_attach(const json& ja,
                                               const Complex& V,
                                               const Complex& B) {
    std::vector<SimplexExpr> assign(static_cast<size_t>(V.size()));
    if (ja.contains("vertices")) {
        std::vector<CellId> vimg;
        for (const auto& v : ja.at("vertices")) vimg.push_back(v.get<int>());
        if (static_cast<int>(vimg.size()) != V.count(0))
            throw SchemaError("attach: wrong number of vertex images");
        for (CellId c = 0; c < V.size(); ++c) {
            std::vector<CellId> verts;
            for (CellId v : V.cell_vertices(c))
                verts.push_back(vimg[static_cast<size_t>(v)]);
            if (!std::is_sorted(verts.begin(), verts.end()))
                throw SchemaError("attach: vertex images not monotone");
            auto cands = simplices_with_vertices(B, V.dim(c), verts);
            if (cands.empty())
                throw SchemaError("attach: no target simplex with the "
                                  "required vertices for cell " +
                                  std::to_string(c));
            if (cands.size() > 1)
                throw SchemaError("attach: ambiguous vertex images for cell " +
                                  std::to_string(c) +
                                  " (use explicit cells)");
            assign[static_cast<size_t>(c)] = cands[0];
        }
        return assign;
    }
    if (ja.contains("cells")) {
        const auto& jc = ja.at("cells");
        if (static_cast<int>(jc.size()) != V.size())
            throw SchemaError("attach: need one descriptor per shape cell");
        for (CellId c = 0; c < V.size(); ++c) {
            const auto& d = jc[static_cast<size_t>(c)];
            std::vector<CellId> verts;
            for (const auto& v : d.at("verts")) verts.push_back(v.get<int>());
            int pick = d.value("pick", 0);
            int dim = static_cast<int>(verts.size()) - 1;
            // carrier: pick-th nondegenerate cell with these vertices
            std::vector<CellId> carriers;
            for (CellId b : B.cells(dim))
                if (B.cell_vertices(b) == verts) carriers.push_back(b);
            if (pick < 0 || pick >= static_cast<int>(carriers.size()))
                throw SchemaError("attach: carrier pick out of range");
            Operator eta = d.contains("eta")
                               ? operator_from_json(d.at("eta"), dim)
                               : Operator::identity(dim);
            if (!eta.is_surjective() || eta.dom_rank() != V.dim(c))
                throw SchemaError("attach: bad eta for cell " +
                                  std::to_string(c));
            assign[static_cast<size_t>(c)] =
                SimplexExpr{eta, carriers[static_cast<size_t>(pick)]};
        }
        return assign;
    }
    throw SchemaError("attach: need 'vertices' or 'cells'");
}

} // namespace certdetail

// One pushout along a named generating cofibration U -> V, attached by a
// stratified map from U; returns the extended set with its inclusion.
struct PushoutStep {
    StratSet result;
    StratMap incl;     // current -> result
    StratMap attached; // V -> result
};

inline PushoutStep pushout_step(const StratSet& current,
                                const json& shape_spec, const SMap& attach,
                                std::string* why = nullptr) {
    CertStepShape S = certdetail::make_shape(shape_spec);
    // restrict V to the source cells
    Subcomplex Us = subcomplex(*S.V.cx, S.U_cells);
    StratSet Usrc{Us.complex, restrict_marking(S.Ut, Us.to_sub)};
    SMap att{Usrc.cx.get(), current.cx.get(), {}};
    std::map<CellId, CellId> from_sub;
    for (auto [amb, sub] : Us.to_sub) from_sub[sub] = amb;
    for (CellId c = 0; c < Usrc.cx->size(); ++c)
        att.assign.push_back(attach.assign[static_cast<size_t>(
            from_sub.at(c))]);
    std::string local;
    auto checked = check_strat_map(att, Usrc, current, &local);
    if (!checked) {
        if (why) *why = "invalid attachment: " + local;
        throw std::invalid_argument("pushout_step: invalid attachment: " +
                                    local);
    }
    StratSet Vs{S.V.cx, S.V.t};
    StratColimit col =
        strat_colimit({&current, &Vs, &Usrc},
                      {{2, 0, att}, {2, 1, Us.incl}});
    return {col.result, col.cocone[0], col.cocone[1]};
}

struct VerifiedStage {
    std::set<CellId> cells;
    Marking t, c;
};

// Replays the certificate: each step must be a valid attachment of its
// shape whose source lands in the current stage and whose new cells and
// marks are fresh; the final stage must equal the target exactly
// (after the declared closure, when one is declared).
inline CertOutcome verify_certificate(const json& cert,
                                      std::vector<VerifiedStage>* trace = nullptr) {
    CertOutcome out;
    BistratSet B, F;
    try {
        B = bistrat_from_json(cert.at("target").at("to").at("object"));
        F = bistrat_from_json(cert.at("target").at("from").at("object"));
    } catch (const std::exception& e) {
        out.reason = std::string("target: ") + e.what();
        return out;
    }
    VerifiedStage S;
    // embedding: per from-cell, a simplex descriptor resolved in B
    try {
        json emb = cert.at("target").at("embedding");
        std::vector<SimplexExpr> assign =
            certdetail::resolve_attach(emb, *F.cx, *B.cx);
        SMap f{F.cx.get(), B.cx.get(), assign};
        std::string why;
        if (!valid_smap(f, &why)) throw SchemaError("embedding: " + why);
        if (!is_mono(f)) throw SchemaError("embedding is not a mono");
        for (CellId c = 0; c < F.cx->size(); ++c) {
            CellId img = f.assign[static_cast<size_t>(c)].cell;
            S.cells.insert(img);
            if (F.t.count(c)) S.t.insert(img);
            if (F.c.count(c)) S.c.insert(img);
        }
        for (CellId c : S.t)
            if (!B.t.count(c))
                throw SchemaError("embedded thin cell not thin in target");
        for (CellId c : S.c)
            if (!B.c.count(c))
                throw SchemaError("embedded cartesian cell not cartesian "
                                  "in target");
    } catch (const std::exception& e) {
        out.reason = e.what();
        return out;
    }
    auto thin_in = [&](const Marking& m, const SimplexExpr& x) {
        if (!x.eta.is_injective()) return true;
        return B.cx->dim(x.cell) >= 1 && m.count(x.cell) > 0;
    };
    const json& steps = cert.value("steps", json::array());
    for (int si = 0; si < static_cast<int>(steps.size()); ++si) {
        out.failed_step = si;
        try {
            CertStepShape shp = certdetail::make_shape(steps[static_cast<size_t>(si)]);
            std::vector<SimplexExpr> assign = certdetail::resolve_attach(
                steps[static_cast<size_t>(si)].at("attach"), *shp.V.cx, *B.cx);
            SMap f{shp.V.cx.get(), B.cx.get(), assign};
            std::string why;
            if (!valid_smap(f, &why))
                throw SchemaError("attach not simplicial: " + why);
            // the source must land in the current stage with its markings
            for (CellId c : shp.U_cells) {
                const SimplexExpr& img = f.assign[static_cast<size_t>(c)];
                if (!S.cells.count(img.cell))
                    throw SchemaError("source cell lands outside the stage");
                if (shp.Ut.count(c) && !thin_in(S.t, img))
                    throw SchemaError("source thin cell lands on a "
                                      "non-thin stage simplex");
                if (shp.Uc.count(c) && !thin_in(S.c, img))
                    throw SchemaError("source cartesian cell lands on a "
                                      "non-cartesian stage simplex");
            }
            // new cells must be fresh, nondegenerate and distinct
            std::set<CellId> fresh;
            for (CellId c = 0; c < shp.V.cx->size(); ++c) {
                if (shp.U_cells.count(c)) continue;
                const SimplexExpr& img = f.assign[static_cast<size_t>(c)];
                if (!img.nondegenerate())
                    throw SchemaError("attached cell has degenerate image");
                if (S.cells.count(img.cell) || !fresh.insert(img.cell).second)
                    throw SchemaError("attached cell image is not fresh");
            }
            for (CellId c : fresh) S.cells.insert(c);
            // transport markings
            auto push_marks = [&](const Marking& Vm, Marking& Sm,
                                  const Marking& Bm, const char* what) {
                for (CellId c : Vm) {
                    const SimplexExpr& img = f.assign[static_cast<size_t>(c)];
                    if (!img.nondegenerate()) continue;
                    if (!Bm.count(img.cell))
                        throw SchemaError(
                            std::string("step marks a cell that is not ") +
                            what + " in the target");
                    Sm.insert(img.cell);
                }
            };
            push_marks(shp.V.t, S.t, B.t, "thin");
            push_marks(shp.V.c, S.c, B.c, "cartesian");
        } catch (const std::exception& e) {
            out.reason = e.what();
            return out;
        }
        if (trace) trace->push_back(S);
    }
    out.failed_step = static_cast<int>(steps.size());
    // final stage must give all of B
    if (static_cast<int>(S.cells.size()) != B.cx->size()) {
        out.reason = "final stage is missing cells of the target";
        return out;
    }
    std::string mode = cert.contains("closure")
                           ? cert.at("closure").value("mode", "none")
                           : "none";
    if (mode == "marked" || mode == "bimarked") {
        int sd = cert.at("closure").value("search_dim", B.cx->dim_bound() + 1);
        ClosureConfig cfg;
        cfg.search_dim = sd;
        BistratSet stage{B.cx, S.t, S.c};
        BistratSet closed = saturate_bimarked(stage, cfg);
        S.t = closed.t;
        S.c = closed.c;
    }
    if (S.t != B.t) {
        out.reason = "final thin marking differs from the target";
        return out;
    }
    if (S.c != B.c) {
        out.reason = "final cartesian marking differs from the target";
        return out;
    }
    out.valid = true;
    out.failed_step = -1;
    out.reason = "";
    return out;
}

} // namespace complicial
