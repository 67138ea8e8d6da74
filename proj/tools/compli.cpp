// Command line interface: build shapes from expressions, compare, run the
// closure and fibrancy checkers, and verify certificates.
//
// Exit codes: 0 pass/VALID, 1 fail/INVALID, 2 usage error, 3 budget
// exceeded.

#include <complicial/cert_builder.hpp>
#include <complicial/expr.hpp>
#include <complicial/fibrations.hpp>

#include <fstream>
#include <iostream>

using namespace complicial;

namespace {

struct Options {
    int search_dim = 3;
    long map_budget = -1;
    int co_bound = 3;
    int dim = 2;
    std::string format = "human";
    std::map<std::string, std::string> named;
    std::vector<std::string> positional;
};

int usage() {
    std::cerr <<
        "usage: compli <command> [args]\n"
        "  build <expr|@file> [-o FILE]        evaluate and serialize\n"
        "  info <expr|@file>                   cell and marking counts\n"
        "  eq <a> <b>                          marking-aware isomorphism\n"
        "  saturate <obj> [--search-dim N]     marking closure\n"
        "  check-infty <obj> [--dim N]         bounded fibrancy check\n"
        "  rlp --i SPEC <obj>                  right lifting property\n"
        "  lift --square FILE                  search one lifting square\n"
        "  verify-cert FILE                    replay a certificate\n"
        "  dual --op|--co|--full <obj>         dualities (--co-bound N)\n"
        "  cells --dim N <obj>                 globe-shaped cells\n"
        "  compose --dim N --a I --b J <obj>   composition witness\n"
        "  equiv --dim N --a I --b J <obj>     thin equivalence witness\n"
        "  pi --dim N <obj>                    homotopy category report\n"
        "  check-g-fib --map FILE [--dim N]    globe-wise fibration check\n"
        "  check-ff-es --map FILE [--dim N]    fully-faithful + ess-surj\n"
        "  check-fib --class CLS --map FILE    naive fibration families\n"
        "flags: --search-dim N --map-budget N --co-bound N --format human|machine\n";
    return 2;
}

json object_report(const StratSet& X) {
    json j;
    j["dim_bound"] = X.cx->dim_bound();
    json counts = json::array();
    for (int d = 0; d <= X.cx->dim_bound(); ++d) counts.push_back(X.cx->count(d));
    j["cells"] = counts;
    j["marked"] = X.t.size();
    return j;
}

StratSet load_strat(const std::string& spec, const Options& opt) {
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw std::runtime_error("cannot open " + spec.substr(1));
        return strat_from_json(json::parse(in));
    }
    return eval_expr(spec, opt.co_bound);
}

BistratSet load_bistrat_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return bistrat_from_json(json::parse(in));
}

SMap load_map(const json& j, const BistratSet& dom, const BistratSet& cod) {
    SMap f{dom.cx.get(), cod.cx.get(), {}};
    for (const auto& a : j.at("assign")) {
        CellId c = a.at("cell").get<int>();
        Operator eta = operator_from_json(a.at("eta"), cod.cx->dim(c));
        f.assign.push_back({eta, c});
    }
    std::string why;
    if (!valid_smap(f, &why))
        throw std::runtime_error("map file invalid: " + why);
    return f;
}

struct LoadedMap {
    BistratSet dom, cod;
    SMap f;
};

LoadedMap load_map_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j = json::parse(in);
    LoadedMap m;
    m.dom = bistrat_from_json(j.at("dom"));
    m.cod = bistrat_from_json(j.at("cod"));
    m.f = load_map(j, m.dom, m.cod);
    return m;
}

void emit(const Options& opt, const json& machine, const std::string& human) {
    if (opt.format == "machine")
        std::cout << machine.dump(1) << "\n";
    else
        std::cout << human << "\n";
}

json budgets(const Options& opt) {
    return {{"search_dim", opt.search_dim},
            {"map_budget", opt.map_budget},
            {"co_bound", opt.co_bound}};
}

StratMap incl_from_spec(const std::string& spec, std::vector<StratSet>& keep) {
    // SPEC: horn:n:k | boundary:n | thinness:n:k | globe_boundary:n |
    //       globe_marking:n
    auto parts = [&] {
        std::vector<std::string> out;
        size_t p = 0;
        while (p <= spec.size()) {
            size_t q = spec.find(':', p);
            if (q == std::string::npos) q = spec.size();
            out.push_back(spec.substr(p, q - p));
            p = q + 1;
        }
        return out;
    }();
    auto num = [&](size_t i) { return std::stoi(parts.at(i)); };
    if (parts[0] == "horn") {
        HornShape H = horn(num(1), num(2));
        keep.push_back(H.horn);
        keep.push_back(H.filled);
        return H.incl;
    }
    if (parts[0] == "boundary") {
        BoundaryShape B = boundary_incl(num(1));
        keep.push_back(B.boundary);
        keep.push_back(B.filled);
        return B.incl;
    }
    if (parts[0] == "thinness") {
        StratSet a = delta_k_prime(num(1), num(2));
        StratSet b = delta_k_dprime(num(1), num(2));
        keep.push_back(a);
        keep.push_back(b);
        SMap f = identity_map(*a.cx);
        f.cod = b.cx.get();
        return {a, b, f};
    }
    if (parts[0] == "globe_boundary") {
        const GlobeTower& T = globes(num(1));
        StratSet B = T.boundary[static_cast<size_t>(num(1))];
        StratSet G = T.globe[static_cast<size_t>(num(1))];
        keep.push_back(B);
        keep.push_back(G);
        return {B, G, T.boundary_incl[static_cast<size_t>(num(1))]};
    }
    if (parts[0] == "globe_marking") {
        StratSet G = globe(num(1)), Gt = globe_t(num(1));
        keep.push_back(G);
        keep.push_back(Gt);
        SMap f = identity_map(*G.cx);
        f.cod = Gt.cx.get();
        return {G, Gt, f};
    }
    throw std::runtime_error("unknown inclusion spec: " + spec);
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) return usage();
    std::string cmd = argv[1];
    Options opt;
    for (int i = 2; i < argc; ++i) {
        std::string a = argv[i];
        auto next = [&]() -> std::string {
            if (i + 1 >= argc) throw std::runtime_error("missing value for " + a);
            return argv[++i];
        };
        try {
            if (a == "--search-dim") opt.search_dim = std::stoi(next());
            else if (a == "--map-budget") opt.map_budget = std::stol(next());
            else if (a == "--co-bound") opt.co_bound = std::stoi(next());
            else if (a == "--dim") opt.dim = std::stoi(next());
            else if (a == "--format") opt.format = next();
            else if (a.rfind("--", 0) == 0) opt.named[a.substr(2)] = next();
            else if (a == "-o") opt.named["out"] = next();
            else opt.positional.push_back(a);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
    }
    try {
        if (cmd == "build") {
            if (opt.positional.size() != 1) return usage();
            StratSet X = load_strat(opt.positional[0], opt);
            json j = to_json(X);
            if (opt.named.count("out")) {
                std::ofstream out(opt.named.at("out"));
                out << j.dump(1) << "\n";
            } else {
                std::cout << j.dump(1) << "\n";
            }
            return 0;
        }
        if (cmd == "info") {
            if (opt.positional.size() != 1) return usage();
            StratSet X = load_strat(opt.positional[0], opt);
            json j = object_report(X);
            j["budgets"] = budgets(opt);
            std::string human = "dim " + std::to_string(X.cx->dim_bound()) +
                                ", cells";
            for (int d = 0; d <= X.cx->dim_bound(); ++d)
                human += " " + std::to_string(X.cx->count(d));
            human += ", marked " + std::to_string(X.t.size());
            emit(opt, j, human);
            return 0;
        }
        if (cmd == "eq") {
            if (opt.positional.size() != 2) return usage();
            StratSet A = load_strat(opt.positional[0], opt);
            StratSet B = load_strat(opt.positional[1], opt);
            bool iso = strat_find_iso(A, B).has_value();
            emit(opt, {{"isomorphic", iso}, {"budgets", budgets(opt)}},
                 iso ? "isomorphic" : "not isomorphic");
            return iso ? 0 : 1;
        }
        if (cmd == "saturate") {
            if (opt.positional.size() != 1) return usage();
            ClosureConfig cfg;
            cfg.search_dim = opt.search_dim;
            if (!opt.positional[0].empty() && opt.positional[0][0] == '@') {
                std::ifstream in(opt.positional[0].substr(1));
                json jo = json::parse(in);
                if (jo.contains("c")) {
                    BistratSet X = bistrat_from_json(jo);
                    ClosureReport rep;
                    BistratSet Y = saturate_bimarked(X, cfg, &rep);
                    json j = to_json(Y);
                    j["closure"] = {{"rounds", rep.rounds},
                                    {"added", rep.added},
                                    {"search_dim", cfg.search_dim},
                                    {"complete", rep.complete}};
                    std::cout << j.dump(1) << "\n";
                    return 0;
                }
            }
            StratSet X = load_strat(opt.positional[0], opt);
            // report the input's unmet closure obligations, then close
            json viols = json::array();
            for (const auto& v : closure_violations(X, cfg)) {
                viols.push_back({{"rule", v.rule},
                                 {"witness_cell", v.witness.cell},
                                 {"witness_eta", to_json(v.witness.eta)},
                                 {"added", v.added}});
            }
            ClosureReport rep;
            StratSet Y = saturate_marked(X, cfg, &rep);
            json j = to_json(Y);
            j["closure"] = {{"rounds", rep.rounds},
                            {"added", rep.added},
                            {"search_dim", cfg.search_dim},
                            {"complete", rep.complete},
                            {"violations", viols}};
            std::cout << j.dump(1) << "\n";
            return 0;
        }
        if (cmd == "check-infty") {
            if (opt.positional.size() != 1) return usage();
            StratSet X = load_strat(opt.positional[0], opt);
            InftyReport rep = check_infty(X, opt.dim);
            json j = {{"pass", rep.pass},
                      {"dim", rep.dim},
                      {"checks", rep.checks},
                      {"budgets", budgets(opt)}};
            std::string human = rep.pass
                                    ? "pass (up to dimension " +
                                          std::to_string(rep.dim) + ")"
                                    : "fail";
            if (!rep.pass) {
                j["family"] = rep.failure->family;
                human += ": no filler against " + rep.failure->family;
            }
            emit(opt, j, human);
            return rep.pass ? 0 : 1;
        }
        if (cmd == "rlp") {
            if (opt.positional.size() != 1 || !opt.named.count("i"))
                return usage();
            std::vector<StratSet> keep;
            StratMap i = incl_from_spec(opt.named.at("i"), keep);
            StratSet X = load_strat(opt.positional[0], opt);
            StratMap p = to_terminal(X);
            RlpReport rep = has_rlp(p, i, opt.map_budget);
            json j = {{"squares", rep.squares}, {"budgets", budgets(opt)}};
            std::string verdict = rep.status == RlpStatus::Has ? "has-rlp"
                                  : rep.status == RlpStatus::No
                                      ? "no-rlp"
                                      : "budget-exceeded";
            j["status"] = verdict;
            emit(opt, j, verdict);
            return rep.status == RlpStatus::Has
                       ? 0
                       : rep.status == RlpStatus::No ? 1 : 3;
        }
        if (cmd == "lift") {
            if (!opt.named.count("square")) return usage();
            std::ifstream in(opt.named.at("square"));
            json js = json::parse(in);
            BistratSet K = bistrat_from_json(js.at("i").at("dom"));
            BistratSet L = bistrat_from_json(js.at("i").at("cod"));
            BistratSet X = bistrat_from_json(js.at("p").at("dom"));
            BistratSet Y = bistrat_from_json(js.at("p").at("cod"));
            SMap fi = load_map(js.at("i"), K, L);
            SMap fp = load_map(js.at("p"), X, Y);
            SMap ftop = load_map(js.at("top"), K, X);
            SMap fbot = load_map(js.at("bottom"), L, Y);
            Square sq{StratMap{{K.cx, K.t}, {L.cx, L.t}, fi},
                      StratMap{{X.cx, X.t}, {Y.cx, Y.t}, fp},
                      StratMap{{K.cx, K.t}, {X.cx, X.t}, ftop},
                      StratMap{{L.cx, L.t}, {Y.cx, Y.t}, fbot}};
            if (!square_commutes(sq)) {
                std::cerr << "square does not commute\n";
                return 2;
            }
            auto l = find_lift(sq);
            if (!l) {
                emit(opt, {{"lift", nullptr}}, "no lift");
                return 1;
            }
            json ja = json::array();
            for (const auto& e : l->assign)
                ja.push_back({{"eta", to_json(e.eta)}, {"cell", e.cell}});
            emit(opt, {{"lift", ja}}, "lift found");
            return 0;
        }
        if (cmd == "verify-cert") {
            if (opt.positional.size() != 1) return usage();
            std::ifstream in(opt.positional[0]);
            if (!in) {
                std::cerr << "cannot open " << opt.positional[0] << "\n";
                return 2;
            }
            CertOutcome o = verify_certificate(json::parse(in));
            json j = {{"valid", o.valid}};
            if (!o.valid) {
                j["failed_step"] = o.failed_step;
                j["reason"] = o.reason;
            }
            emit(opt, j,
                 o.valid ? "VALID"
                         : "INVALID (step " + std::to_string(o.failed_step) +
                               ": " + o.reason + ")");
            return o.valid ? 0 : 1;
        }
        if (cmd == "shape") {
            // the catalog by name; bistratified shapes serialize with "c"
            if (opt.positional.size() != 1) return usage();
            const std::string& name = opt.positional[0];
            auto geti = [&](const char* key, int dflt = -1) {
                if (!opt.named.count(key)) {
                    if (dflt >= 0) return dflt;
                    throw std::runtime_error(std::string("shape ") + name +
                                             " needs --" + key);
                }
                return std::stoi(opt.named.at(key));
            };
            json j;
            if (name == "delta") j = to_json(delta(geti("n")));
            else if (name == "delta_t") j = to_json(delta_t(geti("n")));
            else if (name == "delta_k") j = to_json(delta_k(geti("n"), geti("k")));
            else if (name == "delta_k_prime")
                j = to_json(delta_k_prime(geti("n"), geti("k")));
            else if (name == "delta_k_dprime")
                j = to_json(delta_k_dprime(geti("n"), geti("k")));
            else if (name == "eq3") j = to_json(delta3_eq());
            else if (name == "sharp") j = to_json(sharp(geti("n")));
            else if (name == "horn") j = to_json(horn(geti("n"), geti("k")).horn);
            else if (name == "delta_c") j = to_json(delta_c(geti("n")));
            else if (name == "cart_horn_0")
                j = to_json(cart_horn_shape(geti("n"), true));
            else if (name == "cart_horn_n")
                j = to_json(cart_horn_shape(geti("n"), false));
            else if (name == "cart_thin")
                j = to_json(cart_thin(geti("n"), geti("k")));
            else if (name == "cart_thin2")
                j = to_json(cart_thin2(geti("n"), geti("k")));
            else if (name == "oslash" || name == "anti_oslash") {
                StratSet K = certdetail::shape_param(
                    opt.named.count("param") ? opt.named.at("param") : "point");
                j = to_json(oslash(geti("n"), geti("k"), K,
                                   name == "anti_oslash")
                                .whole);
            } else if (name == "globe") j = to_json(globe(geti("n")));
            else if (name == "globe_boundary")
                j = to_json(globe_boundary(geti("n")));
            else if (name == "globe_t") j = to_json(globe_t(geti("n")));
            else {
                std::cerr << "unknown shape: " << name << "\n";
                return 2;
            }
            std::cout << j.dump(1) << "\n";
            return 0;
        }
        if (cmd == "dual") {
            // the duality flag carries the object: dual --op <expr|@file>
            StratSet X, Y;
            if (opt.named.count("op")) {
                X = load_strat(opt.named.at("op"), opt);
                Y = op_dual(X);
            } else if (opt.named.count("co")) {
                X = load_strat(opt.named.at("co"), opt);
                Y = co_dual(X, opt.co_bound);
            } else if (opt.named.count("full")) {
                X = load_strat(opt.named.at("full"), opt);
                Y = full_dual(X, opt.co_bound);
            } else {
                std::cerr << "dual: pass --op x, --co x or --full x\n";
                return 2;
            }
            std::cout << to_json(Y).dump(1) << "\n";
            return 0;
        }
        if (cmd == "cells") {
            if (opt.positional.size() != 1) return usage();
            StratSet X = load_strat(opt.positional[0], opt);
            auto cs = cells_of(X, opt.dim);
            json j = {{"count", cs.size()}, {"dim", opt.dim}};
            emit(opt, j,
                 std::to_string(cs.size()) + " cells of dimension " +
                     std::to_string(opt.dim));
            return 0;
        }
        if (cmd == "compose" || cmd == "equiv") {
            if (opt.positional.size() != 1 || !opt.named.count("a") ||
                !opt.named.count("b"))
                return usage();
            StratSet X = load_strat(opt.positional[0], opt);
            auto cs = cells_of(X, opt.dim);
            size_t ia = std::stoul(opt.named.at("a"));
            size_t ib = std::stoul(opt.named.at("b"));
            if (ia >= cs.size() || ib >= cs.size()) {
                std::cerr << "cell index out of range (have "
                          << cs.size() << ")\n";
                return 2;
            }
            if (cmd == "compose") {
                if (!composable(cs[ia], cs[ib])) {
                    std::cerr << "cells are not composable\n";
                    return 2;
                }
                auto c = compose_cells(X, cs[ia], cs[ib]);
                emit(opt, {{"witness", c.has_value()}},
                     c ? "composition witness found" : "no witness in this "
                                                       "complex");
                return c ? 0 : 1;
            }
            if (!parallel(cs[ia], cs[ib])) {
                std::cerr << "cells are not parallel\n";
                return 2;
            }
            auto w = equivalence_witness(X, cs[ia], cs[ib]);
            emit(opt, {{"witness", w.has_value()}},
                 w ? "thin witness found" : "no thin witness in this complex");
            return w ? 0 : 1;
        }
        if (cmd == "pi") {
            if (opt.positional.size() != 1) return usage();
            StratSet X = load_strat(opt.positional[0], opt);
            HoCategory H = pi_n(X, std::nullopt, std::nullopt, opt.dim);
            int undefined = 0;
            for (const auto& [k, v] : H.table)
                if (v < 0) ++undefined;
            json j = {{"objects", H.objects.size()},
                      {"undefined_composites", undefined},
                      {"fibrant_at_bound", H.fibrant_at_bound},
                      {"bound", H.bound}};
            emit(opt, j,
                 std::to_string(H.objects.size()) + " objects, " +
                     std::to_string(undefined) + " undefined composites" +
                     (H.fibrant_at_bound ? "" :
                      " (complex is not fibrant at this bound; verdicts are "
                      "witness searches)"));
            return 0;
        }
        if (cmd == "check-g-fib" || cmd == "check-ff-es") {
            if (!opt.named.count("map")) return usage();
            LoadedMap m = load_map_file(opt.named.at("map"));
            StratMap p{{m.dom.cx, m.dom.t}, {m.cod.cx, m.cod.t}, m.f};
            if (cmd == "check-g-fib") {
                FibReport rep =
                    check_g_trivial_fibration(p, opt.dim, opt.map_budget);
                json fams = json::array();
                std::string human;
                bool budget = false;
                for (const auto& f : rep.families) {
                    std::string st = f.status == RlpStatus::Has ? "has"
                                     : f.status == RlpStatus::No ? "no"
                                                                 : "budget";
                    if (f.status == RlpStatus::BudgetExceeded) budget = true;
                    fams.push_back({{"family", f.family}, {"status", st}});
                    human += f.family + ": " + st + "\n";
                }
                emit(opt, {{"pass", rep.pass}, {"families", fams},
                           {"budgets", budgets(opt)}},
                     human + (rep.pass ? "pass" : "fail"));
                return budget ? 3 : rep.pass ? 0 : 1;
            }
            FfEsReport rep = check_ff_es(p, opt.dim);
            json j = {{"essentially_surjective", rep.essentially_surjective},
                      {"fully_faithful", rep.fully_faithful},
                      {"notes", rep.notes},
                      {"budgets", budgets(opt)}};
            bool ok = rep.essentially_surjective && rep.fully_faithful;
            emit(opt, j, ok ? "pass" : "fail");
            return ok ? 0 : 1;
        }
        if (cmd == "check-fib") {
            if (!opt.named.count("map") || !opt.named.count("class"))
                return usage();
            LoadedMap m = load_map_file(opt.named.at("map"));
            BistratMap p{m.dom, m.cod, m.f};
            std::string cls = opt.named.at("class");
            FibClass fc = cls == "right"     ? FibClass::Right
                          : cls == "left"    ? FibClass::Left
                          : cls == "coright" ? FibClass::CoRight
                          : cls == "coleft"  ? FibClass::CoLeft
                                             : throw std::runtime_error(
                                                   "unknown class " + cls);
            NaiveFibReport rep =
                check_naive_fibration(p, opt.dim, fc, opt.map_budget);
            json fams = json::array();
            std::string human;
            bool budget = false;
            for (const auto& f : rep.families) {
                std::string st = f.status == RlpStatus::Has ? "has"
                                 : f.status == RlpStatus::No ? "no"
                                                             : "budget";
                if (f.status == RlpStatus::BudgetExceeded) budget = true;
                fams.push_back({{"family", f.family}, {"status", st}});
                human += f.family + ": " + st + "\n";
            }
            emit(opt, {{"pass", rep.pass}, {"families", fams},
                       {"budgets", budgets(opt)}},
                 human + (rep.pass ? "pass" : "fail"));
            return budget ? 3 : rep.pass ? 0 : 1;
        }
        return usage();
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const ExprError& e) {
        std::cerr << "expression error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
