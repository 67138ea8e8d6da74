#pragma once

#include <json.hpp>

#include "marking.hpp"

namespace complicial {

using nlohmann::json;

inline json to_json(const Operator& u) {
    json j = json::array();
    for (int v : u.images()) j.push_back(v);
    return j;
}

inline json to_json(const Complex& C) {
    json cells = json::array();
    for (CellId c = 0; c < C.size(); ++c) {
        json faces = json::array();
        for (int i = 0; C.dim(c) > 0 && i <= C.dim(c); ++i) {
            const auto& f = C.face(c, i);
            faces.push_back({{"eta", to_json(f.eta)}, {"cell", f.cell}});
        }
        cells.push_back({{"id", c}, {"dim", C.dim(c)}, {"faces", faces}});
    }
    return {{"dim_bound", C.dim_bound()}, {"cells", cells}};
}

inline json to_json(const StratSet& X) {
    json j = to_json(*X.cx);
    j["t"] = json::array();
    for (CellId c : X.t) j["t"].push_back(c);
    return j;
}

inline json to_json(const BistratSet& X) {
    json j = to_json(*X.cx);
    j["t"] = json::array();
    for (CellId c : X.t) j["t"].push_back(c);
    j["c"] = json::array();
    for (CellId c : X.c) j["c"].push_back(c);
    return j;
}

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Operator operator_from_json(const json& j, int cod) {
    std::vector<int> img;
    for (const auto& v : j) img.push_back(v.get<int>());
    Operator u(std::move(img), cod);
    if (!u.is_monotone()) throw SchemaError("operator not monotone");
    return u;
}

inline BistratSet bistrat_from_json(const json& j) {
    if (!j.contains("cells")) throw SchemaError("missing field: cells");
    auto cx = std::make_shared<Complex>();
    int next = 0;
    for (const auto& jc : j.at("cells")) {
        int id = jc.at("id").get<int>();
        int dim = jc.at("dim").get<int>();
        if (id != next++)
            throw SchemaError("cell ids must be consecutive from 0");
        std::vector<SimplexExpr> faces;
        if (dim > 0) {
            const auto& jf = jc.at("faces");
            if (static_cast<int>(jf.size()) != dim + 1)
                throw SchemaError("cell " + std::to_string(id) +
                                  ": wrong number of faces");
            for (const auto& f : jf) {
                CellId fc = f.at("cell").get<int>();
                if (fc < 0 || fc >= cx->size())
                    throw SchemaError("cell " + std::to_string(id) +
                                      ": face cell out of range");
                Operator eta = operator_from_json(f.at("eta"), cx->dim(fc));
                if (!eta.is_surjective() || eta.dom_rank() != dim - 1)
                    throw SchemaError("cell " + std::to_string(id) +
                                      ": eta not a surjection of the right rank");
                faces.push_back({eta, fc});
            }
        }
        cx->add_cell(dim, std::move(faces));
    }
    cx->validate();
    BistratSet X{cx, {}, {}};
    auto read_marking = [&](const char* key) {
        Marking m;
        if (!j.contains(key)) return m;
        for (const auto& v : j.at(key)) {
            CellId c = v.get<int>();
            if (c < 0 || c >= cx->size() || cx->dim(c) < 1)
                throw SchemaError(std::string("marking '") + key +
                                  "' names an invalid cell " +
                                  std::to_string(c));
            m.insert(c);
        }
        return m;
    };
    X.t = read_marking("t");
    X.c = j.contains("c") ? read_marking("c") : X.t;
    for (CellId c : X.t)
        if (!X.c.count(c))
            throw SchemaError("thin cell " + std::to_string(c) +
                              " is not cartesian (t must be inside c)");
    return X;
}

inline StratSet strat_from_json(const json& j) {
    BistratSet X = bistrat_from_json(j);
    return {X.cx, X.t};
}

} // namespace complicial
