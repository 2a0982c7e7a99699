#pragma once

#include <string>

#include <json.hpp>

#include "qshuffle/element.hpp"

namespace qshuffle {

using nlohmann::json;

// ---------------------------------------------------------------------------
// node-tagged element trees; exact rationals travel as strings
// ---------------------------------------------------------------------------

inline json to_json(const Rat& r) { return r.str(); }
inline Rat rat_from_json(const json& j) { return Rat(j.get<std::string>()); }

inline json to_json(const DegreeVector& d) { return d.counts; }

inline const char* builtin_name(BuiltinKind k) {
    switch (k) {
        case BuiltinKind::P: return "P";
        case BuiltinKind::Pstar: return "Pstar";
        case BuiltinKind::T: return "t";
        case BuiltinKind::J: return "J";
        case BuiltinKind::Jstar: return "Jstar";
        case BuiltinKind::G: return "G";
        case BuiltinKind::Gstar: return "Gstar";
        case BuiltinKind::EpsN: return "EpsN";
        case BuiltinKind::Ic: return "Ic";
        case BuiltinKind::Itilde: return "Itilde";
    }
    return "?";
}

inline json element_to_json(const Elem& e) {
    json j;
    switch (e.kind) {
        case NodeKind::Generator:
            j["op"] = "gen";
            j["color"] = e.gen_color;
            j["exp"] = e.gen_exp;
            break;
        case NodeKind::Sum: {
            j["op"] = "sum";
            json terms = json::array();
            for (const auto& k : e.kids) terms.push_back(element_to_json(*k));
            j["terms"] = std::move(terms);
            break;
        }
        case NodeKind::ScalarMul:
            j["op"] = "smul";
            j["coeff"] = to_json(e.scalar);
            j["term"] = element_to_json(*e.kids[0]);
            break;
        case NodeKind::Product:
            j["op"] = "prod";
            j["left"] = element_to_json(*e.kids[0]);
            j["right"] = element_to_json(*e.kids[1]);
            break;
        case NodeKind::Builtin: {
            j["op"] = "builtin";
            j["name"] = builtin_name(e.builtin.kind);
            j["N"] = e.builtin.N;
            switch (e.builtin.kind) {
                case BuiltinKind::T:
                    j["i"] = e.builtin.i;
                    break;
                case BuiltinKind::J:
                case BuiltinKind::Jstar:
                    j["i"] = e.builtin.i;
                    j["c"] = e.builtin.c;
                    break;
                case BuiltinKind::G:
                case BuiltinKind::Gstar:
                    j["r"] = e.builtin.r;
                    break;
                case BuiltinKind::EpsN:
                    j["which"] = e.builtin.which;
                    break;
                case BuiltinKind::Ic:
                case BuiltinKind::Itilde:
                    j["c"] = e.builtin.c;
                    j["M"] = e.builtin.N;
                    j["N2"] = e.builtin.N2;
                    break;
                default:
                    break;
            }
            break;
        }
        case NodeKind::Explicit: {
            j["op"] = "explicit";
            j["degree"] = to_json(e.degree);
            json terms = json::array();
            for (const auto& [exps, c] : e.numerator.terms()) {
                json t;
                t["coeff"] = to_json(c);
                t["exps"] = exps;
                terms.push_back(std::move(t));
            }
            j["terms"] = std::move(terms);
            break;
        }
    }
    return j;
}

inline json element_to_json(const AlgebraSignature& sig, const Elem& e) {
    json j;
    j["m"] = sig.m;
    j["n"] = sig.n;
    j["element"] = element_to_json(e);
    return j;
}

inline ElemPtr element_from_json(const AlgebraSignature& sig, const json& j) {
    const std::string op = j.at("op").get<std::string>();
    if (op == "gen") return gen(sig, j.at("color").get<int>(), j.at("exp").get<long>());
    if (op == "sum") {
        std::vector<ElemPtr> terms;
        for (const auto& t : j.at("terms")) terms.push_back(element_from_json(sig, t));
        return sum(std::move(terms));
    }
    if (op == "smul")
        return smul(rat_from_json(j.at("coeff")), element_from_json(sig, j.at("term")));
    if (op == "prod")
        return prod(element_from_json(sig, j.at("left")), element_from_json(sig, j.at("right")));
    if (op == "builtin") {
        const std::string name = j.at("name").get<std::string>();
        int N = j.at("N").get<int>();
        if (name == "P") return builtin_P(sig, N, false);
        if (name == "Pstar") return builtin_P(sig, N, true);
        if (name == "t") return builtin_t(sig, j.at("i").get<int>(), N);
        if (name == "J") return builtin_J(sig, j.at("i").get<int>(), j.at("c").get<long>(), N, false);
        if (name == "Jstar")
            return builtin_J(sig, j.at("i").get<int>(), j.at("c").get<long>(), N, true);
        if (name == "G") return builtin_G(sig, j.at("r").get<int>(), N, false);
        if (name == "Gstar") return builtin_G(sig, j.at("r").get<int>(), N, true);
        if (name == "EpsN") return builtin_eps(sig, N, j.at("which").get<int>());
        if (name == "Ic")
            return builtin_I(sig, j.at("c").get<long>(), j.at("M").get<int>(),
                             j.at("N2").get<int>(), false);
        if (name == "Itilde")
            return builtin_I(sig, j.at("c").get<long>(), j.at("M").get<int>(),
                             j.at("N2").get<int>(), true);
        throw std::invalid_argument("unknown builtin name: " + name);
    }
    if (op == "explicit") {
        DegreeVector deg(j.at("degree").get<std::vector<int>>());
        auto cat = explicit_catalog(sig, deg);
        SparseLaurent num;
        for (const auto& t : j.at("terms")) {
            auto exps = t.at("exps").get<std::vector<int>>();
            if (exps.size() != cat->size())
                throw std::invalid_argument("explicit term exponent arity mismatch");
            num = num + SparseLaurent::monomial(cat, exps, rat_from_json(t.at("coeff")));
        }
        return explicit_elem(sig, deg, num);
    }
    throw std::invalid_argument("unknown element op: " + op);
}

inline ElemPtr element_from_json(const json& j) {
    AlgebraSignature sig(j.at("m").get<int>(), j.at("n").get<int>());
    return element_from_json(sig, j.at("element"));
}

// ---------------------------------------------------------------------------
// points: parameters plus a variable table
// ---------------------------------------------------------------------------

inline json point_to_json(const ParamPoint<Rat>& p, const VarTable<Rat>& x) {
    json j;
    j["q"] = to_json(p.q);
    j["d"] = to_json(p.d);
    json s = json::array();
    for (const auto& v : p.s) s.push_back(to_json(v));
    j["s"] = std::move(s);
    if (p.kappa) j["kappa"] = to_json(*p.kappa);
    json groups = json::array();
    for (const auto& grp : x.v) {
        json g = json::array();
        for (const auto& v : grp) g.push_back(to_json(v));
        groups.push_back(std::move(g));
    }
    j["x"] = std::move(groups);
    return j;
}

inline std::pair<ParamPoint<Rat>, VarTable<Rat>> point_from_json(const json& j) {
    ParamPoint<Rat> p;
    p.q = rat_from_json(j.at("q"));
    p.d = rat_from_json(j.at("d"));
    for (const auto& v : j.at("s")) p.s.push_back(rat_from_json(v));
    if (j.contains("kappa")) p.kappa = rat_from_json(j.at("kappa"));
    VarTable<Rat> x;
    for (const auto& grp : j.at("x")) {
        std::vector<Rat> g;
        for (const auto& v : grp) g.push_back(rat_from_json(v));
        x.v.push_back(std::move(g));
    }
    return {std::move(p), std::move(x)};
}

}  // namespace qshuffle
