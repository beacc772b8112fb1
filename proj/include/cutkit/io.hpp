#pragma once

#include <json.hpp>

#include "cutkit/expr.hpp"
#include "cutkit/forms.hpp"
#include "cutkit/verify.hpp"

namespace cutkit {

using nlohmann::json;

// Exact rationals travel as strings "p/q"; plain JSON integers are accepted.
inline Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return rat_parse(j.get<std::string>());
    throw SchemaError("expected rational (string or integer), got " + j.dump());
}

// A Scalar with several radicands serializes as several term entries that
// share the monomial key; "rad" defaults to 1 and is omitted in that case.
inline void scalar_to_entries(const Scalar& c, const json& base, json& terms) {
    for (auto& [rad, part] : c.parts()) {
        json entry = base;
        entry["re"] = rat_str(part.re);
        entry["im"] = rat_str(part.im);
        if (rad != 1) entry["rad"] = rad.str();
        terms.push_back(entry);
    }
}

inline Scalar scalar_from_entry(const json& entry) {
    CRat c{entry.contains("re") ? rat_from_json(entry.at("re")) : Rat(0),
           entry.contains("im") ? rat_from_json(entry.at("im")) : Rat(0)};
    Scalar out = Scalar(c);
    if (entry.contains("rad")) {
        Rat rad = rat_from_json(entry.at("rad"));
        out = out * Scalar::sqrt_of(rad);
    }
    return out;
}

inline json to_json(const HalfFunc& f) {
    json terms = json::array();
    for (auto& [key, c] : f.terms()) {
        json base{{"alpha", key.alpha}, {"k", key.k}, {"m", key.m}};
        scalar_to_entries(c, base, terms);
    }
    return {{"dim", f.base_dim()}, {"terms", terms}};
}

// dim_hint supports two shorthands: a bare rational (constant function) and
// term entries without "alpha" (no x-dependence) or "im" (real coefficient).
inline HalfFunc half_func_from_json(const json& j, int dim_hint = -1) {
    if (j.is_string() || j.is_number_integer()) {
        if (dim_hint < 0) throw SchemaError("constant function needs a model dimension");
        return HalfFunc::constant(dim_hint, Scalar(rat_from_json(j)));
    }
    int dim = j.contains("dim") ? j.at("dim").get<int>() : dim_hint;
    if (dim < 0) throw SchemaError("function is missing \"dim\"");
    HalfFunc f(dim);
    for (auto& entry : j.at("terms")) {
        std::vector<unsigned> alpha =
            entry.contains("alpha") ? entry.at("alpha").get<std::vector<unsigned>>()
                                    : std::vector<unsigned>{};
        HalfKey key{std::move(alpha), entry.value("k", 0), entry.value("m", 0)};
        if (key.m < 0) throw SchemaError("negative half-power in serialized function");
        f.add_term(std::move(key), scalar_from_entry(entry));
    }
    return f;
}

inline json to_json(const DiscFunc& f) {
    json terms = json::array();
    for (auto& [key, c] : f.terms()) {
        json base{{"alpha", key.alpha}, {"p", key.p}, {"q", key.q}};
        scalar_to_entries(c, base, terms);
    }
    return {{"dim", f.base_dim()}, {"terms", terms}};
}

inline DiscFunc disc_func_from_json(const json& j, int dim_hint = -1) {
    if (j.is_string() || j.is_number_integer()) {
        if (dim_hint < 0) throw SchemaError("constant function needs a model dimension");
        return DiscFunc::constant(dim_hint, Scalar(rat_from_json(j)));
    }
    int dim = j.contains("dim") ? j.at("dim").get<int>() : dim_hint;
    if (dim < 0) throw SchemaError("function is missing \"dim\"");
    DiscFunc f(dim);
    for (auto& entry : j.at("terms")) {
        std::vector<unsigned> alpha =
            entry.contains("alpha") ? entry.at("alpha").get<std::vector<unsigned>>()
                                    : std::vector<unsigned>{};
        f.add_term({std::move(alpha), entry.value("p", 0u), entry.value("q", 0u)},
                   scalar_from_entry(entry));
    }
    return f;
}

template <class Model>
json form_to_json(const FormT<Model>& form) {
    json terms = json::array();
    for (auto& [key, coeff] : form.terms()) {
        json names = json::array();
        for (int idx : key) names.push_back(form.covector_name(idx));
        terms.push_back({{"key", names}, {"coeff", to_json(coeff)}});
    }
    return {{"degree", form.degree()}, {"dim", form.base_dim()}, {"terms", terms}};
}

inline json to_json(const HalfForm& form) { return form_to_json(form); }
inline json to_json(const DiscForm& form) { return form_to_json(form); }

inline int covector_index_from_name(const std::string& name, int d, bool half_model) {
    if (name.rfind("dx", 0) == 0) {
        int i = std::atoi(name.c_str() + 2) - 1;
        if (i < 0 || i >= d) throw SchemaError("covector " + name + " out of range");
        return i;
    }
    if (half_model) {
        if (name == "dtheta") return d;
        if (name == "ds") return d + 1;
    } else {
        if (name == "du") return d;
        if (name == "dv") return d + 1;
    }
    throw SchemaError("unknown covector " + name);
}

inline HalfForm half_form_from_json(const json& j) {
    int d = j.at("dim").get<int>();
    HalfForm form(d, j.at("degree").get<int>());
    for (auto& term : j.at("terms")) {
        std::vector<int> key;
        for (auto& name : term.at("key"))
            key.push_back(covector_index_from_name(name.get<std::string>(), d, true));
        form.add_term(std::move(key), half_func_from_json(term.at("coeff")));
    }
    return form;
}

inline DiscForm disc_form_from_json(const json& j) {
    int d = j.at("dim").get<int>();
    DiscForm form(d, j.at("degree").get<int>());
    for (auto& term : j.at("terms")) {
        std::vector<int> key;
        for (auto& name : term.at("key"))
            key.push_back(covector_index_from_name(name.get<std::string>(), d, false));
        form.add_term(std::move(key), disc_func_from_json(term.at("coeff")));
    }
    return form;
}

// Expression trees: {"op": ..., "args": [...]} with exact rational leaves.
// Shorthand accepted on input: a bare string or integer is a constant.
inline json to_json(const Expr& e) {
    using Op = Expr::Op;
    switch (e.op()) {
        case Op::Const: return {{"op", "const"}, {"value", rat_str(e.value())}};
        case Op::Var: return {{"op", "var"}, {"index", e.var()}};
        case Op::Pow: return {{"op", "pow"}, {"exp", e.ipow()}, {"args", {to_json(e.args()[0])}}};
        default: break;
    }
    static const std::map<Op, std::string> names{
        {Op::Add, "add"}, {Op::Sub, "sub"}, {Op::Mul, "mul"}, {Op::Div, "div"},
        {Op::Neg, "neg"}, {Op::Sin, "sin"}, {Op::Cos, "cos"}, {Op::Exp, "exp"},
        {Op::Sqrt, "sqrt"}};
    json args = json::array();
    for (auto& a : e.args()) args.push_back(to_json(a));
    return {{"op", names.at(e.op())}, {"args", args}};
}

inline Expr expr_from_json(const json& j) {
    if (j.is_string() || j.is_number_integer()) return Expr::constant(rat_from_json(j));
    std::string op = j.at("op").get<std::string>();
    auto arg = [&](size_t i) { return expr_from_json(j.at("args").at(i)); };
    if (op == "const") return Expr::constant(rat_from_json(j.at("value")));
    if (op == "var") return Expr::variable(j.at("index").get<int>());
    if (op == "add") return arg(0) + arg(1);
    if (op == "sub") return arg(0) - arg(1);
    if (op == "mul") return arg(0) * arg(1);
    if (op == "div") return arg(0) / arg(1);
    if (op == "neg") return -arg(0);
    if (op == "pow") return arg(0).pow(j.at("exp").get<int>());
    if (op == "sin") return Expr::sin(arg(0));
    if (op == "cos") return Expr::cos(arg(0));
    if (op == "exp") return Expr::exp(arg(0));
    if (op == "sqrt") return Expr::sqrt(arg(0));
    throw SchemaError("unknown expression op '" + op + "'");
}

inline json to_json(const CheckResult& r) {
    json witnesses = json::array();
    for (auto& w : r.witnesses)
        witnesses.push_back(
            {{"description", w.description}, {"point", w.point}, {"residual", w.residual}});
    return {{"name", r.name},
            {"status", CheckResult::status_str(r.status)},
            {"witnesses", witnesses},
            {"tolerances", r.tolerances},
            {"seed", r.seed},
            {"trials", r.trials},
            {"message", r.message}};
}

}  // namespace cutkit
