#pragma once

#include <array>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bauer_muir.hpp"
#include "cf.hpp"
#include "errors.hpp"
#include "expression.hpp"
#include "mc.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "rational_function.hpp"

// Documents the tool reads and writes: continued fraction specs, modifying
// factor tuples, shift-ratio targets, and command-line parameter bindings.
// All documents are JSON objects with a fixed key order and a `kind` tag.
// Coefficients stay expression source strings end to end, so saving a loaded
// document reproduces it byte for byte.

namespace gammacf {

using json = nlohmann::ordered_json;

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw config_error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw config_error("cannot write '" + path + "'");
    out << text;
    if (!out) throw config_error("cannot write '" + path + "'");
}

namespace detail {

inline json parse_document(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        throw config_error(std::string(what) + ": not a well-formed document");
    return j;
}

inline void check_kind(const json& j, const char* want, const char* what) {
    auto it = j.find("kind");
    if (it == j.end()) return;
    if (!it->is_string() || it->get<std::string>() != want)
        throw config_error(std::string(what) + ": kind is not '" + want + "'");
}

inline const json& need(const json& j, const char* key, const char* what) {
    auto it = j.find(key);
    if (it == j.end())
        throw config_error(std::string(what) + ": missing field '" + key + "'");
    return *it;
}

inline std::string need_string(const json& j, const char* key, const char* what) {
    const json& v = need(j, key, what);
    if (!v.is_string())
        throw config_error(std::string(what) + ": field '" + key + "' must be a string");
    return v.get<std::string>();
}

inline long need_long(const json& j, const char* key, const char* what) {
    const json& v = need(j, key, what);
    if (!v.is_number_integer())
        throw config_error(std::string(what) + ": field '" + key + "' must be an integer");
    return v.get<long>();
}

inline std::vector<expression> expr_list(const json& v, const char* what) {
    if (!v.is_array()) throw config_error(std::string(what) + ": expected a list");
    std::vector<expression> out;
    for (const auto& e : v) {
        if (!e.is_string())
            throw config_error(std::string(what) + ": coefficients must be strings");
        out.push_back(expression::parse(e.get<std::string>()));
    }
    return out;
}

inline json source_list(const std::vector<expression>& es) {
    json out = json::array();
    for (const auto& e : es) out.push_back(e.source());
    return out;
}

// A rational parsed from a JSON string or integer field.
inline rational as_rational(const json& v, const char* what) {
    if (v.is_number_integer()) return rational(v.get<long>());
    if (v.is_string()) {
        try {
            return rational(v.get<std::string>());
        } catch (const std::invalid_argument&) {
        }
    }
    throw config_error(std::string(what) + ": expected a rational like \"p/q\"");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Polynomial and rational-function formatting. The output parses back through
// the expression grammar, which is how discovered fractions become specs.

inline std::string poly_to_string(const polynomial<rational>& p,
                                  const std::string& var = "x") {
    if (p.degree() < 0) return "0";
    std::string out;
    for (long i = p.degree(); i >= 0; --i) {
        rational c = p.coeff(i);
        if (c.is_zero()) continue;
        std::string mag = c.abs().to_string();
        std::string term;
        if (i == 0)
            term = mag;
        else {
            std::string power = i == 1 ? var : var + "^" + std::to_string(i);
            term = c.abs() == rational(1) ? power : mag + "*" + power;
        }
        if (out.empty())
            out = (c.sign() < 0 ? "-" : "") + term;
        else
            out += (c.sign() < 0 ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Continued fraction spec documents.
//
//   {
//     "kind": "continued_fraction",
//     "parameters": ["x", "alpha", "beta"],
//     "b0": "x",
//     "period": 1,
//     "cases": [{"a": {"num_coeffs": [...], "den_coeffs": [...]},
//                "b": {"num_coeffs": [...]}}],
//     "head":  [{"a": "...", "b": "..."}],          optional explicit terms
//     "front": {"scale": "...", "moebius": false},  optional, see cf_spec
//     "depth": 12                                   optional, finite fraction
//   }
//
// Templates may be omitted entirely when an explicit head covers the whole
// (finite) fraction; den_coeffs may be omitted when the denominator is 1.

inline json cf_spec_to_json(const cf_spec& s) {
    json j;
    j["kind"] = "continued_fraction";
    j["parameters"] = s.parameters;
    if (!s.b0.empty()) j["b0"] = s.b0.source();
    j["period"] = s.period;
    if (!s.a_case.empty()) {
        json cases = json::array();
        for (size_t r = 0; r < s.a_case.size(); ++r) {
            json a, b;
            a["num_coeffs"] = detail::source_list(s.a_case[r].num_coeffs);
            if (!s.a_case[r].den_coeffs.empty())
                a["den_coeffs"] = detail::source_list(s.a_case[r].den_coeffs);
            b["num_coeffs"] = detail::source_list(s.b_case[r].num_coeffs);
            if (!s.b_case[r].den_coeffs.empty())
                b["den_coeffs"] = detail::source_list(s.b_case[r].den_coeffs);
            cases.push_back(json{{"a", std::move(a)}, {"b", std::move(b)}});
        }
        j["cases"] = std::move(cases);
    }
    if (!s.head.empty()) {
        json head = json::array();
        for (const auto& [a, b] : s.head)
            head.push_back(json{{"a", a.source()}, {"b", b.source()}});
        j["head"] = std::move(head);
    }
    if (s.front) {
        j["front"] = json{{"scale", s.front->scale.source()},
                          {"moebius", s.front->moebius}};
    }
    if (s.depth) j["depth"] = *s.depth;
    return j;
}

inline std::string save_cf_spec(const cf_spec& s) { return cf_spec_to_json(s).dump(2) + "\n"; }

inline cf_spec cf_spec_from_json(const json& j) {
    static constexpr const char* what = "cf spec";
    detail::check_kind(j, "continued_fraction", what);
    cf_spec s;
    const json& params = detail::need(j, "parameters", what);
    if (!params.is_array())
        throw config_error(std::string(what) + ": parameters must be a list of names");
    for (const auto& p : params) {
        if (!p.is_string())
            throw config_error(std::string(what) + ": parameters must be a list of names");
        s.parameters.push_back(p.get<std::string>());
    }
    if (auto it = j.find("b0"); it != j.end())
        s.b0 = expression::parse(it->get<std::string>());
    s.period = detail::need_long(j, "period", what);
    if (auto it = j.find("cases"); it != j.end()) {
        if (!it->is_array()) throw config_error(std::string(what) + ": cases must be a list");
        for (const auto& c : *it) {
            coefficient_template a, b;
            const json& ja = detail::need(c, "a", what);
            const json& jb = detail::need(c, "b", what);
            a.num_coeffs = detail::expr_list(detail::need(ja, "num_coeffs", what), what);
            if (auto d = ja.find("den_coeffs"); d != ja.end())
                a.den_coeffs = detail::expr_list(*d, what);
            b.num_coeffs = detail::expr_list(detail::need(jb, "num_coeffs", what), what);
            if (auto d = jb.find("den_coeffs"); d != jb.end())
                b.den_coeffs = detail::expr_list(*d, what);
            s.a_case.push_back(std::move(a));
            s.b_case.push_back(std::move(b));
        }
    }
    if (auto it = j.find("head"); it != j.end()) {
        if (!it->is_array()) throw config_error(std::string(what) + ": head must be a list");
        for (const auto& t : *it)
            s.head.emplace_back(expression::parse(detail::need_string(t, "a", what)),
                                expression::parse(detail::need_string(t, "b", what)));
    }
    if (auto it = j.find("front"); it != j.end()) {
        cf_spec::front_spec f;
        f.scale = expression::parse(detail::need_string(*it, "scale", what));
        if (auto m = it->find("moebius"); m != it->end()) {
            if (!m->is_boolean())
                throw config_error(std::string(what) + ": moebius must be a boolean");
            f.moebius = m->get<bool>();
        }
        s.front = std::move(f);
    }
    if (auto it = j.find("depth"); it != j.end()) {
        if (!it->is_number_integer() || it->get<long>() < 0)
            throw config_error(std::string(what) + ": depth must be a nonnegative integer");
        s.depth = it->get<long>();
    }
    if (s.a_case.empty() && !(s.depth && *s.depth <= static_cast<long>(s.head.size())))
        throw config_error(std::string(what) + ": cases required past the head");
    return s;
}

inline cf_spec load_cf_spec(const std::string& text) {
    return cf_spec_from_json(detail::parse_document(text, "cf spec"));
}

// ---------------------------------------------------------------------------
// Modifying factor documents. The six entries are expression strings over
// x and the fraction's parameters:
//
//   {"kind": "modifying_factors",
//    "modifying_factors": {"even": [u1, v1, w1], "odd": [u2, v2, w2]}}
//
// with r_{2m} = u1 m^2 + v1 m + w1 and r_{2m-1} = u2 m^2 + v2 m + w2.

struct factor_spec {
    std::array<expression, 3> even;
    std::array<expression, 3> odd;
};

inline std::string save_factors(const factor_spec& f) {
    json tuple;
    tuple["even"] = json::array({f.even[0].source(), f.even[1].source(), f.even[2].source()});
    tuple["odd"] = json::array({f.odd[0].source(), f.odd[1].source(), f.odd[2].source()});
    json j;
    j["kind"] = "modifying_factors";
    j["modifying_factors"] = std::move(tuple);
    return j.dump(2) + "\n";
}

inline factor_spec load_factors(const std::string& text) {
    static constexpr const char* what = "factor file";
    json j = detail::parse_document(text, what);
    detail::check_kind(j, "modifying_factors", what);
    const json& tuple = detail::need(j, "modifying_factors", what);
    factor_spec f;
    for (auto [key, slot] : {std::pair{"even", &f.even}, std::pair{"odd", &f.odd}}) {
        auto es = detail::expr_list(detail::need(tuple, key, what), what);
        if (es.size() != 3)
            throw config_error(std::string(what) + ": '" + key + "' needs three entries");
        std::move(es.begin(), es.end(), slot->begin());
    }
    return f;
}

// Environment for structure work: x stays symbolic unless explicitly bound,
// every other binding enters as a constant.
inline std::map<std::string, rational_function> x_env(
    const std::map<std::string, rational>& bindings) {
    std::map<std::string, rational_function> env;
    env.emplace("x", rational_function::x());
    for (const auto& [name, v] : bindings) env.insert_or_assign(name, rational_function(v));
    return env;
}

inline modifying_factors bind_factors(const factor_spec& f,
                                      const std::map<std::string, rational>& bindings) {
    auto env = x_env(bindings);
    modifying_factors mf;
    for (size_t i = 0; i < 3; ++i) {
        mf.even[i] = f.even[i].eval(env);
        mf.odd[i] = f.odd[i].eval(env);
    }
    return mf;
}

// ---------------------------------------------------------------------------
// Shift-ratio target documents for discovery:
//
//   {"kind": "ratio_target", "num": "...", "den": "...", "shift": 2,
//    "leading_order": 2, "leading_constant": "4"}
//
// num/den are expressions in x describing f(x)/f(x+shift) with parameters
// already bound; shift defaults to 1, the hints are optional.

inline shift_ratio_target load_ratio_target(const std::string& text) {
    static constexpr const char* what = "ratio target";
    json j = detail::parse_document(text, what);
    detail::check_kind(j, "ratio_target", what);
    std::map<std::string, rational_function> env{{"x", rational_function::x()}};
    rational_function num = expression::parse(detail::need_string(j, "num", what)).eval(env);
    rational_function den(rational(1));
    if (auto it = j.find("den"); it != j.end())
        den = expression::parse(it->get<std::string>()).eval(env);
    if (den == rational_function())
        throw config_error(std::string(what) + ": zero denominator");
    shift_ratio_target t;
    t.ratio = num / den;
    if (auto it = j.find("shift"); it != j.end()) {
        if (!it->is_number_integer() || it->get<long>() < 1)
            throw config_error(std::string(what) + ": shift must be a positive integer");
        t.shift = it->get<long>();
    }
    if (auto it = j.find("leading_order"); it != j.end()) {
        if (!it->is_number_integer())
            throw config_error(std::string(what) + ": leading_order must be an integer");
        t.leading_order = it->get<long>();
    }
    if (auto it = j.find("leading_constant"); it != j.end())
        t.leading_constant = detail::as_rational(*it, what);
    return t;
}

inline std::string save_ratio_target(const shift_ratio_target& t) {
    json j;
    j["kind"] = "ratio_target";
    j["num"] = poly_to_string(t.ratio.num());
    j["den"] = poly_to_string(t.ratio.den());
    j["shift"] = t.shift;
    if (t.leading_order) j["leading_order"] = *t.leading_order;
    if (t.leading_constant) j["leading_constant"] = t.leading_constant->to_string();
    return j.dump(2) + "\n";
}

// A discovered expansion as a finite spec: no leading term, then one explicit
// head term lambda_j / phi_j(x) per correction level.
inline cf_spec to_cf_spec(const mc_expansion& e) {
    if (e.terms.empty()) throw config_error("no correction levels to serialize");
    cf_spec s;
    s.parameters = {"x"};
    s.b0 = expression::parse("0");
    for (const auto& t : e.terms)
        s.head.emplace_back(expression::parse(t.lambda.to_string()),
                            expression::parse(poly_to_string(t.phi)));
    s.depth = static_cast<long>(s.head.size());
    return s;
}

// ---------------------------------------------------------------------------
// Parameter bindings, written name=value with exact rational values.

inline std::pair<std::string, rational> parse_binding(const std::string& text) {
    auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0)
        throw config_error("binding '" + text + "' is not name=p/q");
    std::string name = text.substr(0, eq);
    try {
        return {std::move(name), rational(text.substr(eq + 1))};
    } catch (const std::invalid_argument&) {
        throw config_error("binding '" + text + "' is not name=p/q");
    }
}

inline std::map<std::string, rational> parse_bindings(const std::vector<std::string>& texts) {
    std::map<std::string, rational> out;
    for (const auto& t : texts) {
        auto [name, v] = parse_binding(t);
        out.insert_or_assign(std::move(name), std::move(v));
    }
    return out;
}

inline std::string format_bindings(const std::map<std::string, rational>& bindings) {
    std::string out;
    for (const auto& [name, v] : bindings) {
        if (!out.empty()) out += ' ';
        out += name + '=' + v.to_string();
    }
    return out;
}

}  // namespace gammacf
