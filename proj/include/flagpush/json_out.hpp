#pragma once

#include <json.hpp>

#include "flagpush/poly.hpp"
#include "flagpush/rootsys.hpp"
#include "flagpush/verify.hpp"

namespace flagpush {

using OrderedJson = nlohmann::ordered_json;

// Exactness survives serialization: coefficients are "a" or "a/b" strings,
// monomials are exponent arrays, never floats.
inline OrderedJson poly_to_json(const Polynomial& p) {
    OrderedJson j;
    j["var_class"] = var_class_name(p.var_class());
    j["rank"] = p.rank();
    j["pretty"] = p.to_string();
    OrderedJson terms = OrderedJson::array();
    for (const auto& [e, c] : p.terms()) {
        OrderedJson t;
        t["monomial"] = e;
        t["coeff"] = to_string(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

inline OrderedJson weights_to_json(const std::vector<Weight>& ws) {
    OrderedJson arr = OrderedJson::array();
    for (const Weight& w : ws) arr.push_back(w.coords);
    return arr;
}

inline OrderedJson report_to_json(const VerifyReport& report) {
    OrderedJson arr = OrderedJson::array();
    for (const CheckResult& c : report.checks) {
        OrderedJson j;
        j["name"] = c.name;
        j["status"] = c.pass ? "pass" : "fail";
        j["cases"] = c.cases;
        if (!c.pass) j["witness"] = c.witness;
        arr.push_back(std::move(j));
    }
    return arr;
}

} // namespace flagpush
