// JSON encodings for exact values, codes, and reports. All encodings are
// deterministic: ordered keys, arbitrary-precision integers as decimal
// strings, and a clearly labeled non-authoritative decimal convenience
// field next to each exact radical.
#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "piqec/kl.hpp"
#include "piqec/pr_system.hpp"

namespace piqec {

using Json = nlohmann::ordered_json;

inline std::string decimal_15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

inline Json to_json(const Radical& r) {
    return Json{{"num", r.coef.get_num().get_str()},
                {"den", r.coef.get_den().get_str()},
                {"rad", r.rad.get_str()},
                {"approx", decimal_15(r.to_double())}};
}

inline Radical radical_from_json(const Json& j) {
    // base 10 forced: default base detection reads leading zeros as octal
    Int num(j.at("num").get<std::string>(), 10);
    Int den(j.at("den").get<std::string>(), 10);
    Int rad(j.at("rad").get<std::string>(), 10);
    if (den <= 0 || rad <= 0) throw std::invalid_argument("radical_from_json: bad fields");
    Rational coef(num, den);
    coef.canonicalize();
    Radical r(coef, rad);
    // re-canonicalize untrusted input
    if (!r.is_zero()) {
        auto [s, d] = squarefree_decompose(r.rad);
        r = Radical(r.coef * Rational(s), d);
    }
    return r;
}

inline Json to_json(const RadicalSum& s) {
    Json arr = Json::array();
    for (const auto& [rad, coef] : s.terms())
        arr.push_back(to_json(Radical(coef, rad)));
    return arr;
}

inline Json to_json(const PICode& code) {
    Json a = Json::array(), b = Json::array();
    for (const auto& r : code.alpha) a.push_back(to_json(r));
    for (const auto& r : code.beta) b.push_back(to_json(r));
    return Json{{"n", code.n}, {"label", code.label}, {"alpha", a}, {"beta", b}};
}

inline PICode picode_from_json(const Json& j) {
    PICode code;
    code.n = j.at("n").get<long>();
    code.label = j.value("label", std::string{});
    for (const auto& e : j.at("alpha")) code.alpha.push_back(radical_from_json(e));
    for (const auto& e : j.at("beta")) code.beta.push_back(radical_from_json(e));
    if (static_cast<long>(code.alpha.size()) != code.n + 1 ||
        static_cast<long>(code.beta.size()) != code.n + 1)
        throw std::invalid_argument("picode_from_json: coefficient length mismatch");
    auto [c1, c2a, c2b] = code_inner_products(code);
    code.normalized = c1.is_zero() && c2a.is_zero() && c2b.is_zero();
    return code;
}

inline Json to_json(const ConditionReport& r) {
    return Json{{"condition", r.condition}, {"a", r.a},       {"b", r.b},
                {"t", r.t},                 {"residual", to_json(r.residual)},
                {"passed", r.passed}};
}

inline Json to_json(const std::vector<ConditionReport>& reports) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr;
}

inline Json to_json(const PRSolution& s) {
    Json q = Json::array(), qr = Json::array();
    for (double v : s.q) q.push_back(decimal_15(v));
    for (const auto& v : s.q_rational) qr.push_back(v.get_str());
    return Json{{"q", q}, {"q_rational", qr}, {"max_residual", s.max_residual}};
}

}  // namespace piqec
