#pragma once

/**
 * @file json_io.hpp
 * @brief JSON serialization of decisions, certificates and benchmark rows.
 */

#include <nlohmann/json.hpp>

#include "qsplit/bench.hpp"
#include "qsplit/decision.hpp"
#include "qsplit/fieldspec.hpp"

namespace qsplit {

inline nlohmann::json to_json(const SymbolEval& s) {
    return {{"name", s.name}, {"kind", s.kind}, {"args", s.args},
            {"value", s.value}};
}

inline nlohmann::json to_json(const Certificate& c) {
    nlohmann::json symbols = nlohmann::json::array();
    for (const SymbolEval& s : c.symbols) symbols.push_back(to_json(s));
    return {{"clause", c.clause},
            {"delegated", c.delegated},
            {"swapped", c.swapped},
            {"symbols", symbols}};
}

inline nlohmann::json to_json(const FieldSpec& spec) {
    nlohmann::json j{{"kind", to_string(spec.kind)}};
    switch (spec.kind) {
    case FieldSpec::Kind::Rational: break;
    case FieldSpec::Kind::Multi: j["d"] = spec.values; break;
    case FieldSpec::Kind::Kummer: j["alpha"] = spec.values.at(0); break;
    default: j["d"] = spec.values.at(0); break;
    }
    return j;
}

/// Full result document for `classify --json`.
inline nlohmann::json to_json(const FieldSpec& spec, std::int64_t p,
                              std::int64_t q, const Decision& d) {
    return {{"field", to_json(spec)},
            {"p", p},
            {"q", q},
            {"verdict", to_string(d.verdict)},
            {"certificate", to_json(d.certificate)}};
}

inline SymbolEval symbol_from_json(const nlohmann::json& j) {
    SymbolEval s;
    s.name = j.at("name").get<std::string>();
    s.kind = j.at("kind").get<std::string>();
    s.args = j.at("args").get<std::vector<std::int64_t>>();
    s.value = j.at("value").get<std::int64_t>();
    return s;
}

inline Certificate certificate_from_json(const nlohmann::json& j) {
    Certificate c;
    c.clause = j.at("clause").get<std::string>();
    c.delegated = j.at("delegated").get<bool>();
    c.swapped = j.at("swapped").get<bool>();
    for (const nlohmann::json& s : j.at("symbols"))
        c.symbols.push_back(symbol_from_json(s));
    return c;
}

inline Decision decision_from_json(const nlohmann::json& j) {
    Decision d;
    d.verdict = j.at("verdict").get<std::string>() == "Split"
                    ? Verdict::Split
                    : Verdict::Division;
    d.certificate = certificate_from_json(j.at("certificate"));
    return d;
}

/// One JSON-lines record for a benchmark case.
inline nlohmann::json to_json(const bench::BenchCase& c, bench::Method m,
                              const bench::CaseRecord& rec) {
    return {{"field", c.ds},
            {"p", c.p},
            {"q", c.q},
            {"verdict", to_string(rec.verdict)},
            {"certificate", to_json(rec.certificate)},
            {"method", bench::to_string(m)},
            {"micros", rec.micros}};
}

} // namespace qsplit
