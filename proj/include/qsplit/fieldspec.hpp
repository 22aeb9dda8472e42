#pragma once

/**
 * @file fieldspec.hpp
 * @brief Textual field specifications and their dispatch:
 *        "rational", "quad:<d>", "multi:<d1,d2,...>", "kummer:<alpha>",
 *        "hcf:<d>".
 */

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsplit/classify.hpp"
#include "qsplit/dihedral.hpp"
#include "qsplit/oracle.hpp"

namespace qsplit {

struct FieldSpec {
    enum class Kind { Rational, Quad, Multi, Kummer, Hcf };
    Kind kind = Kind::Rational;
    std::vector<std::int64_t> values; ///< d / d_i list / alpha / d by kind
};

inline const char* to_string(FieldSpec::Kind k) {
    switch (k) {
    case FieldSpec::Kind::Rational: return "rational";
    case FieldSpec::Kind::Quad: return "quad";
    case FieldSpec::Kind::Multi: return "multi";
    case FieldSpec::Kind::Kummer: return "kummer";
    default: return "hcf";
    }
}

namespace detail {

inline std::int64_t parse_int(const std::string& s) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("field spec: '" + s + "' is not an integer");
    }
    if (used != s.size())
        throw std::invalid_argument("field spec: '" + s + "' is not an integer");
    return v;
}

inline std::vector<std::int64_t> parse_int_list(const std::string& s) {
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t comma = s.find(',', pos);
        const std::string item =
            s.substr(pos, comma == std::string::npos ? std::string::npos
                                                     : comma - pos);
        out.push_back(parse_int(item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

} // namespace detail

/// Parse a field specification string; throws std::invalid_argument.
inline FieldSpec parse_field_spec(const std::string& text) {
    if (text == "rational") return {FieldSpec::Kind::Rational, {}};
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("field spec: expected rational, quad:<d>, "
                                    "multi:<d1,d2,...>, kummer:<alpha> or "
                                    "hcf:<d>, got '" + text + "'");
    const std::string head = text.substr(0, colon);
    const std::string body = text.substr(colon + 1);
    if (body.empty())
        throw std::invalid_argument("field spec: missing value in '" + text + "'");
    if (head == "quad") return {FieldSpec::Kind::Quad, {detail::parse_int(body)}};
    if (head == "multi")
        return {FieldSpec::Kind::Multi, detail::parse_int_list(body)};
    if (head == "kummer")
        return {FieldSpec::Kind::Kummer, {detail::parse_int(body)}};
    if (head == "hcf") return {FieldSpec::Kind::Hcf, {detail::parse_int(body)}};
    throw std::invalid_argument("field spec: unknown kind '" + head + "'");
}

/// Classify H_K(p, q) for the field K described by the spec.
inline Decision classify_field_spec(const FieldSpec& spec, PrimeArg p,
                                    PrimeArg q) {
    switch (spec.kind) {
    case FieldSpec::Kind::Rational:
        return oracle::decide_over_Q(p, q);
    case FieldSpec::Kind::Quad:
        return classify_quadratic(SquarefreeD(spec.values.at(0)), p, q);
    case FieldSpec::Kind::Multi: {
        std::vector<SquarefreeD> gens;
        for (std::int64_t d : spec.values) gens.emplace_back(d);
        return classify_multiquadratic(MultiQuadField(std::move(gens)), p, q);
    }
    case FieldSpec::Kind::Kummer:
        return classify_kummer_s3(KummerFieldDesc(spec.values.at(0)), p, q);
    default:
        return classify_hilbert_class_field(
            HilbertClassFieldDesc(SquarefreeD(spec.values.at(0))), p, q);
    }
}

/// Human-readable rendering, e.g. "quad(d=3)" or "multi(d=2,3,5)".
inline std::string describe(const FieldSpec& spec) {
    switch (spec.kind) {
    case FieldSpec::Kind::Rational: return "rational";
    case FieldSpec::Kind::Quad:
        return "quad(d=" + std::to_string(spec.values.at(0)) + ")";
    case FieldSpec::Kind::Multi: {
        std::string out = "multi(d=";
        for (std::size_t i = 0; i < spec.values.size(); ++i)
            out += (i ? "," : "") + std::to_string(spec.values[i]);
        return out + ")";
    }
    case FieldSpec::Kind::Kummer:
        return "kummer(alpha=" + std::to_string(spec.values.at(0)) + ")";
    default:
        return "hcf(d=" + std::to_string(spec.values.at(0)) + ")";
    }
}

} // namespace qsplit
