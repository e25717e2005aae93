#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "torsupp/arrangement.hpp"
#include "torsupp/oracle.hpp"
#include "torsupp/torus.hpp"
#include "torsupp/zeta.hpp"

namespace torsupp {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Primitive helpers: every malformed input surfaces as input_error.
// ---------------------------------------------------------------------------

inline json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("malformed JSON: ") + e.what());
    }
}

namespace detail {

inline const json& expect_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw input_error(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

inline std::int64_t expect_int(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw input_error(std::string("expected integer for ") + what);
    return j.get<std::int64_t>();
}

inline std::size_t expect_size(const json& j, const char* what) {
    const std::int64_t value = expect_int(j, what);
    if (value < 0)
        throw input_error(std::string("expected nonnegative integer for ") + what);
    return static_cast<std::size_t>(value);
}

inline std::string expect_string(const json& j, const char* what) {
    if (!j.is_string())
        throw input_error(std::string("expected string for ") + what);
    return j.get<std::string>();
}

inline const json& expect_array(const json& j, const char* what) {
    if (!j.is_array())
        throw input_error(std::string("expected array for ") + what);
    return j;
}

inline std::int64_t json_int(const Int& value) {
    if (value < std::numeric_limits<std::int64_t>::min() ||
        value > std::numeric_limits<std::int64_t>::max())
        throw internal_error("integer too large for JSON output");
    return value.convert_to<std::int64_t>();
}

inline IntVector int_vector_from_json(const json& j, const char* what) {
    IntVector result;
    for (const json& entry : expect_array(j, what))
        result.push_back(Int(expect_int(entry, what)));
    return result;
}

inline json int_vector_to_json(const IntVector& v) {
    json array = json::array();
    for (const Int& entry : v)
        array.push_back(json_int(entry));
    return array;
}

// Rationals arrive as strings "p/q"; bare JSON integers are also accepted.
inline Rational rational_from_json(const json& j, const char* what) {
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(Int(j.get<std::int64_t>()));
    throw input_error(std::string("expected rational string for ") + what);
}

} // namespace detail

// ---------------------------------------------------------------------------
// SupportSet <-> { "r": n, "components": [ { "a": [...], "q": "p/q" } ] }
// ---------------------------------------------------------------------------

inline json support_to_json(const SupportSet& s) {
    json components = json::array();
    for (const TranslatedSubtorus& c : s.components)
        components.push_back(json{{"a", detail::int_vector_to_json(c.exponents)},
                                  {"q", to_string(c.translation)}});
    return json{{"r", s.dimension}, {"components", std::move(components)}};
}

inline SupportSet support_from_json(const json& j) {
    const std::size_t dimension = detail::expect_size(detail::expect_field(j, "r"), "\"r\"");
    std::vector<TranslatedSubtorus> components;
    for (const json& entry : detail::expect_array(detail::expect_field(j, "components"),
                                                  "\"components\"")) {
        IntVector exponents =
            detail::int_vector_from_json(detail::expect_field(entry, "a"), "\"a\"");
        Rational translation =
            detail::rational_from_json(detail::expect_field(entry, "q"), "\"q\"");
        components.push_back(make_subtorus(dimension, exponents, translation));
    }
    return make_support(dimension, std::move(components));
}

// ---------------------------------------------------------------------------
// FactoredTorusFunction <-> { "r": n, "factors": [ { "a": [...], "e": int } ] }
// ---------------------------------------------------------------------------

inline json function_to_json(const FactoredTorusFunction& f) {
    json factors = json::array();
    for (const MonomialFactor& factor : f.factors)
        factors.push_back(json{{"a", detail::int_vector_to_json(factor.exponents)},
                               {"e", detail::json_int(factor.power)}});
    return json{{"r", f.dimension}, {"factors", std::move(factors)}};
}

inline FactoredTorusFunction function_from_json(const json& j) {
    const std::size_t dimension = detail::expect_size(detail::expect_field(j, "r"), "\"r\"");
    std::vector<MonomialFactor> raw;
    for (const json& entry : detail::expect_array(detail::expect_field(j, "factors"),
                                                  "\"factors\"")) {
        raw.push_back(MonomialFactor{
            detail::int_vector_from_json(detail::expect_field(entry, "a"), "\"a\""),
            Int(detail::expect_int(detail::expect_field(entry, "e"), "\"e\""))});
    }
    return canonicalize(dimension, raw);
}

// ---------------------------------------------------------------------------
// ResolutionData <-> { "r", "noninvertible", "strata": [ { "name", "divisors":
// [ { "label", "a", "chi" } ] } ] }; "noninvertible" defaults to all-true.
// ---------------------------------------------------------------------------

inline json resolution_to_json(const ResolutionData& data) {
    json strata = json::array();
    for (const Stratum& stratum : data.strata) {
        json divisors = json::array();
        for (const DivisorRecord& divisor : stratum.divisors)
            divisors.push_back(json{{"label", divisor.label},
                                    {"a", detail::int_vector_to_json(divisor.orders)},
                                    {"chi", detail::json_int(divisor.euler)}});
        strata.push_back(json{{"name", stratum.name}, {"divisors", std::move(divisors)}});
    }
    json flags = json::array();
    for (const bool flag : data.noninvertible)
        flags.push_back(flag);
    return json{{"r", data.dimension},
                {"noninvertible", std::move(flags)},
                {"strata", std::move(strata)}};
}

inline ResolutionData resolution_from_json(const json& j) {
    ResolutionData data;
    data.dimension = detail::expect_size(detail::expect_field(j, "r"), "\"r\"");
    if (j.is_object() && j.contains("noninvertible")) {
        for (const json& flag :
             detail::expect_array(j.at("noninvertible"), "\"noninvertible\"")) {
            if (!flag.is_boolean())
                throw input_error("expected boolean in \"noninvertible\"");
            data.noninvertible.push_back(flag.get<bool>());
        }
    } else {
        data.noninvertible.assign(data.dimension, true);
    }
    for (const json& stratum_json :
         detail::expect_array(detail::expect_field(j, "strata"), "\"strata\"")) {
        Stratum stratum;
        stratum.name = detail::expect_string(detail::expect_field(stratum_json, "name"),
                                             "stratum \"name\"");
        for (const json& divisor_json : detail::expect_array(
                 detail::expect_field(stratum_json, "divisors"), "\"divisors\"")) {
            stratum.divisors.push_back(DivisorRecord{
                detail::expect_string(detail::expect_field(divisor_json, "label"),
                                      "divisor \"label\""),
                detail::int_vector_from_json(detail::expect_field(divisor_json, "a"),
                                             "\"a\""),
                Int(detail::expect_int(detail::expect_field(divisor_json, "chi"),
                                       "\"chi\""))});
        }
        data.strata.push_back(std::move(stratum));
    }
    validate_resolution(data);
    return data;
}

// ---------------------------------------------------------------------------
// SpecializationMatrix <-> { "M": [[naturals]] }
// ---------------------------------------------------------------------------

inline json matrix_to_json(const SpecializationMatrix& m) {
    json rows = json::array();
    for (const IntVector& row : m.rows)
        rows.push_back(detail::int_vector_to_json(row));
    return json{{"M", std::move(rows)}};
}

inline SpecializationMatrix matrix_from_json(const json& j) {
    std::vector<IntVector> rows;
    for (const json& row : detail::expect_array(detail::expect_field(j, "M"), "\"M\""))
        rows.push_back(detail::int_vector_from_json(row, "\"M\""));
    return make_specialization_matrix(std::move(rows));
}

// ---------------------------------------------------------------------------
// Arrangement <-> { "n": int, "forms": [ ["c0", "c1", ..., "cn"], ... ] }
// ---------------------------------------------------------------------------

inline json arrangement_to_json(const Arrangement& arrangement) {
    json forms = json::array();
    for (const Hyperplane& h : arrangement.hyperplanes) {
        json form = json::array();
        form.push_back(to_string(h.constant));
        for (const Int& coefficient : h.normal)
            form.push_back(to_string(Rational(coefficient)));
        forms.push_back(std::move(form));
    }
    return json{{"n", arrangement.ambient}, {"forms", std::move(forms)}};
}

inline Arrangement arrangement_from_json(const json& j) {
    const std::size_t ambient = detail::expect_size(detail::expect_field(j, "n"), "\"n\"");
    std::vector<std::vector<Rational>> forms;
    for (const json& form_json :
         detail::expect_array(detail::expect_field(j, "forms"), "\"forms\"")) {
        std::vector<Rational> form;
        for (const json& coefficient : detail::expect_array(form_json, "form"))
            form.push_back(detail::rational_from_json(coefficient, "form coefficient"));
        forms.push_back(std::move(form));
    }
    return make_arrangement(ambient, forms);
}

// ---------------------------------------------------------------------------
// Lattice, consistency, and report output (1-based hyperplane indices).
// ---------------------------------------------------------------------------

inline json indices_to_json(const std::vector<std::size_t>& indices) {
    json array = json::array();
    for (std::size_t i : indices)
        array.push_back(i + 1);
    return array;
}

inline json lattice_to_json(const IntersectionLattice& lattice) {
    json edges = json::array();
    for (const Edge& edge : lattice.edges)
        edges.push_back(json{{"indices", indices_to_json(edge.indices)},
                             {"codim", edge.codim},
                             {"dense", edge.dense}});
    return json{{"edges", std::move(edges)}};
}

inline json consistency_to_json(const ConsistencyResult& result) {
    json out{{"consistent", result.consistent}};
    if (!result.consistent) {
        out["only_dense_route"] = support_to_json(result.only_dense_route);
        out["only_resolution_route"] = support_to_json(result.only_resolution_route);
    }
    return out;
}

inline json report_to_json(const SimplicityReport& report) {
    json alpha = json::array();
    for (const Rational& angle : report.alpha.angles)
        alpha.push_back(to_string(angle));
    json witnesses = json::array();
    for (const auto& edge : report.edge_witnesses)
        witnesses.push_back(json{{"edge", indices_to_json(edge)}});
    for (const auto& divisor : report.divisor_witnesses)
        witnesses.push_back(json{{"stratum", divisor.stratum},
                                 {"divisor", divisor.divisor.label}});
    json notes = json::array();
    for (const std::string& note : report.notes)
        notes.push_back(note);
    return json{{"alpha", std::move(alpha)},
                {"in_support", report.in_support},
                {"witnesses", std::move(witnesses)},
                {"verdicts",
                 json{{"Rj_star_simple", report.verdicts.rj_star_simple},
                      {"j_shriek_simple", report.verdicts.j_shriek_simple},
                      {"Dmod_jstar_simple", report.verdicts.dmodule_jstar_simple},
                      {"Dmod_jshriek_simple", report.verdicts.dmodule_jshriek_simple},
                      {"ic_equals_both", report.verdicts.ic_equality}}},
                {"notes", std::move(notes)}};
}

// Comma-separated rationals "a1,a2,..."; values are reduced mod 1.
inline TorsionPoint alpha_from_string(const std::string& text) {
    std::vector<Rational> angles;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string piece = text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        angles.push_back(parse_rational(piece));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return make_torsion_point(std::move(angles));
}

} // namespace torsupp
