#pragma once

// JSON ring specifications:
//   {"kind": "zmod", "n": 6}
//   {"kind": "gf", "p": 2, "k": 4}                    (optional "poly": [c0..ck])
//   {"kind": "polyquot", "p": 2, "poly": [0, 0, 1]}   (monic, any factorization)
//   {"kind": "product", "factors": [spec, spec, ...]}
//   {"kind": "quotient", "base": spec, "ideal": [elements]}
//   {"kind": "tables", "add": [[..]], "mul": [[..]], "zero": i, "one": j,
//    "labels": [...] }
// Malformed documents raise schema errors; well-formed documents with
// inadmissible parameters raise admissibility errors from the constructors.

#include <string>
#include <vector>

#include <json.hpp>

#include "ring.hpp"
#include "subring.hpp"
#include "util.hpp"

namespace patchalg {

namespace detail {

inline void expect(bool cond, const std::string& msg) {
    require(cond, ErrorKind::schema, "ring spec: " + msg);
}

inline bool is_nonneg_int(const nlohmann::json& v) {
    return v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0);
}

inline std::size_t get_uint(const nlohmann::json& j, const char* field) {
    expect(j.contains(field), std::string("missing field \"") + field + "\"");
    expect(is_nonneg_int(j[field]),
           std::string("field \"") + field + "\" must be a non-negative integer");
    return j[field].get<std::size_t>();
}

inline std::vector<int> get_int_array(const nlohmann::json& j, const char* field) {
    expect(j.contains(field) && j[field].is_array(),
           std::string("field \"") + field + "\" must be an array");
    std::vector<int> out;
    for (const auto& v : j[field]) {
        expect(v.is_number_integer(), std::string("field \"") + field +
                                          "\" must contain integers");
        out.push_back(v.get<int>());
    }
    return out;
}

} // namespace detail

inline FiniteRing ring_from_spec(const nlohmann::json& spec) {
    detail::expect(spec.is_object(), "document must be an object");
    detail::expect(spec.contains("kind") && spec["kind"].is_string(),
                   "missing string field \"kind\"");
    std::string kind = spec["kind"].get<std::string>();

    if (kind == "zmod") return ring_zmod(detail::get_uint(spec, "n"));

    if (kind == "gf") {
        int p = static_cast<int>(detail::get_uint(spec, "p"));
        int k = static_cast<int>(detail::get_uint(spec, "k"));
        std::vector<int> poly;
        if (spec.contains("poly")) poly = detail::get_int_array(spec, "poly");
        return ring_gf(p, k, std::move(poly));
    }

    if (kind == "polyquot") {
        int p = static_cast<int>(detail::get_uint(spec, "p"));
        return ring_polyquot(p, detail::get_int_array(spec, "poly"));
    }

    if (kind == "product") {
        detail::expect(spec.contains("factors") && spec["factors"].is_array() &&
                           !spec["factors"].empty(),
                       "field \"factors\" must be a non-empty array");
        std::vector<FiniteRing> factors;
        for (const auto& f : spec["factors"]) factors.push_back(ring_from_spec(f));
        return ring_product(factors);
    }

    if (kind == "quotient") {
        detail::expect(spec.contains("base"), "missing field \"base\"");
        FiniteRing base = ring_from_spec(spec["base"]);
        auto raw = detail::get_int_array(spec, "ideal");
        std::vector<elem_t> elems;
        for (int v : raw) {
            require(v >= 0 && static_cast<std::size_t>(v) < base.n(), ErrorKind::admissibility,
                    "ring spec: ideal element out of range");
            elems.push_back(static_cast<elem_t>(v));
        }
        return ring_quotient(base, RingIdeal(base, std::move(elems))).ring;
    }

    if (kind == "tables") {
        detail::expect(spec.contains("add") && spec["add"].is_array() && spec.contains("mul") &&
                           spec["mul"].is_array(),
                       "fields \"add\" and \"mul\" must be arrays of rows");
        auto flatten = [&](const char* field) {
            std::vector<elem_t> out;
            for (const auto& row : spec[field]) {
                detail::expect(row.is_array(), std::string("\"") + field +
                                                   "\" rows must be arrays");
                for (const auto& v : row) {
                    detail::expect(detail::is_nonneg_int(v),
                                   std::string("\"") + field + "\" entries must be non-negative");
                    out.push_back(static_cast<elem_t>(v.get<std::size_t>()));
                }
            }
            return out;
        };
        std::vector<std::string> labels;
        if (spec.contains("labels")) {
            detail::expect(spec["labels"].is_array(), "\"labels\" must be an array");
            for (const auto& v : spec["labels"]) {
                detail::expect(v.is_string(), "\"labels\" entries must be strings");
                labels.push_back(v.get<std::string>());
            }
        }
        return ring_from_tables(flatten("add"), flatten("mul"),
                                static_cast<elem_t>(detail::get_uint(spec, "zero")),
                                static_cast<elem_t>(detail::get_uint(spec, "one")),
                                std::move(labels));
    }

    detail::expect(false, "unknown kind \"" + kind + "\"");
    return {};
}

inline FiniteRing ring_from_spec_text(const std::string& text) {
    nlohmann::json spec = nlohmann::json::parse(text, nullptr, false);
    require(!spec.is_discarded(), ErrorKind::schema, "ring spec: malformed JSON");
    return ring_from_spec(spec);
}

} // namespace patchalg
