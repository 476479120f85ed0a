#pragma once

// JSON presheaf specifications:
//   {"ring": <ringspec>, "atom_sections": [[elements], ...]}
//     atom-generated: the other sections are derived intersections.
//   {"ring": <ringspec>, "atom_count": k, "sections": {"<mask>": [elements]}}
//     explicit table, one entry per mask 0 .. 2^k - 1; returned unvalidated so
//     callers can report intersection-law violations with witnesses.

#include <string>
#include <vector>

#include <json.hpp>

#include "presheaf.hpp"
#include "ringspec.hpp"

namespace patchalg {

struct PresheafSpecResult {
    FiniteRing ring;
    PatchPresheaf presheaf;
};

inline std::vector<elem_t> parse_elem_list(const nlohmann::json& arr, const FiniteRing& R,
                                           const char* what) {
    require(arr.is_array(), ErrorKind::schema,
            std::string("presheaf spec: ") + what + " must be an array of elements");
    std::vector<elem_t> out;
    for (const auto& v : arr) {
        require(detail::is_nonneg_int(v), ErrorKind::schema,
                std::string("presheaf spec: ") + what + " entries must be non-negative integers");
        std::size_t x = v.get<std::size_t>();
        require(x < R.n(), ErrorKind::admissibility,
                std::string("presheaf spec: element ") + std::to_string(x) +
                    " is outside the ring");
        out.push_back(static_cast<elem_t>(x));
    }
    return out;
}

inline PresheafSpecResult presheaf_from_spec(const nlohmann::json& spec) {
    require(spec.is_object() && spec.contains("ring"), ErrorKind::schema,
            "presheaf spec: missing field \"ring\"");
    FiniteRing R = ring_from_spec(spec["ring"]);
    if (spec.contains("atom_sections")) {
        require(spec["atom_sections"].is_array() && !spec["atom_sections"].empty(),
                ErrorKind::schema, "presheaf spec: \"atom_sections\" must be a non-empty array");
        std::vector<Subring> atoms;
        for (const auto& arr : spec["atom_sections"])
            atoms.emplace_back(R, parse_elem_list(arr, R, "atom section"));
        return {R, presheaf_from_atoms(R, atoms)};
    }
    require(spec.contains("atom_count") && spec.contains("sections"), ErrorKind::schema,
            "presheaf spec: need \"atom_sections\" or \"atom_count\" + \"sections\"");
    require(detail::is_nonneg_int(spec["atom_count"]), ErrorKind::schema,
            "presheaf spec: \"atom_count\" must be a positive integer");
    int k = static_cast<int>(spec["atom_count"].get<std::size_t>());
    BoolAlg B(k);
    require(spec["sections"].is_object(), ErrorKind::schema,
            "presheaf spec: \"sections\" must map masks to element lists");
    std::vector<Subring> sections;
    for (bmask_t e = 0; e < B.size(); ++e) {
        std::string key = std::to_string(e);
        require(spec["sections"].contains(key), ErrorKind::schema,
                "presheaf spec: missing section for mask " + key);
        sections.emplace_back(R, parse_elem_list(spec["sections"][key], R, "section"));
    }
    return {R, PatchPresheaf(R, B, std::move(sections))};
}

} // namespace patchalg
