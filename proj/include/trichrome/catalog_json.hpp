#pragma once

#include <json.hpp>

#include "catalog.hpp"

namespace trichrome {

// machine-readable mirror of the results-table registry; shipped as
// data/catalog.json and kept in sync by a test
inline nlohmann::json catalog_json() {
    nlohmann::json entries = nlohmann::json::array();
    for (const TableEntry& e : catalog()) {
        nlohmann::json j{
            {"family", e.listed_as},
            {"canonical_family", e.family.to_string()},
            {"kind", e.kind == EntryKind::Exact
                         ? "exact"
                         : (e.kind == EntryKind::Bounds ? "bounds" : "infeasible-large-n")},
            {"construction_id", e.construction_id},
            {"construction_perm", e.construction_perm.to_string()},
            {"frame_perm", e.frame_perm.to_string()},
            {"extractor_id", e.extractor_id},
            {"small_n_floor", e.small_n_floor},
        };
        if (e.formula) j["formula"] = formula_name(*e.formula);
        if (e.lower_formula) j["lower_formula"] = formula_name(*e.lower_formula);
        if (e.upper_formula) j["upper_formula"] = formula_name(*e.upper_formula);
        if (!e.lower_order.empty()) j["lower_order"] = e.lower_order;
        if (!e.upper_order.empty()) j["upper_order"] = e.upper_order;
        if (!e.sandwich.empty()) j["sandwich"] = e.sandwich;
        if (!e.note.empty()) j["note"] = e.note;
        if (!e.exceptional.empty()) {
            nlohmann::json ex = nlohmann::json::object();
            for (auto [n, v] : e.exceptional) ex[std::to_string(n)] = v;
            j["exceptional_values"] = ex;
        }
        entries.push_back(std::move(j));
    }
    return nlohmann::json{{"schema_version", "1"}, {"entries", entries}};
}

}  // namespace trichrome
