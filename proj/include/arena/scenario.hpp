#pragma once

#include <filesystem>
#include <string>

#include "arena/domain.hpp"

namespace arena {

/// A negotiation scenario: the shared domain plus one profile per side.
struct Scenario {
    std::string name;
    Domain domain;
    LinearAdditiveProfile profile_a;
    LinearAdditiveProfile profile_b;
};

/// Load a scenario document: a JSON object with exactly the fields
/// `issues` (name -> value list), `profileA` and `profileB` (each with
/// `weights`, `value_scores` and optional `reservation`). Unknown
/// fields are rejected. Issue and value order follow the document.
Scenario load_scenario_file(const std::filesystem::path& path);

/// Write a scenario in the same format.
void save_scenario_file(const std::filesystem::path& path, const Scenario& scenario);

/// Deterministic generated scenario named after its spec.
Scenario generate_scenario(std::uint64_t seed, int issue_count, int values_per_issue);

/// Resolve a CLI scenario source: either `gen:seed=S,issues=N,values=K`
/// or a path to a scenario file.
Scenario resolve_scenario_spec(const std::string& spec);

}  // namespace arena
