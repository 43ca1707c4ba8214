#pragma once

#include <string>

#include "flagflow/anosov.hpp"

namespace flagflow {

// JSON schema: {d, field: "R"|"C", generators: [{label, matrix}], theta:
// [int], notes}. Matrices are row-major lists of rows; complex entries are
// [re, im] pairs.
GroupSpec parse_group_spec(const std::string& json_text);
GroupSpec load_group_spec(const std::string& path);
std::string group_spec_to_json(const GroupSpec& spec);

}  // namespace flagflow
