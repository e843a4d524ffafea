#pragma once

#include "wdual/poset.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace wdual {

nlohmann::json poset_to_json(const GradedPoset &P);
/// Ranks are recomputed; invalid input throws.
GradedPoset poset_from_json(const nlohmann::json &j);
GradedPoset read_poset_file(const std::string &path);

/// Graphviz digraph, edges drawn upward. `edge_labels`, when non-empty, is
/// indexed by cover id.
std::string poset_to_dot(const GradedPoset &P,
                         const std::vector<std::string> &edge_labels = {});

} // namespace wdual
