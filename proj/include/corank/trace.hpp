#pragma once

#include "corank/community.hpp"
#include "corank/graph.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace corank {

/// Five fixed overlapping communities over the bundled example
/// network, in a fixed order. Used as ranking fixtures.
const std::vector<Community>& example_reference_communities();

/// "{1, 2, 3}" with ascending members.
std::string format_set(const std::vector<std::uint32_t>& items);
std::string format_edge_set(const EdgeSet& edges);

/// Step-by-step dump for the bundled example network: FOAN, iteration-1
/// CSOAN, the stable CSOAN with link node sets and conductance, merged
/// communities, weighted degrees and the resulting selections.
std::string trace_example_text();

/// Same content as JSON; neighbor sets are keyed by edge map index for
/// every iteration.
nlohmann::json trace_example_json();

} // namespace corank
