#pragma once

#include "corank/community.hpp"
#include "corank/graph.hpp"
#include "corank/preprocess.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace corank {

/// Exactly one of k / word_budget is set.
struct RankConfig {
    std::optional<std::size_t> k = 3;
    std::optional<std::size_t> word_budget;

    static RankConfig sentences(std::size_t k) { return {k, std::nullopt}; }
    static RankConfig words(std::size_t budget) { return {std::nullopt, budget}; }

    void validate() const;
};

struct Pick {
    NodeId node = 0;
    std::size_t community = 0; ///< index into the community list
    double weighted_degree = 0.0;
};

struct RankedSelection {
    std::vector<NodeId> ordered_nodes; ///< pick order
    std::vector<Pick> provenance;
    bool short_of_target = false;      ///< fewer than k nodes were available
};

/**
 * Repeatedly takes the community with the most remaining members and picks
 * its member with the largest weighted degree inside that community, then
 * removes the pick from every community.
 *
 * Community ties go to the larger total weighted degree, then the lower
 * list position; node ties go to the lower node id. Without k (word-budget
 * mode) every available node is ranked.
 */
RankedSelection select_influential(const WeightedGraph& g, const std::vector<Community>& communities,
                                   const RankConfig& config);

struct Summary {
    std::vector<std::size_t> indices; ///< chosen sentences, document order
    std::string text;                 ///< chosen sentences joined by '\n'
    bool budget_exhausted = false;    ///< a word budget left out at least one pick
};

/// Whitespace-delimited word count.
std::size_t word_count(const std::string& sentence);

/// Emits the picked sentences in document order. With a word budget, picks
/// are taken in pick order until the next one would overflow the budget.
Summary assemble_summary(const std::vector<SentenceRecord>& records, const RankedSelection& selection,
                         const RankConfig& config);

} // namespace corank
