#pragma once

#include "corank/graph.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace corank {

struct CommunityConfig {
    double delta_csoan = 0.5;                  ///< similarity threshold at iteration 1
    double alpha_decay = 0.8;                  ///< per-iteration threshold multiplier
    std::optional<std::size_t> max_iterations; ///< defaults to the edge count
    ConductanceMode conductance_mode = ConductanceMode::Unweighted;

    void validate() const;

    /// delta_csoan * alpha_decay^(t - 1), for t >= 1.
    double threshold(std::size_t iteration) const;

    std::size_t iteration_cap(const WeightedGraph& g) const;
};

/// Current neighbor set of every edge. per_edge[i] belongs to map index i + 1.
struct NeighborState {
    std::vector<EdgeSet> per_edge;
    std::size_t iteration = 1;

    const EdgeSet& at(EdgeRef e) const { return per_edge.at(e.index - 1); }
    std::size_t edge_count() const noexcept { return per_edge.size(); }

    /// Same neighbor sets, ignoring the iteration counter.
    bool same_sets(const NeighborState& other) const { return per_edge == other.per_edge; }
};

/// Sparse vector over edges, sorted by edge.
struct EdgeWeightVector {
    std::vector<std::pair<EdgeRef, double>> components;

    friend bool operator==(const EdgeWeightVector&, const EdgeWeightVector&) = default;
};

struct Community {
    NodeSet members;
    /// Conductance; empty when undefined (the set spans every edge of its
    /// graph, or has no incident edges).
    std::optional<double> phi;
};

/// N_1(e): every edge sharing an endpoint with e, including e.
NeighborState compute_foan(const WeightedGraph& g);

/// Union of N_t(f) over f in N_t(e).
EdgeSet compute_soan(const NeighborState& state, EdgeRef e);

/// One component per member edge, valued at that edge's weight.
/// Throws std::invalid_argument on an empty set.
EdgeWeightVector edge_vector(const WeightedGraph& g, const EdgeSet& neighbors);

/// sum(min) / sum(max) over the union of supports; 0 when both are empty.
double weighted_jaccard(const EdgeWeightVector& x, const EdgeWeightVector& y);

/// C(e) = { f in SOAN(e) : J(vec N_t(e), vec N_t(f)) >= threshold(t) } ∪ {e}.
/// The result carries iteration t + 1.
NeighborState csoan_step(const WeightedGraph& g, const NeighborState& state, const CommunityConfig& config);

struct StabilityResult {
    NeighborState state;
    std::size_t iterations = 0; ///< csoan steps performed
    bool capped = false;        ///< stopped by the iteration cap before a fixpoint
};

/// Applies csoan_step from the FOAN state until the whole mapping stops
/// changing. When @p history is given, the FOAN state and every produced
/// state are appended to it.
StabilityResult iterate_to_stability(const WeightedGraph& g, const CommunityConfig& config,
                                     std::vector<NeighborState>* history = nullptr);

/// Endpoints of every edge in @p csoan.
NodeSet link_node_set(const WeightedGraph& g, const EdgeSet& csoan);

struct MergeResult {
    std::vector<Community> communities; ///< conductance ascending, then members
    std::vector<NodeSet> excluded;      ///< inputs with undefined conductance
};

/**
 * Merges node sets pairwise while the union has strictly lower conductance
 * than both parts.
 *
 * Inputs are deduplicated. Each pass walks the pairs of the working set in
 * (conductance, members) order and applies the first qualifying merge; the
 * loop ends after a pass without merges.
 */
MergeResult merge_lns(const WeightedGraph& g, const std::vector<NodeSet>& sets,
                      ConductanceMode mode = ConductanceMode::Unweighted);

struct Detection {
    std::vector<Community> communities;
    std::vector<NodeSet> link_node_sets; ///< per edge, map-index order
    std::vector<NodeSet> excluded;       ///< link node sets kept out of merging
    std::size_t iterations = 0;
    bool capped = false;
};

/**
 * Runs FOAN, the CSOAN fixpoint, link node sets and merging.
 *
 * Link node sets without a defined conductance cannot take part in merging;
 * they are appended after the merged communities. Isolated nodes follow as
 * singleton communities.
 */
Detection detect_communities(const WeightedGraph& g, const CommunityConfig& config = {});

} // namespace corank
