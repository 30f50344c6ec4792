#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace corank {

using NodeId = std::uint32_t;

/// 1-based edge identifier, assigned in insertion order.
struct EdgeRef {
    std::uint32_t index = 0;

    friend constexpr auto operator<=>(EdgeRef, EdgeRef) = default;
};

/// Sorted, duplicate-free node list.
using NodeSet = std::vector<NodeId>;
/// Sorted, duplicate-free edge list.
using EdgeSet = std::vector<EdgeRef>;

/// Sorts and deduplicates in place; returns the argument.
NodeSet make_node_set(NodeSet nodes);
EdgeSet make_edge_set(EdgeSet edges);

struct Edge {
    NodeId u = 0; ///< smaller endpoint
    NodeId v = 0; ///< larger endpoint
    double weight = 0.0;
};

class InvalidNode : public std::invalid_argument {
public:
    explicit InvalidNode(NodeId node);
    NodeId node() const noexcept { return node_; }

private:
    NodeId node_;
};

/// Raised when a node set has no defined conductance (empty, the whole
/// node set, or a side with zero volume).
class UndefinedConductance : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/**
 * Undirected weighted graph over an explicit node id set.
 *
 * Edges keep the order they were supplied in; the edge at position p has
 * map index p + 1. The graph is immutable once constructed, so concurrent
 * read access is safe.
 */
class WeightedGraph {
public:
    WeightedGraph() = default;

    /// Throws std::invalid_argument on self-loops, non-positive weights,
    /// duplicate pairs, or endpoints missing from @p nodes.
    WeightedGraph(std::vector<NodeId> nodes, const std::vector<Edge>& edges);

    /// Node set is the union of all endpoints.
    static WeightedGraph from_edges(const std::vector<Edge>& edges);

    const NodeSet& nodes() const noexcept { return nodes_; }
    std::size_t node_count() const noexcept { return nodes_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool has_node(NodeId v) const noexcept;
    const Edge& edge(EdgeRef e) const;
    double weight(EdgeRef e) const { return edge(e).weight; }
    std::optional<EdgeRef> find_edge(NodeId a, NodeId b) const;

    /// Incident edges of @p v in map-index order. Throws InvalidNode.
    const EdgeSet& incident(NodeId v) const;
    std::size_t degree(NodeId v) const { return incident(v).size(); }
    NodeId neighbor(EdgeRef e, NodeId v) const;

    double total_weight() const noexcept { return total_weight_; }

    /// Dense position of @p v in nodes(); throws InvalidNode.
    std::size_t position(NodeId v) const;

    struct Adjacent {
        std::size_t position; ///< neighbor's dense position
        double weight;
    };

    /// Neighbors of the node at dense position @p p, in map-index order.
    const std::vector<Adjacent>& adjacent(std::size_t p) const { return adjacent_[p]; }

private:
    NodeSet nodes_;
    std::vector<Edge> edges_;
    std::vector<EdgeSet> incident_;
    std::vector<std::vector<Adjacent>> adjacent_;
    double total_weight_ = 0.0;
};

/// All edges having @p v as an endpoint. Throws InvalidNode.
EdgeSet incident_edges(const WeightedGraph& g, NodeId v);

/// Sum of w(v,u) over u in @p community adjacent to v.
/// Throws std::invalid_argument when v is not in the community.
double weighted_degree_in_subgraph(const WeightedGraph& g, NodeId v, const NodeSet& community);

enum class ConductanceMode {
    Unweighted, ///< cut and volume count edges (adjacency indicator)
    Weighted,   ///< cut and volume sum edge weights
};

/// cut(s) / min(vol(s), vol(V \ s)).
double conductance(const WeightedGraph& g, const NodeSet& s,
                   ConductanceMode mode = ConductanceMode::Unweighted);

/// Non-throwing variant; nullopt where conductance() would throw
/// UndefinedConductance.
std::optional<double> try_conductance(const WeightedGraph& g, const NodeSet& s,
                                      ConductanceMode mode = ConductanceMode::Unweighted);

// Edge-list text format: one "i j w" triple per line, '#' starts a comment.
WeightedGraph parse_edge_list(std::string_view text);
WeightedGraph load_edge_list(const std::string& path);
void write_edge_list(std::ostream& out, const WeightedGraph& g);

/// The bundled ten-node example network (nodes 1..10, 18 edges).
const WeightedGraph& example_graph();

} // namespace corank
