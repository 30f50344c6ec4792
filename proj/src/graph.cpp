#include "corank/graph.hpp"

#include "corank/error.hpp"
#include "corank/resources.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

namespace corank {

NodeSet make_node_set(NodeSet nodes) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    return nodes;
}

EdgeSet make_edge_set(EdgeSet edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

InvalidNode::InvalidNode(NodeId node)
    : std::invalid_argument("invalid node id " + std::to_string(node)), node_(node) {}

WeightedGraph::WeightedGraph(std::vector<NodeId> nodes, const std::vector<Edge>& edges)
    : nodes_(make_node_set(std::move(nodes))), incident_(nodes_.size()), adjacent_(nodes_.size()) {
    edges_.reserve(edges.size());
    std::set<std::pair<NodeId, NodeId>> seen;
    for (const Edge& raw : edges) {
        Edge e = raw;
        if (e.u == e.v) {
            throw std::invalid_argument("self-loop on node " + std::to_string(e.u));
        }
        if (e.u > e.v) {
            std::swap(e.u, e.v);
        }
        if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
            throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                        ") has non-positive weight");
        }
        if (!seen.emplace(e.u, e.v).second) {
            throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) + ", " +
                                        std::to_string(e.v) + ")");
        }
        const EdgeRef ref{static_cast<std::uint32_t>(edges_.size() + 1)};
        const std::size_t pu = position(e.u);
        const std::size_t pv = position(e.v);
        incident_[pu].push_back(ref);
        incident_[pv].push_back(ref);
        adjacent_[pu].push_back({pv, e.weight});
        adjacent_[pv].push_back({pu, e.weight});
        total_weight_ += e.weight;
        edges_.push_back(e);
    }
}

WeightedGraph WeightedGraph::from_edges(const std::vector<Edge>& edges) {
    std::vector<NodeId> nodes;
    nodes.reserve(edges.size() * 2);
    for (const Edge& e : edges) {
        nodes.push_back(e.u);
        nodes.push_back(e.v);
    }
    return WeightedGraph(std::move(nodes), edges);
}

bool WeightedGraph::has_node(NodeId v) const noexcept {
    return std::binary_search(nodes_.begin(), nodes_.end(), v);
}

std::size_t WeightedGraph::position(NodeId v) const {
    const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), v);
    if (it == nodes_.end() || *it != v) {
        throw InvalidNode(v);
    }
    return static_cast<std::size_t>(it - nodes_.begin());
}

const Edge& WeightedGraph::edge(EdgeRef e) const {
    if (e.index == 0 || e.index > edges_.size()) {
        throw std::out_of_range("edge map index " + std::to_string(e.index) + " out of range");
    }
    return edges_[e.index - 1];
}

std::optional<EdgeRef> WeightedGraph::find_edge(NodeId a, NodeId b) const {
    if (!has_node(a) || !has_node(b)) {
        return std::nullopt;
    }
    for (EdgeRef e : incident_[position(a)]) {
        const Edge& ed = edges_[e.index - 1];
        if ((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)) {
            return e;
        }
    }
    return std::nullopt;
}

const EdgeSet& WeightedGraph::incident(NodeId v) const {
    return incident_[position(v)];
}

NodeId WeightedGraph::neighbor(EdgeRef e, NodeId v) const {
    const Edge& ed = edge(e);
    return ed.u == v ? ed.v : ed.u;
}

EdgeSet incident_edges(const WeightedGraph& g, NodeId v) {
    return g.incident(v);
}

namespace {

std::vector<char> membership(const WeightedGraph& g, const NodeSet& s) {
    std::vector<char> in(g.node_count(), 0);
    for (NodeId v : s) {
        in[g.position(v)] = 1;
    }
    return in;
}

} // namespace

double weighted_degree_in_subgraph(const WeightedGraph& g, NodeId v, const NodeSet& community) {
    if (!g.has_node(v)) {
        throw InvalidNode(v);
    }
    if (std::find(community.begin(), community.end(), v) == community.end()) {
        throw std::invalid_argument("node " + std::to_string(v) + " is not a community member");
    }
    const auto in = membership(g, community);
    double sum = 0.0;
    for (EdgeRef e : g.incident(v)) {
        if (in[g.position(g.neighbor(e, v))]) {
            sum += g.weight(e);
        }
    }
    return sum;
}

std::optional<double> try_conductance(const WeightedGraph& g, const NodeSet& s, ConductanceMode mode) {
    const auto in = membership(g, s);
    const auto members = static_cast<std::size_t>(std::count(in.begin(), in.end(), 1));
    if (members == 0 || members == g.node_count()) {
        return std::nullopt;
    }
    const bool weighted = mode == ConductanceMode::Weighted;
    // vol(S) = 2 * internal + cut, so only edges touching S are visited.
    double cut = 0.0;
    double vol_in = 0.0;
    for (NodeId v : s) {
        for (const auto& adj : g.adjacent(g.position(v))) {
            const double a = weighted ? adj.weight : 1.0;
            vol_in += a;
            if (!in[adj.position]) {
                cut += a;
            }
        }
    }
    const double vol_total =
        weighted ? 2.0 * g.total_weight() : 2.0 * static_cast<double>(g.edge_count());
    const double denom = std::min(vol_in, vol_total - vol_in);
    if (!(denom > 0.0)) {
        return std::nullopt;
    }
    return cut / denom;
}

double conductance(const WeightedGraph& g, const NodeSet& s, ConductanceMode mode) {
    for (NodeId v : s) {
        if (!g.has_node(v)) {
            throw InvalidNode(v);
        }
    }
    const auto phi = try_conductance(g, s, mode);
    if (!phi) {
        throw UndefinedConductance("conductance undefined: node set is empty, covers the graph, "
                                   "or one side has zero volume");
    }
    return *phi;
}

WeightedGraph parse_edge_list(std::string_view text) {
    std::vector<Edge> edges;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::istringstream fields(line);
        long long u = 0;
        long long v = 0;
        double w = 0.0;
        std::string extra;
        if (!(fields >> u >> v >> w) || (fields >> extra) || u < 0 || v < 0) {
            throw ParseError("edge list line " + std::to_string(lineno) + ": expected \"i j w\"");
        }
        edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), w});
    }
    try {
        return WeightedGraph::from_edges(edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

WeightedGraph load_edge_list(const std::string& path) {
    return parse_edge_list(read_file(path));
}

void write_edge_list(std::ostream& out, const WeightedGraph& g) {
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v << ' ' << e.weight << '\n';
    }
}

const WeightedGraph& example_graph() {
    static const WeightedGraph g = parse_edge_list(resources::example_graph());
    return g;
}

} // namespace corank
