#include "corank/trace.hpp"

#include "corank/ranker.hpp"

#include <iomanip>
#include <sstream>

namespace corank {

using nlohmann::json;

const std::vector<Community>& example_reference_communities() {
    static const std::vector<Community> communities = [] {
        const WeightedGraph& g = example_graph();
        std::vector<Community> out;
        for (NodeSet members : std::vector<NodeSet>{
                 {1, 2, 3, 4}, {1, 2, 3, 4, 5, 6}, {4, 5, 6, 7, 8, 9, 10}, {1, 2, 3, 4, 8, 9, 10}, {8, 9, 10}}) {
            const auto phi = try_conductance(g, members);
            out.push_back({std::move(members), phi});
        }
        return out;
    }();
    return communities;
}

std::string format_set(const std::vector<std::uint32_t>& items) {
    std::string out = "{";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += std::to_string(items[i]);
    }
    return out + "}";
}

std::string format_edge_set(const EdgeSet& edges) {
    std::vector<std::uint32_t> ids;
    ids.reserve(edges.size());
    for (EdgeRef e : edges) {
        ids.push_back(e.index);
    }
    return format_set(ids);
}

namespace {

std::string edge_label(const WeightedGraph& g, EdgeRef e) {
    const Edge& ed = g.edge(e);
    return "(" + std::to_string(ed.u) + ", " + std::to_string(ed.v) + ")";
}

std::string fixed3(double v) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(3) << v;
    return out.str();
}

void write_state(std::ostream& out, const WeightedGraph& g, const NeighborState& s) {
    for (std::size_t i = 0; i < s.edge_count(); ++i) {
        const EdgeRef e{static_cast<std::uint32_t>(i + 1)};
        out << edge_label(g, e) << ' ' << format_edge_set(s.at(e)) << '\n';
    }
}

json state_json(const NeighborState& s) {
    json per_edge = json::object();
    for (std::size_t i = 0; i < s.edge_count(); ++i) {
        json ids = json::array();
        for (EdgeRef f : s.per_edge[i]) {
            ids.push_back(f.index);
        }
        per_edge[std::to_string(i + 1)] = ids;
    }
    return json{{"iteration", s.iteration}, {"neighbors", per_edge}};
}

json selection_json(const RankedSelection& sel) {
    json picks = json::array();
    for (const Pick& p : sel.provenance) {
        picks.push_back({{"node", p.node}, {"community", p.community}, {"weightedDegree", p.weighted_degree}});
    }
    return picks;
}

void write_selection(std::ostream& out, const RankedSelection& sel) {
    for (std::size_t i = 0; i < sel.provenance.size(); ++i) {
        const Pick& p = sel.provenance[i];
        out << "pick " << i + 1 << ": node " << p.node << " from community " << p.community
            << " (weighted degree " << p.weighted_degree << ")\n";
    }
}

const NodeSet kDegreeCommunity{1, 2, 3, 4, 8, 9, 10};
constexpr std::size_t kPicks = 5;

struct Trace {
    std::vector<NeighborState> history;
    StabilityResult stable;
    Detection detection;
    RankedSelection fixture_selection;
    RankedSelection detected_selection;
};

Trace run_trace() {
    const WeightedGraph& g = example_graph();
    const CommunityConfig config;
    Trace t;
    t.stable = iterate_to_stability(g, config, &t.history);
    t.detection = detect_communities(g, config);
    t.fixture_selection = select_influential(g, example_reference_communities(), RankConfig::sentences(kPicks));
    t.detected_selection = select_influential(g, t.detection.communities, RankConfig::sentences(kPicks));
    return t;
}

} // namespace

std::string trace_example_text() {
    const WeightedGraph& g = example_graph();
    const Trace t = run_trace();
    std::ostringstream out;

    out << "# Edge map\n";
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const EdgeRef e{static_cast<std::uint32_t>(i + 1)};
        out << edge_label(g, e) << ' ' << e.index << " w=" << g.weight(e) << '\n';
    }
    out << "\n# FOAN\n";
    write_state(out, g, t.history.front());
    out << "\n# CSOAN iteration 1\n";
    write_state(out, g, t.history.at(1));
    out << "\n# Stable CSOAN after " << t.stable.iterations << " iterations"
        << (t.stable.capped ? " (capped)" : "") << "\n";
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const EdgeRef e{static_cast<std::uint32_t>(i + 1)};
        const NodeSet lns = link_node_set(g, t.stable.state.at(e));
        const auto phi = try_conductance(g, lns);
        out << edge_label(g, e) << ' ' << format_edge_set(t.stable.state.at(e)) << " LNS " << format_set(lns)
            << " phi " << (phi ? fixed3(*phi) : "undefined") << '\n';
    }
    out << "\n# Communities after merging\n";
    for (const Community& c : t.detection.communities) {
        out << format_set(c.members) << " phi " << (c.phi ? fixed3(*c.phi) : "undefined") << '\n';
    }
    out << "\n# Weighted degree in " << format_set(kDegreeCommunity) << "\n";
    for (NodeId v : kDegreeCommunity) {
        out << v << ' ' << weighted_degree_in_subgraph(g, v, kDegreeCommunity) << '\n';
    }
    out << "\n# Selection from reference communities\n";
    for (std::size_t i = 0; i < example_reference_communities().size(); ++i) {
        out << "community " << i << ": " << format_set(example_reference_communities()[i].members) << '\n';
    }
    write_selection(out, t.fixture_selection);
    out << "\n# Selection from detected communities\n";
    write_selection(out, t.detected_selection);
    return out.str();
}

json trace_example_json() {
    const WeightedGraph& g = example_graph();
    const Trace t = run_trace();

    json edges = json::array();
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges()[i];
        edges.push_back({{"mapIndex", i + 1}, {"u", e.u}, {"v", e.v}, {"weight", e.weight}});
    }
    json iterations = json::array();
    for (const NeighborState& s : t.history) {
        iterations.push_back(state_json(s));
    }
    json stable = json::array();
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const EdgeRef e{static_cast<std::uint32_t>(i + 1)};
        const NodeSet lns = link_node_set(g, t.stable.state.at(e));
        const auto phi = try_conductance(g, lns);
        json csoan = json::array();
        for (EdgeRef f : t.stable.state.at(e)) {
            csoan.push_back(f.index);
        }
        stable.push_back({{"mapIndex", i + 1},
                          {"csoan", csoan},
                          {"linkNodeSet", lns},
                          {"conductance", phi ? json(*phi) : json(nullptr)}});
    }
    json communities = json::array();
    for (const Community& c : t.detection.communities) {
        communities.push_back({{"members", c.members}, {"conductance", c.phi ? json(*c.phi) : json(nullptr)}});
    }
    json degrees = json::object();
    for (NodeId v : kDegreeCommunity) {
        degrees[std::to_string(v)] = weighted_degree_in_subgraph(g, v, kDegreeCommunity);
    }
    return json{
        {"schemaVersion", 1},
        {"edges", edges},
        {"iterations", iterations},
        {"stableAfter", t.stable.iterations},
        {"capped", t.stable.capped},
        {"stable", stable},
        {"communities", communities},
        {"weightedDegrees", {{"community", kDegreeCommunity}, {"degrees", degrees}}},
        {"referenceSelection", selection_json(t.fixture_selection)},
        {"detectedSelection", selection_json(t.detected_selection)},
    };
}

} // namespace corank
