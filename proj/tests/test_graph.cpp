#include "corank/error.hpp"
#include "corank/graph.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace corank;
using namespace corank::testing;

namespace {

std::vector<std::uint32_t> incident_ids(const WeightedGraph& g, NodeId v) {
    return to_ids(incident_edges(g, v));
}

} // namespace

TEST(ExampleGraph, MatchesEdgeMap) {
    const WeightedGraph& g = example_graph();
    ASSERT_EQ(g.node_count(), 10u);
    ASSERT_EQ(g.edge_count(), 18u);
    EXPECT_EQ(g.find_edge(1, 2), EdgeRef{1});
    EXPECT_EQ(g.find_edge(4, 7), EdgeRef{9});
    EXPECT_EQ(g.find_edge(10, 9), EdgeRef{18});
    EXPECT_FALSE(g.find_edge(1, 10).has_value());
    EXPECT_DOUBLE_EQ(g.weight(EdgeRef{13}), 9.0);
    EXPECT_DOUBLE_EQ(g.total_weight(), 91.0);
}

TEST(IncidentEdges, Examples) {
    const WeightedGraph& g = example_graph();
    EXPECT_EQ(incident_ids(g, 7), (std::vector<std::uint32_t>{9, 11, 12, 13, 14, 15}));
    EXPECT_EQ(incident_ids(g, 1), (std::vector<std::uint32_t>{1, 2, 3}));

    const WeightedGraph isolated({0, 1, 2}, {{0, 1, 1.0}});
    EXPECT_TRUE(incident_edges(isolated, 2).empty());
}

TEST(IncidentEdges, UnknownNodeThrows) {
    EXPECT_THROW(incident_edges(example_graph(), 11), InvalidNode);
    EXPECT_THROW(incident_edges(example_graph(), 0), InvalidNode);
}

TEST(WeightedDegree, Examples) {
    const WeightedGraph& g = example_graph();
    const NodeSet h{1, 2, 3, 4, 8, 9, 10};
    EXPECT_DOUBLE_EQ(weighted_degree_in_subgraph(g, 1, h), 20.0);
    EXPECT_DOUBLE_EQ(weighted_degree_in_subgraph(g, 4, h), 12.0);
    EXPECT_DOUBLE_EQ(weighted_degree_in_subgraph(g, 7, {4, 5, 6, 7, 8, 9, 10}), 39.0);
}

TEST(WeightedDegree, NonMemberThrows) {
    EXPECT_THROW(weighted_degree_in_subgraph(example_graph(), 7, {1, 2, 3}), std::invalid_argument);
    EXPECT_THROW(weighted_degree_in_subgraph(example_graph(), 42, {42}), InvalidNode);
}

TEST(WeightedDegree, SumOverAllNodesIsTwiceTotalWeight) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const WeightedGraph g = random_graph(rng, 20, 60, trial % 2 == 0);
        double sum = 0.0;
        for (NodeId v : g.nodes()) {
            sum += weighted_degree_in_subgraph(g, v, g.nodes());
        }
        EXPECT_NEAR(sum, 2.0 * g.total_weight(), 1e-9);
    }
}

TEST(Conductance, Examples) {
    const WeightedGraph& g = example_graph();
    EXPECT_DOUBLE_EQ(conductance(g, {1, 2, 3, 4}), 3.0 / 15.0);
    EXPECT_DOUBLE_EQ(conductance(g, {4, 5}), 7.0 / 9.0);
    EXPECT_DOUBLE_EQ(conductance(g, {8, 9, 10}), 3.0 / 9.0);
    EXPECT_DOUBLE_EQ(conductance(g, {5, 6}), 4.0 / 6.0);
    EXPECT_DOUBLE_EQ(conductance(g, {4, 5, 6, 7, 8, 9, 10}), 7.0 / 21.0);
}

TEST(Conductance, UndefinedSets) {
    const WeightedGraph& g = example_graph();
    EXPECT_THROW(conductance(g, {}), UndefinedConductance);
    EXPECT_THROW(conductance(g, g.nodes()), UndefinedConductance);
    EXPECT_THROW(conductance(g, {1, 99}), InvalidNode);

    const WeightedGraph with_isolated({0, 1, 2}, {{0, 1, 1.0}});
    EXPECT_THROW(conductance(with_isolated, {2}), UndefinedConductance);
    EXPECT_FALSE(try_conductance(with_isolated, {0, 1}).has_value());
}

TEST(Conductance, WeightedModeUsesEdgeWeights) {
    const WeightedGraph& g = example_graph();
    // cut 2 + 2 + 5 = 9; vol = 2 * 34 + 9 = 77
    EXPECT_DOUBLE_EQ(conductance(g, {1, 2, 3, 4}, ConductanceMode::Weighted), 9.0 / 77.0);
}

TEST(Conductance, AgreesWithMatrixOracleAndComplement) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const WeightedGraph g = random_graph(rng, 15, 40, trial % 2 == 0);
        NodeSet s;
        NodeSet comp;
        std::bernoulli_distribution coin(0.5);
        for (NodeId v : g.nodes()) {
            (coin(rng) ? s : comp).push_back(v);
        }
        for (const bool weighted : {false, true}) {
            const auto mode = weighted ? ConductanceMode::Weighted : ConductanceMode::Unweighted;
            const auto got = try_conductance(g, s, mode);
            const auto want = oracle_conductance(g, {s.begin(), s.end()}, weighted);
            ASSERT_EQ(got.has_value(), want.has_value());
            if (!got) {
                continue;
            }
            EXPECT_NEAR(*got, *want, 1e-12);
            EXPECT_GE(*got, 0.0);
            EXPECT_LE(*got, 1.0 + 1e-12);
            EXPECT_NEAR(*got, *try_conductance(g, comp, mode), 1e-12);
        }
    }
}

TEST(WeightedGraph, RejectsInvalidEdges) {
    EXPECT_THROW(WeightedGraph({1, 2}, {{1, 1, 1.0}}), std::invalid_argument);
    EXPECT_THROW(WeightedGraph({1, 2}, {{1, 2, 0.0}}), std::invalid_argument);
    EXPECT_THROW(WeightedGraph({1, 2}, {{1, 2, -1.0}}), std::invalid_argument);
    EXPECT_THROW(WeightedGraph({1, 2}, {{1, 2, 1.0}, {2, 1, 3.0}}), std::invalid_argument);
    EXPECT_THROW(WeightedGraph({1, 2}, {{1, 3, 1.0}}), InvalidNode);
}

TEST(EdgeList, ParsesCommentsAndNormalizesPairs) {
    const WeightedGraph g = parse_edge_list("# header\n\n3 1 2.5\n1 2 1 # trailing\n");
    ASSERT_EQ(g.edge_count(), 2u);
    EXPECT_EQ(g.edges()[0].u, 1u);
    EXPECT_EQ(g.edges()[0].v, 3u);
    EXPECT_EQ(g.find_edge(2, 1), EdgeRef{2});
    EXPECT_EQ(g.nodes(), (NodeSet{1, 2, 3}));

    std::ostringstream out;
    write_edge_list(out, g);
    EXPECT_EQ(out.str(), "1 3 2.5\n1 2 1\n");
}

TEST(EdgeList, MalformedLinesAreRejected) {
    EXPECT_THROW(parse_edge_list("1 2\n"), ParseError);
    EXPECT_THROW(parse_edge_list("1 2 3 4\n"), ParseError);
    EXPECT_THROW(parse_edge_list("1 1 3\n"), ParseError);
    EXPECT_THROW(parse_edge_list("a b c\n"), ParseError);
    EXPECT_THROW(load_edge_list("/nonexistent/edges.txt"), IoError);
}
