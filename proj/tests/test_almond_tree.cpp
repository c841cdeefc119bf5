#include <gtest/gtest.h>

#include <random>

#include "chordal/almond_tree.hpp"
#include "chordal/errors.hpp"
#include "chordal/oracle.hpp"
#include "support/invariants.hpp"
#include "support/test_support.hpp"

using namespace chordal;
using chordal::testing::almond_tree_weight;
using chordal::testing::check_almond_tree;
using chordal::testing::drive_to;
using chordal::testing::heaviest_junction_spanning_tree_weight;
using chordal::testing::make_graph;
using chordal::testing::random_decomposable;
using chordal::testing::RepWalker;

namespace {

UndirectedGraph two_triangles() {
    return make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
}

} // namespace

TEST(AlmondTree, TrivialGraphHangsSingletonsOffTheEmptySet) {
    AlmondTree at(3);
    EXPECT_EQ(at.tree().vertex_sets(), (std::vector<VertexSet>{{}, {0}, {1}, {2}}));
    for (const auto& [from, to] : at.tree().directed_edges()) EXPECT_EQ(from, VertexSet{});
    check_almond_tree(at, UndirectedGraph(3));

    AlmondTree single(1); // no empty-set vertex: it would be redundant
    EXPECT_EQ(single.tree().vertex_sets(), (std::vector<VertexSet>{{0}}));
    EXPECT_THROW(AlmondTree(0), StructuralError);
}

TEST(AlmondTree, RedundantSeparatorRules) {
    AlmondTree at(4);
    drive_to(at, two_triangles());
    // {1,2} has two children: not redundant
    EXPECT_FALSE(at.remove_redundant_separator(VertexSet{1, 2}));
    // a clique has no children: not redundant either
    EXPECT_FALSE(at.remove_redundant_separator(VertexSet{0, 1, 2}));
    EXPECT_THROW(at.remove_redundant_separator(VertexSet{0, 3}), StructuralError);
    check_almond_tree(at, two_triangles());
}

TEST(AlmondTree, DisconnectLastEdgeRestoresTrivialForm) {
    AlmondTree at(2);
    drive_to(at, make_graph(2, {{0, 1}}));
    EXPECT_EQ(at.tree().vertex_sets(), (std::vector<VertexSet>{{0, 1}}));
    // disconnecting brings back the empty-set root with both singletons
    const MoveReport r = at.disconnect_if_enabled(0, 1, VertexSet{0, 1});
    EXPECT_TRUE(r.applied);
    EXPECT_EQ(at.tree().vertex_sets(), (std::vector<VertexSet>{{}, {0}, {1}}));
    check_almond_tree(at, UndirectedGraph(2));
}

TEST(AlmondTree, DisconnectTriangle) {
    AlmondTree at(3);
    drive_to(at, make_graph(3, {{0, 1}, {0, 2}, {1, 2}}));
    const MoveReport r = at.disconnect_if_enabled(0, 1, VertexSet{0, 1, 2});
    EXPECT_TRUE(r.applied);
    EXPECT_EQ(at.tree().vertex_sets(), (std::vector<VertexSet>{{2}, {0, 2}, {1, 2}}));
    const auto edges = at.tree().directed_edges();
    ASSERT_EQ(edges.size(), 2u);
    EXPECT_EQ(edges[0], (std::pair<VertexSet, VertexSet>{{2}, {0, 2}}));
    EXPECT_EQ(edges[1], (std::pair<VertexSet, VertexSet>{{2}, {1, 2}}));
    check_almond_tree(at, make_graph(3, {{0, 2}, {1, 2}}));
}

TEST(AlmondTree, DisconnectTwoTriangles) {
    AlmondTree at(4);
    drive_to(at, two_triangles());
    const MoveReport r = at.disconnect_if_enabled(0, 1, VertexSet{0, 1, 2});
    EXPECT_TRUE(r.applied);
    check_almond_tree(at, make_graph(4, {{0, 2}, {1, 2}, {1, 3}, {2, 3}}));
}

TEST(AlmondTree, DisconnectRejectedWhenNotEnabled) {
    AlmondTree at(4);
    drive_to(at, two_triangles());
    const MoveReport r = at.disconnect_if_enabled(1, 2, VertexSet{0, 1, 2, 3});
    EXPECT_FALSE(r.applied);
    check_almond_tree(at, two_triangles());
}

TEST(AlmondTree, ConnectPathEndpoints) {
    AlmondTree at(3);
    drive_to(at, make_graph(3, {{0, 1}, {1, 2}}));
    const MoveReport r = at.connect_if_enabled(0, 2, VertexSet{1});
    EXPECT_TRUE(r.applied);
    EXPECT_EQ(at.tree().vertex_sets(), (std::vector<VertexSet>{{0, 1, 2}}));
    check_almond_tree(at, make_graph(3, {{0, 1}, {0, 2}, {1, 2}}));
}

TEST(AlmondTree, ConnectAcrossComponents) {
    AlmondTree at(3);
    const MoveReport r = at.connect_if_enabled(0, 1, VertexSet{});
    EXPECT_TRUE(r.applied);
    check_almond_tree(at, make_graph(3, {{0, 1}}));
}

TEST(AlmondTree, ConnectRejectedWhenSxyNotAVertex) {
    AlmondTree at(4);
    drive_to(at, make_graph(4, {{0, 1}, {1, 2}, {2, 3}}));
    const MoveReport r = at.connect_if_enabled(0, 3, VertexSet{});
    EXPECT_FALSE(r.applied);
    check_almond_tree(at, make_graph(4, {{0, 1}, {1, 2}, {2, 3}}));
}

TEST(AlmondTree, ConnectRejectedWhenBothPathsEnterSxyThroughTheSameChild) {
    // Chain of cliques {0,1,2},{1,2,3},{1,3,4} plus pendant {1,5}: {1} is a
    // separator, common neighbours of 0 and 4 reduce to {1}, but 0-2-3-4
    // routes around it, so {1} does not separate.
    const UndirectedGraph g =
        make_graph(6, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {1, 4}, {3, 4}, {1, 5}});
    ASSERT_TRUE(oracle::is_decomposable(g));
    ASSERT_EQ(g.common_neighbours(0, 4), VertexSet{1});
    ASSERT_TRUE(oracle::separator_multiset(g).contains(VertexSet{1}));
    ASSERT_FALSE(separates(g, VertexSet{1}, 0, 4));

    AlmondTree at(6);
    drive_to(at, g);
    const MoveReport r = at.connect_if_enabled(0, 4, VertexSet{1});
    EXPECT_FALSE(r.applied);
    check_almond_tree(at, g);
}

TEST(AlmondTree, ContractViolations) {
    AlmondTree at(4);
    drive_to(at, two_triangles());
    EXPECT_THROW(at.disconnect_if_enabled(0, 3, VertexSet{0, 1, 2, 3}), ContractViolation);
    EXPECT_THROW(at.connect_if_enabled(0, 1, VertexSet{2}), ContractViolation);
}

TEST(AlmondTree, InvariantsHoldAlongRandomWalks) {
    for (const std::uint64_t seed : {4ull, 5ull, 6ull}) {
        AlmondTree at(9);
        RepWalker walker(at, seed);
        for (int i = 0; i < 1200; ++i) {
            if (walker.step()) check_almond_tree(at, walker.mirror());
        }
    }
    AlmondTree at(25);
    RepWalker walker(at, 10);
    for (int i = 0; i < 20000; ++i) walker.step();
    check_almond_tree(at, walker.mirror());
}

TEST(AlmondTree, MaintainedTreeIsAHeaviestSpanningTreeOfTheJunctionGraph) {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 6); // up to 9
        const UndirectedGraph g = random_decomposable(n, 10 * n, rng);
        AlmondTree at(n);
        drive_to(at, g);
        EXPECT_EQ(almond_tree_weight(at), heaviest_junction_spanning_tree_weight(g));
    }
}
