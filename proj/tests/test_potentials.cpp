#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "chordal/errors.hpp"
#include "chordal/oracle.hpp"
#include "chordal/potentials.hpp"
#include "support/test_support.hpp"

using namespace chordal;
using chordal::testing::make_graph;
using chordal::testing::random_decomposable;

namespace {

GraphLogProb log_prob_of(const PotentialModel& model, const UndirectedGraph& g) {
    return graph_log_prob(model, oracle::enumerate_cliques(g), oracle::separator_multiset(g));
}

UndirectedGraph two_triangles() {
    return make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
}

} // namespace

TEST(Potentials, UniformModelIsAllZero) {
    const PotentialModel m = uniform_model();
    EXPECT_EQ(m.log_phi(VertexSet{0, 1, 2}), 0.0);
    EXPECT_EQ(m.log_phi(VertexSet{}), 0.0);
    EXPECT_EQ(log_prob_of(m, two_triangles()), 0.0);
    EXPECT_EQ(log_prob_of(m, UndirectedGraph(5)), 0.0);
}

TEST(Potentials, MaxCliqueModel) {
    const PotentialModel m = max_clique_model(3);
    EXPECT_EQ(m.log_phi(VertexSet{0, 1, 2}), 0.0);
    EXPECT_EQ(m.log_phi(VertexSet{0, 1, 2, 3}), kNegInf);
    EXPECT_THROW(max_clique_model(0), ModelMisuse);
}

TEST(Potentials, MaxCliqueOneLeavesOnlyTheEmptyGraph) {
    // Enumerate all 8 graphs on 3 vertices (all decomposable): any edge
    // creates a 2-clique, so only the empty graph keeps positive mass.
    const PotentialModel m = max_clique_model(1);
    const std::pair<int, int> pairs[3] = {{0, 1}, {0, 2}, {1, 2}};
    int positive = 0;
    for (int mask = 0; mask < 8; ++mask) {
        UndirectedGraph g(3);
        for (int i = 0; i < 3; ++i) {
            if (mask & (1 << i)) g.add_edge(pairs[i].first, pairs[i].second);
        }
        ASSERT_TRUE(oracle::is_decomposable(g));
        if (log_prob_of(m, g) != kNegInf) {
            ++positive;
            EXPECT_EQ(g.edge_count(), 0u);
        }
    }
    EXPECT_EQ(positive, 1);
}

TEST(Potentials, EdgePenaltyValues) {
    const PotentialModel a1 = edge_penalty_model(1.0);
    EXPECT_EQ(a1.log_phi(VertexSet{}), 0.0);
    EXPECT_EQ(a1.log_phi(VertexSet{0}), 0.0);
    EXPECT_EQ(a1.log_phi(VertexSet{0, 1}), -1.0);
    EXPECT_EQ(a1.log_phi(VertexSet{0, 1, 2}), -3.0);
    EXPECT_EQ(edge_penalty_model(2.0).log_phi(VertexSet{0, 1}), -2.0);
}

TEST(Potentials, GraphLogProbOfTrivialGraph) {
    // Sum_v log phi({v}) - (n-1) log phi(empty); with the edge penalty both
    // terms vanish, so make phi(empty) matter through a custom model.
    const PotentialModel m("affine", [](const VertexSet& s) { return 1.0 + s.size(); });
    const int n = 5;
    const GraphLogProb lp = log_prob_of(m, UndirectedGraph(n));
    EXPECT_DOUBLE_EQ(lp, n * 2.0 - (n - 1) * 1.0);
}

TEST(Potentials, TwoTriangleEdgePenaltyIsMinusFive) {
    // log phi({a,b,c}) + log phi({b,c,d}) - log phi({b,c}) = -3 - 3 + 1
    const GraphLogProb lp = log_prob_of(edge_penalty_model(1.0), two_triangles());
    EXPECT_DOUBLE_EQ(lp, -5.0);
}

TEST(Potentials, EdgePenaltyEqualsMinusAlphaTimesEdges) {
    std::mt19937_64 rng(5);
    const double alpha = 1.75;
    const PotentialModel m = edge_penalty_model(alpha);
    for (int trial = 0; trial < 20; ++trial) {
        const UndirectedGraph g = random_decomposable(8, 60, rng);
        EXPECT_NEAR(log_prob_of(m, g), -alpha * static_cast<double>(g.edge_count()), 1e-9);
    }
}

TEST(Potentials, ConnectionDeltaIsMinusAlpha) {
    // Every legal connection shifts log pi by exactly -alpha (ratio e^-2 for
    // alpha = 2), verified by full enumeration before and after.
    std::mt19937_64 rng(9);
    const double alpha = 2.0;
    const PotentialModel m = edge_penalty_model(alpha);
    int checked = 0;
    for (int trial = 0; trial < 30; ++trial) {
        UndirectedGraph g = random_decomposable(6, 40, rng);
        for (int x = 0; x < 6; ++x) {
            for (int y = x + 1; y < 6; ++y) {
                if (g.has_edge(x, y) || !oracle::legality_oracle(g, x, y)) continue;
                const GraphLogProb before = log_prob_of(m, g);
                UndirectedGraph h = g;
                h.add_edge(x, y);
                EXPECT_NEAR(log_prob_of(m, h) - before, -alpha, 1e-9);
                ++checked;
            }
        }
    }
    EXPECT_GT(checked, 50);
}

TEST(Potentials, SeparatorOrderIrrelevant) {
    const PotentialModel m = edge_penalty_model(0.5);
    SeparatorMultiset s1, s2;
    s1.add(VertexSet{1});
    s1.add(VertexSet{2, 3});
    s1.add(VertexSet{1});
    s2.add(VertexSet{2, 3});
    s2.add(VertexSet{1}, 2);
    const std::vector<VertexSet> cliques{{0, 1, 2}, {1, 2, 3}};
    EXPECT_DOUBLE_EQ(graph_log_prob(m, cliques, s1), graph_log_prob(m, cliques, s2));
}

TEST(Potentials, MaxCliqueFiniteIffAllCliquesSmall) {
    const PotentialModel m = max_clique_model(3);
    SeparatorMultiset seps;
    seps.add(VertexSet{1, 2});
    EXPECT_EQ(graph_log_prob(m, {{0, 1, 2}, {1, 2, 3}}, seps), 0.0);
    EXPECT_EQ(graph_log_prob(m, {{0, 1, 2, 4}, {1, 2, 3}}, seps), kNegInf);
}

TEST(Potentials, ZeroSeparatorWithPositiveCliquesIsMisuse) {
    const PotentialModel m("zero-on-{1}", [](const VertexSet& s) {
        return s == VertexSet{1} ? kNegInf : 0.0;
    });
    SeparatorMultiset seps;
    seps.add(VertexSet{1});
    EXPECT_THROW(graph_log_prob(m, {{0, 1}, {1, 2}}, seps), ModelMisuse);
    // but a zero clique dominates: -inf, no throw
    const PotentialModel m2("zero-on-{0 1}", [](const VertexSet& s) {
        return s.size() >= 1 ? kNegInf : 0.0;
    });
    EXPECT_EQ(graph_log_prob(m2, {{0, 1}, {1, 2}}, seps), kNegInf);
}
