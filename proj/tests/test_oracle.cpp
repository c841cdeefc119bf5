#include <gtest/gtest.h>

#include <random>

#include "chordal/errors.hpp"
#include "chordal/oracle.hpp"
#include "support/test_support.hpp"

using namespace chordal;
using chordal::testing::make_graph;
using chordal::testing::random_decomposable;

namespace {

UndirectedGraph two_triangles() {
    return make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
}

} // namespace

TEST(Oracle, FourCycleIsNotDecomposable) {
    EXPECT_FALSE(oracle::is_decomposable(make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})));
}

TEST(Oracle, TreesAreDecomposable) {
    EXPECT_TRUE(oracle::is_decomposable(make_graph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}})));
    EXPECT_TRUE(oracle::is_decomposable(UndirectedGraph(4)));
    EXPECT_TRUE(oracle::is_decomposable(UndirectedGraph(1)));
}

TEST(Oracle, SixtyOneOfSixtyFourGraphsOnFourVerticesAreDecomposable) {
    const std::pair<int, int> pairs[6] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    int count = 0;
    for (int mask = 0; mask < 64; ++mask) {
        UndirectedGraph g(4);
        for (int i = 0; i < 6; ++i) {
            if (mask & (1 << i)) g.add_edge(pairs[i].first, pairs[i].second);
        }
        if (oracle::is_decomposable(g)) ++count;
    }
    // all but the three labelled 4-cycles
    EXPECT_EQ(count, 61);
}

TEST(Oracle, EnumerateCliques) {
    EXPECT_EQ(oracle::enumerate_cliques(two_triangles()),
              (std::vector<VertexSet>{{0, 1, 2}, {1, 2, 3}}));
    EXPECT_EQ(oracle::enumerate_cliques(UndirectedGraph(3)),
              (std::vector<VertexSet>{{0}, {1}, {2}}));
    const UndirectedGraph k4 =
        make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    EXPECT_EQ(oracle::enumerate_cliques(k4), (std::vector<VertexSet>{{0, 1, 2, 3}}));
}

TEST(Oracle, CliquesArePairwiseIncomparableAndCoverEdges) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const UndirectedGraph g = random_decomposable(9, 60, rng);
        const auto cliques = oracle::enumerate_cliques(g);
        UndirectedGraph covered(g.order());
        for (std::size_t i = 0; i < cliques.size(); ++i) {
            for (std::size_t j = 0; j < cliques.size(); ++j) {
                if (i != j) EXPECT_FALSE(cliques[i].is_subset_of(cliques[j]));
            }
            const auto& ids = cliques[i].ids();
            for (std::size_t a = 0; a < ids.size(); ++a) {
                for (std::size_t b = a + 1; b < ids.size(); ++b) {
                    EXPECT_TRUE(g.has_edge(ids[a], ids[b]));
                    covered.add_edge(ids[a], ids[b]);
                }
            }
        }
        EXPECT_TRUE(covered == g);
    }
}

TEST(Oracle, SeparatorMultisets) {
    SeparatorMultiset expected;
    expected.add(VertexSet{1, 2});
    EXPECT_EQ(oracle::separator_multiset(two_triangles()), expected);

    // star centred on 1 with three leaves: {1} has multiplicity 2
    SeparatorMultiset star;
    star.add(VertexSet{1}, 2);
    EXPECT_EQ(oracle::separator_multiset(make_graph(4, {{1, 0}, {1, 2}, {1, 3}})), star);

    SeparatorMultiset empties;
    empties.add(VertexSet{}, 3);
    EXPECT_EQ(oracle::separator_multiset(UndirectedGraph(4)), empties);

    EXPECT_THROW(oracle::separator_multiset(make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})),
                 StructuralError);
}

TEST(Oracle, SeparatorMultisetInvariantToPerfectOrdering) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 15; ++trial) {
        const UndirectedGraph g = random_decomposable(10, 80, rng);
        const SeparatorMultiset reference = oracle::separator_multiset(g);
        for (int k = 0; k < 5; ++k) {
            const auto po = oracle::perfect_ordering(g, rng);
            SeparatorMultiset via_po;
            for (std::size_t i = 1; i < po.separators.size(); ++i) via_po.add(po.separators[i]);
            EXPECT_EQ(via_po, reference);
            // running intersection: every separator sits inside an earlier clique
            for (std::size_t i = 1; i < po.cliques.size(); ++i) {
                bool housed = false;
                for (std::size_t j = 0; j < i && !housed; ++j)
                    housed = po.separators[i].is_subset_of(po.cliques[j]);
                EXPECT_TRUE(housed);
            }
        }
    }
}

TEST(Oracle, EdgeCountIdentity) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const UndirectedGraph g = random_decomposable(11, 90, rng);
        long long total = 0;
        for (const VertexSet& c : oracle::enumerate_cliques(g))
            total += static_cast<long long>(c.size()) * (c.size() - 1) / 2;
        for (const auto& [s, mult] : oracle::separator_multiset(g).counts())
            total -= static_cast<long long>(mult) * s.size() * (s.size() - 1) / 2;
        EXPECT_EQ(total, static_cast<long long>(g.edge_count()));
    }
}

TEST(Oracle, JunctionPropertyChecker) {
    SetGraph jt;
    const auto abc = jt.add_vertex(VertexSet{0, 1, 2});
    const auto bcd = jt.add_vertex(VertexSet{1, 2, 3});
    jt.add_undirected_edge(abc, bcd);
    EXPECT_TRUE(oracle::check_junction_property(jt));
    EXPECT_TRUE(oracle::check_junction_property_exhaustive(jt, 4));

    // {0,1} - {2} - {0,2}: the vertices containing 0 are not adjacent
    SetGraph bad;
    const auto ab = bad.add_vertex(VertexSet{0, 1});
    const auto c = bad.add_vertex(VertexSet{2});
    const auto ac = bad.add_vertex(VertexSet{0, 2});
    bad.add_undirected_edge(ab, c);
    bad.add_undirected_edge(c, ac);
    EXPECT_FALSE(oracle::check_junction_property(bad));
    EXPECT_FALSE(oracle::check_junction_property_exhaustive(bad, 3));
}

TEST(Oracle, JunctionPropertySufficientSetMatchesExhaustive) {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> nv(2, 5);
    std::uniform_int_distribution<int> elem(0, 6);
    std::uniform_int_distribution<int> sz(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
        SetGraph sg;
        const int m = nv(rng);
        std::vector<SetGraph::NodeId> ids;
        for (int i = 0; i < m; ++i) {
            VertexSet s;
            const int k = sz(rng);
            for (int j = 0; j < k; ++j) s.insert(elem(rng));
            if (sg.has_vertex(s)) continue;
            ids.push_back(sg.add_vertex(s));
        }
        std::uniform_int_distribution<std::size_t> pick(0, ids.size() - 1);
        for (std::size_t e = 0; e + 1 < ids.size(); ++e) {
            const auto a = ids[pick(rng)];
            const auto b = ids[pick(rng)];
            if (a != b && !sg.has_directed_edge(a, b) && !sg.has_directed_edge(b, a))
                sg.add_undirected_edge(a, b);
        }
        EXPECT_EQ(oracle::check_junction_property(sg),
                  oracle::check_junction_property_exhaustive(sg, 7));
    }
}

TEST(Oracle, RebuildIbarraTwoTriangles) {
    const SetGraph ig = oracle::rebuild_ibarra(two_triangles());
    EXPECT_EQ(ig.vertex_sets(), (std::vector<VertexSet>{{1, 2}, {0, 1, 2}, {1, 2, 3}}));
    const auto edges = ig.directed_edges();
    ASSERT_EQ(edges.size(), 2u);
    EXPECT_EQ(edges[0], (std::pair<VertexSet, VertexSet>{{1, 2}, {0, 1, 2}}));
    EXPECT_EQ(edges[1], (std::pair<VertexSet, VertexSet>{{1, 2}, {1, 2, 3}}));
}

TEST(Oracle, RebuildIbarraTrivialGraph) {
    const SetGraph ig = oracle::rebuild_ibarra(UndirectedGraph(2));
    EXPECT_EQ(ig.vertex_sets(), (std::vector<VertexSet>{{}, {0}, {1}}));
    const auto edges = ig.directed_edges();
    ASSERT_EQ(edges.size(), 2u);
    EXPECT_EQ(edges[0].first, VertexSet{});
    EXPECT_EQ(edges[1].first, VertexSet{});
}

TEST(Oracle, LegalityOracle) {
    const UndirectedGraph g = two_triangles();
    EXPECT_FALSE(oracle::legality_oracle(g, 1, 2)); // removing shared edge leaves 4-cycle
    EXPECT_TRUE(oracle::legality_oracle(g, 0, 1));
    const UndirectedGraph path = make_graph(3, {{0, 1}, {1, 2}});
    EXPECT_TRUE(oracle::legality_oracle(path, 0, 2));
    const UndirectedGraph path4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    EXPECT_FALSE(oracle::legality_oracle(path4, 0, 3)); // would close a 4-cycle
}
