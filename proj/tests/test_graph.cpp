#include <eds/generators.hpp>
#include <eds/graph.hpp>

#include <gtest/gtest.h>

#include <deque>

using namespace eds;

namespace {
    auto make(std::size_t n, std::vector<Edge> edges) -> BipartiteGraph
    {
        return BipartiteGraph::from_edge_list(n, edges);
    }

    auto reference_distances(const BipartiteGraph & g, Vertex s) -> std::vector<int>
    {
        std::vector<int> dist(g.size(), -1);
        dist[s] = 0;
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto [u, v] : g.edges())
                for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}})
                    if (dist[a] >= 0 && (dist[b] < 0 || dist[b] > dist[a] + 1)) {
                        dist[b] = dist[a] + 1;
                        changed = true;
                    }
        }
        return dist;
    }
}

TEST(Graph, EdgeListIsNormalised)
{
    auto g = make(4, {{1, 0}, {0, 1}, {2, 1}, {3, 2}});
    EXPECT_EQ(g.size(), 4u);
    EXPECT_EQ(g.edge_count(), 3u);
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
    EXPECT_TRUE(g.adjacent(2, 1));
    EXPECT_FALSE(g.adjacent(0, 2));
}

TEST(Graph, CanonicalColouringPutsSmallestIdOnX)
{
    auto g = make(6, {{3, 1}, {1, 5}, {2, 4}});
    EXPECT_EQ(g.side(0), Side::X);
    EXPECT_EQ(g.side(1), Side::X);
    EXPECT_EQ(g.side(3), Side::Y);
    EXPECT_EQ(g.side(5), Side::Y);
    EXPECT_EQ(g.side(2), Side::X);
    EXPECT_EQ(g.side(4), Side::Y);
}

TEST(Graph, RejectsBadInput)
{
    EXPECT_THROW(make(3, {{0, 0}}), SelfLoop);
    EXPECT_THROW(make(3, {{0, 3}}), VertexOutOfRange);
    try {
        make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
        FAIL() << "odd cycle accepted";
    }
    catch (const NotBipartite & e) {
        EXPECT_EQ(e.cycle(), (std::vector<Vertex>{0, 1, 2, 3, 4}));
    }
    try {
        make(4, {{3, 2}, {2, 1}, {1, 3}});
        FAIL() << "triangle accepted";
    }
    catch (const NotBipartite & e) {
        EXPECT_EQ(e.cycle(), (std::vector<Vertex>{1, 2, 3}));
    }
}

TEST(Graph, EmptyGraph)
{
    auto g = make(0, {});
    EXPECT_EQ(g.size(), 0u);
    EXPECT_EQ(components(g).count(), 0u);
}

TEST(Graph, DistanceOnPath)
{
    auto g = gen_family("path", 6);
    EXPECT_EQ(distance(g, 0, 5), 5u);
    EXPECT_EQ(distance(g, 3, 3), 0u);
    auto h = make(4, {{0, 1}, {2, 3}});
    EXPECT_FALSE(distance(h, 0, 3).has_value());
}

TEST(Graph, ComponentsOrderedBySmallestMember)
{
    auto g = make(7, {{5, 6}, {0, 3}, {3, 4}, {1, 2}});
    auto c = components(g);
    ASSERT_EQ(c.count(), 3u);
    EXPECT_EQ(c.members[0], (std::vector<Vertex>{0, 3, 4}));
    EXPECT_EQ(c.members[1], (std::vector<Vertex>{1, 2}));
    EXPECT_EQ(c.members[2], (std::vector<Vertex>{5, 6}));
    EXPECT_EQ(c.component_id[4], 0u);
    EXPECT_EQ(c.component_id[6], 2u);
}

TEST(Graph, ComponentsWithinMask)
{
    auto g = gen_family("path", 5);
    VertexMask m{true, true, false, true, true};
    auto c = components(g, m);
    ASSERT_EQ(c.count(), 2u);
    EXPECT_EQ(c.component_id[2], SIZE_MAX);
}

TEST(Graph, DistanceLevelsFromBasis)
{
    auto g = gen_family("path", 8);
    std::vector<Vertex> basis{1};
    DistanceLevels levels(g, basis);
    EXPECT_EQ(levels.depth(), 7u);
    EXPECT_EQ(std::vector<Vertex>(levels.bucket(1).begin(), levels.bucket(1).end()), (std::vector<Vertex>{0, 2}));
    EXPECT_EQ(levels.level(7), 6u);
    EXPECT_TRUE(levels.in_range(4, 2, 3));
    EXPECT_TRUE(levels.bucket(12).empty());
    EXPECT_THROW(DistanceLevels(g, std::vector<Vertex>{}), EmptySources);
}

TEST(Graph, InducedSubgraphKeepsSides)
{
    auto g = gen_family("path", 6);
    std::vector<Vertex> vs{1, 2, 3};
    auto sub = induced_subgraph(g, vs);
    EXPECT_EQ(sub.graph.size(), 3u);
    EXPECT_EQ(sub.graph.edge_count(), 2u);
    EXPECT_EQ(sub.graph.side(0), g.side(1));
    EXPECT_EQ(sub.to_global, vs);
}

TEST(GraphProperty, ColouringProperAndLevelsMatchReference)
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto g = gen_random(6, 7, 0.25, seed);
        for (auto [u, v] : g.edges())
            ASSERT_NE(g.side(u), g.side(v));
        auto parts = components(g);
        for (auto & members : parts.members)
            ASSERT_EQ(g.side(members.front()), Side::X);
        Vertex s = static_cast<Vertex>(seed % g.size());
        auto ref = reference_distances(g, s);
        DistanceLevels levels(g, std::span<const Vertex>(&s, 1));
        for (Vertex v = 0; v < g.size(); ++v) {
            auto lv = levels.level(v);
            ASSERT_EQ(lv.has_value(), ref[v] >= 0);
            if (lv)
                ASSERT_EQ(static_cast<int>(*lv), ref[v]);
            ASSERT_EQ(distance(g, s, v).has_value(), ref[v] >= 0);
        }
    }
}
