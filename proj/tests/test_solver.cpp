#include <eds/generators.hpp>
#include <eds/solver.hpp>

#include <support/brute_force.hpp>

#include <gtest/gtest.h>

using namespace eds;

namespace {
    auto disjoint_union(const BipartiteGraph & a, const BipartiteGraph & b) -> BipartiteGraph
    {
        auto edges = a.edges();
        auto off = static_cast<Vertex>(a.size());
        for (auto [u, v] : b.edges())
            edges.emplace_back(u + off, v + off);
        return BipartiteGraph::from_edge_list(a.size() + b.size(), edges);
    }

    auto replay(const BipartiteGraph & g, const SolveTrace & trace) -> StateMap
    {
        StateMap s(g.size());
        for (auto & c : trace.components)
            for (auto & e : c.events)
                EXPECT_FALSE(apply_event(g, s, e));
        return s;
    }

    // depth <= 2: root 0, children, grandchildren
    auto random_shallow_tree(std::uint64_t seed) -> BipartiteGraph
    {
        std::mt19937_64 rng(seed);
        std::vector<Edge> edges;
        Vertex next = 1;
        auto kids = 1 + rng() % 4;
        for (std::size_t i = 0; i < kids; ++i) {
            Vertex c = next++;
            edges.emplace_back(0, c);
            auto grand = rng() % 4;
            for (std::size_t j = 0; j < grand; ++j)
                edges.emplace_back(c, next++);
        }
        return BipartiteGraph::from_edge_list(next, edges);
    }
}

TEST(Solve, P6UsesTheSeedPair)
{
    auto g = gen_family("path", 6);
    auto r = solve(g);
    ASSERT_TRUE(r.solution);
    EXPECT_EQ(r.solution->vertices(), (std::vector<Vertex>{1, 4}));
    ASSERT_EQ(r.trace.components.size(), 1u);
    EXPECT_EQ(r.trace.components[0].branch, BranchLabel::B);
    ASSERT_TRUE(r.trace.components[0].candidate);
    EXPECT_EQ(r.trace.components[0].candidate->vertices, (std::vector<Vertex>{0, 1, 2, 3, 4, 5}));
    EXPECT_EQ(brute::all_eds(g).size(), 1u);
}

TEST(Solve, C4HasNoSolution)
{
    auto g = gen_family("cycle", 4);
    EXPECT_FALSE(solve(g).solution);
    EXPECT_TRUE(brute::all_eds(g).empty());
}

TEST(Solve, P8SolutionOfSizeThree)
{
    auto g = gen_family("path", 8);
    auto r = solve(g);
    ASSERT_TRUE(r.solution);
    EXPECT_EQ(r.solution->size(), 3u);
    EXPECT_TRUE(verify(g, *r.solution).valid);
    EXPECT_EQ(brute::all_eds(g).size(), 2u);
}

TEST(Solve, SmallFamilies)
{
    auto star = solve(gen_family("star", 6));
    ASSERT_TRUE(star.solution);
    EXPECT_EQ(star.solution->vertices(), (std::vector<Vertex>{0}));
    EXPECT_EQ(star.trace.components[0].branch, BranchLabel::Singleton);

    auto p4 = solve(gen_family("path", 4));
    ASSERT_TRUE(p4.solution);
    EXPECT_EQ(p4.solution->vertices(), (std::vector<Vertex>{0, 3}));

    for (std::size_t n : {6u, 8u, 10u, 12u}) {
        auto g = gen_family("cycle", n);
        EXPECT_EQ(solve(g).solution.has_value(), n % 3 == 0) << "C" << n;
    }
    EXPECT_FALSE(solve(gen_family("complete_bipartite", 6)).solution);
    EXPECT_TRUE(solve(BipartiteGraph::from_edge_list(0, {})).solution);
}

TEST(Solve, StrictModeRejectsSpider)
{
    SolveOptions strict;
    strict.strictness = Strictness::Strict;
    auto g = gen_family("spider115", 0);
    try {
        solve(g, strict);
        FAIL() << "spider accepted";
    }
    catch (const NotS115Free & e) {
        EXPECT_EQ(e.witness().vertices, (std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6, 7}));
    }
    auto r = solve(g);
    if (r.solution)
        EXPECT_TRUE(verify(g, *r.solution).valid);
    EXPECT_EQ(r.solution.has_value(), ! brute::all_eds(g).empty());
}

TEST(Solve, TraceReplaysToTheSolution)
{
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        auto g = gen_random(7, 8, 0.22, seed);
        auto r = solve(g);
        if (! r.solution)
            continue;
        auto s = replay(g, r.trace);
        ASSERT_EQ(s.basis(), r.solution->vertices()) << "seed " << seed;
    }
}

TEST(Solve, ComparesWithOracle)
{
    auto p7 = solve_compare(gen_family("path", 7));
    EXPECT_TRUE(p7.agree);
    ASSERT_TRUE(p7.oracle);
    EXPECT_EQ(p7.oracle->vertices(), (std::vector<Vertex>{0, 3, 6}));
    EXPECT_TRUE(p7.driver);

    auto c6 = solve_compare(gen_family("cycle", 6));
    EXPECT_TRUE(c6.agree);
    ASSERT_TRUE(c6.driver);
    EXPECT_EQ(c6.driver->size(), 2u);

    auto c4 = solve_compare(gen_family("cycle", 4));
    EXPECT_TRUE(c4.agree);
    EXPECT_FALSE(c4.driver);
    EXPECT_FALSE(c4.oracle);
}

TEST(SolveProperty, SoundOnArbitraryBipartiteGraphs)
{
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        auto g = gen_random(5 + seed % 8, 5 + seed % 7, 0.1 + 0.05 * static_cast<double>(seed % 6), seed);
        auto r = solve(g);
        if (r.solution)
            ASSERT_TRUE(verify(g, *r.solution).valid) << "seed " << seed;
    }
}

TEST(SolveProperty, CompleteOnSmallFreeGraphs)
{
    std::size_t checked = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        auto g = gen_random(7, 7, 0.15 + 0.05 * static_cast<double>(seed % 4), seed);
        if (! is_s115_free(g))
            continue;
        SolveOptions strict;
        strict.strictness = Strictness::Strict;
        auto r = solve(g, strict);
        ASSERT_EQ(r.solution.has_value(), ! brute::all_eds(g).empty()) << "seed " << seed;
        ++checked;
    }
    EXPECT_GT(checked, 100u);
}

TEST(SolveProperty, ComponentsAreIndependent)
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto a = gen_random(4, 5, 0.3, seed);
        auto b = gen_random(5, 4, 0.3, seed + 1000);
        auto ra = solve(a), rb = solve(b), ru = solve(disjoint_union(a, b));
        ASSERT_EQ(ru.solution.has_value(), ra.solution && rb.solution) << "seed " << seed;
        if (ru.solution) {
            auto expected = ra.solution->vertices();
            for (auto v : rb.solution->vertices())
                expected.push_back(v + static_cast<Vertex>(a.size()));
            ASSERT_EQ(ru.solution->vertices(), expected);
        }
    }
}

TEST(SolveProperty, Deterministic)
{
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto g = gen_random(8, 8, 0.2, seed);
        auto a = solve(g), b = solve(g);
        ASSERT_EQ(a.solution, b.solution);
        ASSERT_EQ(a.trace.components.size(), b.trace.components.size());
        for (std::size_t i = 0; i < a.trace.components.size(); ++i) {
            ASSERT_EQ(a.trace.components[i].events, b.trace.components[i].events);
            ASSERT_EQ(a.trace.components[i].branch, b.trace.components[i].branch);
        }
    }
}

TEST(SolveProperty, BranchASettlesShallowTrees)
{
    std::size_t covered = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        auto g = random_shallow_tree(seed);
        VertexMask mid(g.size(), false);
        for (auto & p : enumerate_induced_paths(g, 4))
            mid[p.vertices[1]] = mid[p.vertices[2]] = true;
        bool avoids = false;
        for (auto & d : brute::all_eds(g))
            avoids = avoids || std::none_of(d.begin(), d.end(), [&](Vertex v) { return mid[v]; });
        if (! avoids)
            continue;
        auto r = solve(g);
        ASSERT_TRUE(r.solution) << "seed " << seed;
        auto branch = r.trace.components[0].branch;
        ASSERT_TRUE(branch == BranchLabel::A || branch == BranchLabel::Singleton) << "seed " << seed;
        ++covered;
    }
    EXPECT_GT(covered, 20u);
}

TEST(SolveProperty, FallbackOnlyAddsSolutions)
{
    SolveOptions fb;
    fb.oracle_fallback = true;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto g = gen_random(6, 6, 0.3, seed);
        auto r = solve(g, fb);
        ASSERT_EQ(r.solution.has_value(), ! brute::all_eds(g).empty());
    }
}
