#pragma once

#include <eds/domination.hpp>
#include <eds/graph.hpp>
#include <eds/patterns.hpp>

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

// Random instances use std::mt19937_64, whose output sequence is fixed by the
// standard. A draw r becomes the uniform value (r >> 11) * 2^-53, and an event
// of probability p happens when that value is < p.

namespace eds {

class BadParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class TriesExhausted : public std::runtime_error {
public:
    explicit TriesExhausted(std::size_t tries) :
        std::runtime_error("no S(1,1,5)-free graph after " + std::to_string(tries) + " tries"), tries(tries)
    {
    }
    std::size_t tries;
};

inline auto splitmix64(std::uint64_t x) -> std::uint64_t
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

namespace detail {
    inline auto bernoulli(std::mt19937_64 & rng, double p) -> bool
    {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
    }

    inline void check_probability(double p)
    {
        if (! (p >= 0.0 && p <= 1.0))
            throw BadParameter("probability must lie in [0, 1]");
    }
}

/// X = 0..nx-1, Y = nx..nx+ny-1; pairs are drawn x-major.
inline auto gen_random(std::size_t nx, std::size_t ny, double p, std::uint64_t seed) -> BipartiteGraph
{
    detail::check_probability(p);
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t y = 0; y < ny; ++y)
            if (detail::bernoulli(rng, p))
                edges.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(nx + y));
    return BipartiteGraph::from_edge_list(nx + ny, edges);
}

struct FilteredGraph {
    BipartiteGraph graph;
    std::size_t tries = 0;
};

/// Try t (from 0) samples gen_random with seed splitmix64(seed + t).
inline auto gen_s115_free(std::size_t nx, std::size_t ny, double p, std::uint64_t seed, std::size_t max_tries)
    -> FilteredGraph
{
    for (std::size_t t = 0; t < max_tries; ++t) {
        auto g = gen_random(nx, ny, p, splitmix64(seed + t));
        if (is_s115_free(g))
            return {std::move(g), t + 1};
    }
    throw TriesExhausted(max_tries);
}

struct PlantedInstance {
    BipartiteGraph graph;
    EdsSolution planted;
};

/// nd solution vertices on alternating sides, each with `spread` private
/// neighbours; non-solution vertices of opposite sides are then joined with
/// probability extra_p, and ids are shuffled.
inline auto gen_planted(std::size_t nd, std::size_t spread, double extra_p, std::uint64_t seed) -> PlantedInstance
{
    if (nd == 0)
        throw BadParameter("planted solution needs at least one vertex");
    detail::check_probability(extra_p);
    std::mt19937_64 rng(seed);
    const std::size_t n = nd * (1 + spread);
    // before shuffling: solution vertex i, its neighbours nd + i*spread + j
    auto owner = [&](std::size_t v) { return (v - nd) / spread; };
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < nd; ++i)
        for (std::size_t j = 0; j < spread; ++j)
            edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(nd + i * spread + j));
    for (std::size_t a = nd; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (owner(a) % 2 != owner(b) % 2 && detail::bernoulli(rng, extra_p))
                edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));

    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    for (std::size_t i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng() % (i + 1)]);
    for (auto & [u, v] : edges) {
        u = perm[u];
        v = perm[v];
    }
    std::vector<Vertex> d;
    for (std::size_t i = 0; i < nd; ++i)
        d.push_back(perm[i]);

    PlantedInstance out{BipartiteGraph::from_edge_list(n, edges), EdsSolution(std::move(d))};
    if (! verify(out.graph, out.planted).valid)
        throw std::logic_error("planted construction broke domination");
    return out;
}

/// Named families: path and cycle numbered along the path/cycle, star with
/// centre 0, complete_bipartite(n) = K(n/2 rounded down, rest) with the
/// smaller side first, spider115 = centre 0, leaves 1 and 2, tail 3..7 (n is
/// ignored).
inline auto gen_family(const std::string & name, std::size_t n) -> BipartiteGraph
{
    std::vector<Edge> edges;
    auto link = [&](std::size_t a, std::size_t b) { edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b)); };
    if (name == "path") {
        if (n == 0)
            throw BadParameter("path needs at least one vertex");
        for (std::size_t i = 0; i + 1 < n; ++i)
            link(i, i + 1);
    }
    else if (name == "cycle") {
        if (n < 4 || n % 2 != 0)
            throw BadParameter("bipartite cycle needs an even length of at least 4");
        for (std::size_t i = 0; i < n; ++i)
            link(i, (i + 1) % n);
    }
    else if (name == "star") {
        if (n == 0)
            throw BadParameter("star needs at least one vertex");
        for (std::size_t i = 1; i < n; ++i)
            link(0, i);
    }
    else if (name == "complete_bipartite") {
        auto left = n / 2;
        for (std::size_t a = 0; a < left; ++a)
            for (std::size_t b = left; b < n; ++b)
                link(a, b);
    }
    else if (name == "spider115") {
        n = 8;
        for (std::size_t leaf : {1, 2, 3})
            link(0, leaf);
        for (std::size_t i = 3; i < 7; ++i)
            link(i, i + 1);
    }
    else
        throw BadParameter("unknown family '" + name + "'");
    return BipartiteGraph::from_edge_list(n, edges);
}

}
