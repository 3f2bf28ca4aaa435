#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eds {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

enum class Side : std::uint8_t { X, Y };

inline auto opposite(Side s) -> Side { return s == Side::X ? Side::Y : Side::X; }

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotBipartite : public GraphError {
public:
    explicit NotBipartite(std::vector<Vertex> cycle) :
        GraphError("graph is not bipartite (odd cycle of length " + std::to_string(cycle.size()) + ")"),
        cycle_(std::move(cycle))
    {
    }

    // Odd cycle, rotated to start at its smallest vertex, direction chosen so
    // the second entry is the smaller of the two cycle neighbours.
    [[nodiscard]] auto cycle() const -> const std::vector<Vertex> & { return cycle_; }

private:
    std::vector<Vertex> cycle_;
};

class SelfLoop : public GraphError {
public:
    explicit SelfLoop(Vertex v) : GraphError("self-loop at vertex " + std::to_string(v)), vertex(v) {}
    Vertex vertex;
};

class VertexOutOfRange : public GraphError {
public:
    VertexOutOfRange(Vertex v, std::size_t n) :
        GraphError("vertex " + std::to_string(v) + " out of range for n = " + std::to_string(n))
    {
    }
};

// Boolean per-vertex membership, the workhorse for "vertex set" arguments.
using VertexMask = std::vector<bool>;

inline auto mask_of(std::size_t n, std::span<const Vertex> vs) -> VertexMask
{
    VertexMask m(n, false);
    for (auto v : vs)
        m[v] = true;
    return m;
}

inline auto members_of(const VertexMask & m) -> std::vector<Vertex>
{
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < m.size(); ++v)
        if (m[v])
            out.push_back(static_cast<Vertex>(v));
    return out;
}

/// Immutable simple bipartite graph with a proper two-colouring.
///
/// Neighbour lists are sorted and duplicate-free. The colouring produced by
/// from_edge_list is canonical: in every connected component the vertex with
/// the smallest id is on side X.
class BipartiteGraph {
public:
    BipartiteGraph() = default;

    static auto from_edge_list(std::size_t n, std::span<const Edge> edges) -> BipartiteGraph
    {
        std::vector<std::vector<Vertex>> adj(n);
        for (auto [u, v] : edges) {
            if (u >= n)
                throw VertexOutOfRange(u, n);
            if (v >= n)
                throw VertexOutOfRange(v, n);
            if (u == v)
                throw SelfLoop(u);
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        for (auto & list : adj) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
        }
        auto sides = two_colour(adj);
        return BipartiteGraph(std::move(adj), std::move(sides));
    }

    // Builds a graph from adjacency and sides that are already known to form
    // a proper colouring (subgraphs of an existing BipartiteGraph).
    static auto from_coloured(std::vector<std::vector<Vertex>> adj, std::vector<Side> sides) -> BipartiteGraph
    {
        for (auto & list : adj) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
        }
        for (std::size_t v = 0; v < adj.size(); ++v)
            for (auto w : adj[v])
                if (sides[v] == sides[w])
                    throw GraphError("colouring is not proper on edge " + std::to_string(v) + "-" + std::to_string(w));
        return BipartiteGraph(std::move(adj), std::move(sides));
    }

    [[nodiscard]] auto size() const -> std::size_t { return adj_.size(); }
    [[nodiscard]] auto edge_count() const -> std::size_t { return edge_count_; }
    [[nodiscard]] auto neighbours(Vertex v) const -> std::span<const Vertex> { return adj_[v]; }
    [[nodiscard]] auto degree(Vertex v) const -> std::size_t { return adj_[v].size(); }
    [[nodiscard]] auto side(Vertex v) const -> Side { return sides_[v]; }

    [[nodiscard]] auto adjacent(Vertex u, Vertex v) const -> bool
    {
        if (! matrix_.empty())
            return matrix_[static_cast<std::size_t>(u) * adj_.size() + v];
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    // Edges (u, v) with u < v, in ascending order.
    [[nodiscard]] auto edges() const -> std::vector<Edge>
    {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (Vertex u = 0; u < adj_.size(); ++u)
            for (auto v : adj_[u])
                if (u < v)
                    out.emplace_back(u, v);
        return out;
    }

    friend auto operator==(const BipartiteGraph & a, const BipartiteGraph & b) -> bool
    {
        return a.adj_ == b.adj_ && a.sides_ == b.sides_;
    }

private:
    static constexpr std::size_t matrix_limit = 4096;

    BipartiteGraph(std::vector<std::vector<Vertex>> adj, std::vector<Side> sides) :
        adj_(std::move(adj)), sides_(std::move(sides))
    {
        for (auto & list : adj_)
            edge_count_ += list.size();
        edge_count_ /= 2;
        if (adj_.size() <= matrix_limit) {
            matrix_.assign(adj_.size() * adj_.size(), false);
            for (std::size_t u = 0; u < adj_.size(); ++u)
                for (auto v : adj_[u])
                    matrix_[u * adj_.size() + v] = true;
        }
    }

    static auto two_colour(const std::vector<std::vector<Vertex>> & adj) -> std::vector<Side>
    {
        const auto n = adj.size();
        std::vector<int> colour(n, -1);
        std::vector<Vertex> parent(n, 0);
        std::vector<std::size_t> depth(n, 0);
        for (Vertex root = 0; root < n; ++root) {
            if (colour[root] != -1)
                continue;
            colour[root] = 0;
            parent[root] = root;
            std::deque<Vertex> queue{root};
            while (! queue.empty()) {
                auto v = queue.front();
                queue.pop_front();
                for (auto w : adj[v]) {
                    if (colour[w] == -1) {
                        colour[w] = 1 - colour[v];
                        parent[w] = v;
                        depth[w] = depth[v] + 1;
                        queue.push_back(w);
                    }
                    else if (colour[w] == colour[v])
                        throw NotBipartite(odd_cycle(v, w, parent, depth));
                }
            }
        }
        std::vector<Side> sides(n);
        for (std::size_t v = 0; v < n; ++v)
            sides[v] = colour[v] == 0 ? Side::X : Side::Y;
        return sides;
    }

    static auto odd_cycle(Vertex a, Vertex b, const std::vector<Vertex> & parent, const std::vector<std::size_t> & depth)
        -> std::vector<Vertex>
    {
        std::vector<Vertex> left{a}, right{b};
        while (depth[left.back()] > depth[right.back()])
            left.push_back(parent[left.back()]);
        while (depth[right.back()] > depth[left.back()])
            right.push_back(parent[right.back()]);
        while (left.back() != right.back()) {
            left.push_back(parent[left.back()]);
            right.push_back(parent[right.back()]);
        }
        right.pop_back();
        std::vector<Vertex> cycle(left.begin(), left.end());
        cycle.insert(cycle.end(), right.rbegin(), right.rend());

        auto lowest = std::min_element(cycle.begin(), cycle.end());
        std::rotate(cycle.begin(), lowest, cycle.end());
        if (cycle.size() > 2 && cycle.back() < cycle[1])
            std::reverse(cycle.begin() + 1, cycle.end());
        return cycle;
    }

    std::vector<std::vector<Vertex>> adj_;
    std::vector<Side> sides_;
    std::vector<bool> matrix_;
    std::size_t edge_count_ = 0;
};

// Shortest-path hop count; nullopt when v is unreachable from u.
inline auto distance(const BipartiteGraph & g, Vertex u, Vertex v) -> std::optional<std::size_t>
{
    if (u == v)
        return 0;
    std::vector<std::size_t> dist(g.size(), SIZE_MAX);
    dist[u] = 0;
    std::deque<Vertex> queue{u};
    while (! queue.empty()) {
        auto x = queue.front();
        queue.pop_front();
        for (auto w : g.neighbours(x)) {
            if (dist[w] != SIZE_MAX)
                continue;
            dist[w] = dist[x] + 1;
            if (w == v)
                return dist[w];
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

struct ComponentPartition {
    std::vector<std::size_t> component_id;
    std::vector<std::vector<Vertex>> members;

    [[nodiscard]] auto count() const -> std::size_t { return members.size(); }
};

namespace detail {
    inline auto components_within(const BipartiteGraph & g, const VertexMask * within) -> ComponentPartition
    {
        constexpr auto unassigned = SIZE_MAX;
        ComponentPartition out;
        out.component_id.assign(g.size(), unassigned);
        for (Vertex root = 0; root < g.size(); ++root) {
            if (out.component_id[root] != unassigned || (within && ! (*within)[root]))
                continue;
            auto id = out.members.size();
            auto & members = out.members.emplace_back();
            out.component_id[root] = id;
            std::vector<Vertex> stack{root};
            while (! stack.empty()) {
                auto v = stack.back();
                stack.pop_back();
                members.push_back(v);
                for (auto w : g.neighbours(v))
                    if (out.component_id[w] == unassigned && (! within || (*within)[w])) {
                        out.component_id[w] = id;
                        stack.push_back(w);
                    }
            }
            std::sort(members.begin(), members.end());
        }
        return out;
    }
}

/// Connected components, numbered in order of their smallest member.
inline auto components(const BipartiteGraph & g) -> ComponentPartition
{
    return detail::components_within(g, nullptr);
}

/// Components of the subgraph induced by `within`. Vertices outside the mask
/// keep component_id == SIZE_MAX.
inline auto components(const BipartiteGraph & g, const VertexMask & within) -> ComponentPartition
{
    return detail::components_within(g, &within);
}

class EmptySources : public GraphError {
public:
    EmptySources() : GraphError("distance levels need at least one source vertex") {}
};

/// Multi-source BFS layering: bucket 0 is the source set, bucket i holds the
/// vertices at distance exactly i from it.
class DistanceLevels {
public:
    DistanceLevels(const BipartiteGraph & g, std::span<const Vertex> sources)
    {
        if (sources.empty())
            throw EmptySources();
        level_.assign(g.size(), unreachable);
        buckets_.emplace_back();
        for (auto s : sources) {
            if (s >= g.size())
                throw VertexOutOfRange(s, g.size());
            if (level_[s] == 0)
                continue;
            level_[s] = 0;
            buckets_[0].push_back(s);
        }
        std::sort(buckets_[0].begin(), buckets_[0].end());
        for (std::size_t i = 0; ! buckets_[i].empty(); ++i) {
            std::vector<Vertex> next;
            for (auto v : buckets_[i])
                for (auto w : g.neighbours(v))
                    if (level_[w] == unreachable) {
                        level_[w] = static_cast<std::uint32_t>(i + 1);
                        next.push_back(w);
                    }
            if (next.empty())
                break;
            std::sort(next.begin(), next.end());
            buckets_.push_back(std::move(next));
        }
    }

    [[nodiscard]] auto level(Vertex v) const -> std::optional<std::size_t>
    {
        if (level_[v] == unreachable)
            return std::nullopt;
        return level_[v];
    }

    [[nodiscard]] auto in(Vertex v, std::size_t i) const -> bool { return level_[v] == i; }

    [[nodiscard]] auto in_range(Vertex v, std::size_t lo, std::size_t hi) const -> bool
    {
        return level_[v] != unreachable && level_[v] >= lo && level_[v] <= hi;
    }

    // Number of non-empty buckets, i.e. one past the deepest level.
    [[nodiscard]] auto depth() const -> std::size_t { return buckets_.size(); }

    [[nodiscard]] auto bucket(std::size_t i) const -> std::span<const Vertex>
    {
        if (i >= buckets_.size())
            return {};
        return buckets_[i];
    }

    [[nodiscard]] auto buckets() const -> const std::vector<std::vector<Vertex>> & { return buckets_; }

private:
    static constexpr std::uint32_t unreachable = UINT32_MAX;
    std::vector<std::uint32_t> level_;
    std::vector<std::vector<Vertex>> buckets_;
};

inline auto distance_levels(const BipartiteGraph & g, std::span<const Vertex> sources) -> DistanceLevels
{
    return DistanceLevels(g, sources);
}

/// Subgraph induced by a sorted vertex list; local ids follow list order so
/// relative order (and therefore canonical colouring) is preserved.
struct InducedSubgraph {
    BipartiteGraph graph;
    std::vector<Vertex> to_global;
};

inline auto induced_subgraph(const BipartiteGraph & g, std::span<const Vertex> vertices) -> InducedSubgraph
{
    std::vector<std::uint32_t> local(g.size(), UINT32_MAX);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        local[vertices[i]] = static_cast<std::uint32_t>(i);
    std::vector<std::vector<Vertex>> adj(vertices.size());
    std::vector<Side> sides(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        sides[i] = g.side(vertices[i]);
        for (auto w : g.neighbours(vertices[i]))
            if (local[w] != UINT32_MAX)
                adj[i].push_back(local[w]);
    }
    return {BipartiteGraph::from_coloured(std::move(adj), std::move(sides)),
        std::vector<Vertex>(vertices.begin(), vertices.end())};
}

}
