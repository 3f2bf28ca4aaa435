#pragma once

#include <eds/graph.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace eds {

enum class PatternKind : std::uint8_t { Path, Cycle6, Spider115 };

/// An induced copy of a small pattern.
///
/// Vertex order follows the pattern's canonical labelling:
///  - Path:      the path in order, first endpoint < last endpoint;
///  - Cycle6:    the cycle in order, starting at its smallest vertex, with
///               the smaller of that vertex's two cycle neighbours second;
///  - Spider115: (centre, leaf, leaf, t1, t2, t3, t4, t5), leaves ascending,
///               t1..t5 the five-edge tail starting next to the centre.
struct InducedWitness {
    PatternKind kind = PatternKind::Path;
    std::vector<Vertex> vertices;

    friend auto operator==(const InducedWitness &, const InducedWitness &) -> bool = default;
    friend auto operator<=>(const InducedWitness &, const InducedWitness &) = default;
};

inline auto describe(const InducedWitness & w) -> std::string
{
    switch (w.kind) {
    case PatternKind::Path: return "P" + std::to_string(w.vertices.size());
    case PatternKind::Cycle6: return "C6";
    case PatternKind::Spider115: return "S115";
    }
    return "?";
}

/// Re-checks a witness against the graph: distinct vertices and an induced
/// edge set equal to the pattern's edge set.
inline auto witness_is_valid(const BipartiteGraph & g, const InducedWitness & w) -> bool
{
    const auto & vs = w.vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] >= g.size())
            return false;
        for (std::size_t j = 0; j < i; ++j)
            if (vs[i] == vs[j])
                return false;
    }

    auto expected = [&](std::size_t i, std::size_t j) -> bool {
        if (i > j)
            std::swap(i, j);
        switch (w.kind) {
        case PatternKind::Path: return j == i + 1;
        case PatternKind::Cycle6: return j == i + 1 || (i == 0 && j == 5);
        case PatternKind::Spider115:
            // centre 0 joins 1, 2, 3; tail is 3-4-5-6-7
            if (i == 0)
                return j == 1 || j == 2 || j == 3;
            return i >= 3 && j == i + 1;
        }
        return false;
    };

    if (w.kind == PatternKind::Cycle6 && vs.size() != 6)
        return false;
    if (w.kind == PatternKind::Spider115 && vs.size() != 8)
        return false;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.adjacent(vs[i], vs[j]) != expected(i, j))
                return false;
    return true;
}

namespace detail {
    // Depth-first extension of induced paths. `fn` sees each complete path of
    // k vertices and returns false to stop; returns false if stopped.
    template <typename Fn>
    auto extend_induced_path(const BipartiteGraph & g, std::size_t k, std::vector<Vertex> & path,
        std::vector<bool> & on_path, const VertexMask * within, Fn & fn) -> bool
    {
        if (path.size() == k)
            return fn(std::span<const Vertex>(path));
        auto last = path.back();
        for (auto w : g.neighbours(last)) {
            if (on_path[w] || (within && ! (*within)[w]))
                continue;
            bool chord = false;
            for (std::size_t i = 0; i + 1 < path.size() && ! chord; ++i)
                chord = g.adjacent(path[i], w);
            if (chord)
                continue;
            path.push_back(w);
            on_path[w] = true;
            bool go_on = extend_induced_path(g, k, path, on_path, within, fn);
            on_path[w] = false;
            path.pop_back();
            if (! go_on)
                return false;
        }
        return true;
    }
}

/// Visits every induced path on k vertices starting at `start`, in both
/// directions (no canonical filter), in lexicographic order.
template <typename Fn>
auto for_each_induced_path_from(const BipartiteGraph & g, Vertex start, std::size_t k, Fn && fn,
    const VertexMask * within = nullptr) -> bool
{
    if (k == 0 || (within && ! (*within)[start]))
        return true;
    std::vector<Vertex> path{start};
    std::vector<bool> on_path(g.size(), false);
    on_path[start] = true;
    return detail::extend_induced_path(g, k, path, on_path, within, fn);
}

/// Visits every induced P_k once (first endpoint < last endpoint), in
/// lexicographic order of the vertex sequence. Returns false if `fn` stopped.
template <typename Fn>
auto for_each_induced_path(const BipartiteGraph & g, std::size_t k, Fn && fn, const VertexMask * within = nullptr)
    -> bool
{
    for (Vertex s = 0; s < g.size(); ++s) {
        auto canonical = [&](std::span<const Vertex> p) -> bool { return p.back() < p.front() || fn(p); };
        if (! for_each_induced_path_from(g, s, k, canonical, within))
            return false;
    }
    return true;
}

/// All induced paths on k vertices (2 <= k <= 8), up to `limit` witnesses.
inline auto enumerate_induced_paths(const BipartiteGraph & g, std::size_t k, std::size_t limit = SIZE_MAX)
    -> std::vector<InducedWitness>
{
    std::vector<InducedWitness> out;
    if (limit == 0)
        return out;
    for_each_induced_path(g, k, [&](std::span<const Vertex> p) {
        out.push_back({PatternKind::Path, {p.begin(), p.end()}});
        return out.size() < limit;
    });
    return out;
}

/// Visits every induced 6-cycle once in canonical labelling, in lexicographic
/// order. Returns false if `fn` stopped.
template <typename Fn>
auto for_each_induced_c6(const BipartiteGraph & g, Fn && fn) -> bool
{
    std::vector<Vertex> cyc;
    std::vector<bool> on(g.size(), false);

    auto rec = [&](auto & self) -> bool {
        auto last = cyc.back();
        for (auto w : g.neighbours(last)) {
            if (w <= cyc[0] || on[w])
                continue;
            auto pos = cyc.size();
            // chords to every earlier vertex except the predecessor are banned,
            // and the closing vertex must touch the start
            bool ok = true;
            for (std::size_t i = 0; i + 1 < pos && ok; ++i) {
                bool adj = g.adjacent(cyc[i], w);
                ok = (i == 0 && pos == 5) ? adj : ! adj;
            }
            if (! ok)
                continue;
            cyc.push_back(w);
            on[w] = true;
            bool go_on = true;
            if (cyc.size() == 6) {
                if (cyc[1] < cyc[5])
                    go_on = fn(InducedWitness{PatternKind::Cycle6, cyc});
            }
            else
                go_on = self(self);
            on[w] = false;
            cyc.pop_back();
            if (! go_on)
                return false;
        }
        return true;
    };

    for (Vertex s = 0; s < g.size(); ++s) {
        cyc.assign(1, s);
        on[s] = true;
        bool go_on = rec(rec);
        on[s] = false;
        if (! go_on)
            return false;
    }
    return true;
}

inline auto find_induced_c6(const BipartiteGraph & g) -> std::vector<InducedWitness>
{
    std::vector<InducedWitness> out;
    for_each_induced_c6(g, [&](InducedWitness w) {
        out.push_back(std::move(w));
        return true;
    });
    return out;
}

namespace detail {
    // For a fixed centre, visits (leaf, leaf, tail) combinations. With
    // `smallest_leaves` only the two smallest eligible leaves are reported per
    // tail, which is all a lexicographic minimum needs.
    template <typename Fn>
    auto for_each_spider_at(const BipartiteGraph & g, Vertex centre, Fn && fn) -> bool
    {
        if (g.degree(centre) < 3)
            return true;
        return for_each_induced_path_from(g, centre, 6, [&](std::span<const Vertex> p) -> bool {
            // p = (centre, t1, ..., t5)
            Vertex leaves[2];
            std::size_t found = 0;
            for (auto w : g.neighbours(centre)) {
                if (w == p[1])
                    continue;
                bool clean = true;
                for (std::size_t i = 2; i < 6 && clean; ++i)
                    clean = ! g.adjacent(w, p[i]);
                if (clean) {
                    leaves[found++] = w;
                    if (found == 2)
                        break;
                }
            }
            if (found < 2)
                return true;
            return fn(InducedWitness{PatternKind::Spider115,
                {centre, leaves[0], leaves[1], p[1], p[2], p[3], p[4], p[5]}});
        });
    }
}

/// The lexicographically smallest induced S(1,1,5), or nullopt if the graph
/// is S(1,1,5)-free.
inline auto find_s115(const BipartiteGraph & g) -> std::optional<InducedWitness>
{
    for (Vertex u = 0; u < g.size(); ++u) {
        std::optional<InducedWitness> best;
        detail::for_each_spider_at(g, u, [&](InducedWitness w) {
            if (! best || w < *best)
                best = std::move(w);
            return true;
        });
        if (best)
            return best;
    }
    return std::nullopt;
}

inline auto is_s115_free(const BipartiteGraph & g) -> bool
{
    for (Vertex u = 0; u < g.size(); ++u)
        if (! detail::for_each_spider_at(g, u, [](const InducedWitness &) { return false; }))
            return false;
    return true;
}

/// The first induced P_k inside `within` in canonical order, if any.
inline auto find_induced_path(const BipartiteGraph & g, std::size_t k, const VertexMask & within)
    -> std::optional<InducedWitness>
{
    std::optional<InducedWitness> found;
    for_each_induced_path(g, k, [&](std::span<const Vertex> p) {
        found = InducedWitness{PatternKind::Path, {p.begin(), p.end()}};
        return false;
    }, &within);
    return found;
}

struct FreenessResult {
    bool free = true;
    std::optional<InducedWitness> witness;
};

/// Whether the subgraph induced by `subset` contains no induced P8.
inline auto is_p8_free(const BipartiteGraph & g, std::span<const Vertex> subset) -> FreenessResult
{
    auto w = find_induced_path(g, 8, mask_of(g.size(), subset));
    return {! w.has_value(), std::move(w)};
}

}
