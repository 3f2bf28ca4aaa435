#pragma once

#include <eds/graph.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace eds {

/// Candidate efficient dominating set: sorted, duplicate-free vertex ids.
class EdsSolution {
public:
    EdsSolution() = default;

    explicit EdsSolution(std::vector<Vertex> vertices) : vertices_(std::move(vertices))
    {
        std::sort(vertices_.begin(), vertices_.end());
        vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    }

    [[nodiscard]] auto vertices() const -> const std::vector<Vertex> & { return vertices_; }
    [[nodiscard]] auto size() const -> std::size_t { return vertices_.size(); }
    [[nodiscard]] auto contains(Vertex v) const -> bool
    {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }

    friend auto operator==(const EdsSolution &, const EdsSolution &) -> bool = default;
    friend auto operator<=>(const EdsSolution &, const EdsSolution &) = default;

private:
    std::vector<Vertex> vertices_;
};

struct Violation {
    Vertex vertex;
    std::size_t dominators;

    friend auto operator==(const Violation &, const Violation &) -> bool = default;
};

struct VerifyReport {
    bool valid = true;
    std::optional<Violation> violation;
};

/// Checks |D ∩ N[v]| == 1 for every vertex; reports the lowest violating id.
inline auto verify(const BipartiteGraph & g, const EdsSolution & d) -> VerifyReport
{
    std::vector<std::size_t> count(g.size(), 0);
    for (auto v : d.vertices()) {
        if (v >= g.size())
            throw VertexOutOfRange(v, g.size());
        ++count[v];
        for (auto w : g.neighbours(v))
            ++count[w];
    }
    for (Vertex v = 0; v < g.size(); ++v)
        if (count[v] != 1)
            return {false, Violation{v, count[v]}};
    return {};
}

enum class Label : std::uint8_t { Free, Forced, Excluded };

enum class ConflictReason : std::uint8_t { AdjacentForced, DistanceViolation, ForcedExcludedClash };

inline auto to_string(ConflictReason r) -> std::string
{
    switch (r) {
    case ConflictReason::AdjacentForced: return "AdjacentForced";
    case ConflictReason::DistanceViolation: return "DistanceViolation";
    case ConflictReason::ForcedExcludedClash: return "ForcedExcludedClash";
    }
    return "?";
}

struct Conflict {
    ConflictReason reason;
    Vertex vertex;
    // The forced vertex that blocks `vertex`, when there is one.
    std::optional<Vertex> blocker;
};

/// Per-vertex Free / Forced / Excluded labels; the Forced set is the basis.
///
/// Forcing u excludes N(u) and the second neighbourhood N²(u), so forced
/// vertices stay pairwise at distance >= 3 (>= 4 on the same side). Failed
/// operations leave the state untouched.
class StateMap {
public:
    StateMap() = default;
    explicit StateMap(std::size_t n) : labels_(n, Label::Free) {}

    [[nodiscard]] auto size() const -> std::size_t { return labels_.size(); }
    [[nodiscard]] auto label(Vertex v) const -> Label { return labels_[v]; }
    [[nodiscard]] auto is_free(Vertex v) const -> bool { return labels_[v] == Label::Free; }
    [[nodiscard]] auto is_forced(Vertex v) const -> bool { return labels_[v] == Label::Forced; }
    [[nodiscard]] auto is_excluded(Vertex v) const -> bool { return labels_[v] == Label::Excluded; }

    // Forced vertices, ascending.
    [[nodiscard]] auto basis() const -> const std::vector<Vertex> & { return basis_; }

    [[nodiscard]] auto excluded_count() const -> std::size_t
    {
        return static_cast<std::size_t>(std::count(labels_.begin(), labels_.end(), Label::Excluded));
    }

    auto force(const BipartiteGraph & g, Vertex u) -> std::optional<Conflict>
    {
        if (labels_[u] == Label::Forced)
            return std::nullopt;
        if (labels_[u] == Label::Excluded)
            return explain_exclusion(g, u);
        // u is Free, so no forced vertex lies within distance 2 of it
        labels_[u] = Label::Forced;
        basis_.insert(std::upper_bound(basis_.begin(), basis_.end(), u), u);
        for (auto w : g.neighbours(u)) {
            labels_[w] = Label::Excluded;
            for (auto x : g.neighbours(w))
                if (x != u)
                    labels_[x] = Label::Excluded;
        }
        return std::nullopt;
    }

    auto exclude(Vertex u) -> std::optional<Conflict>
    {
        if (labels_[u] == Label::Forced)
            return Conflict{ConflictReason::ForcedExcludedClash, u, u};
        labels_[u] = Label::Excluded;
        return std::nullopt;
    }

    // Checks every documented invariant; used by tests and debug assertions.
    [[nodiscard]] auto consistent(const BipartiteGraph & g) const -> bool
    {
        std::vector<Vertex> forced;
        for (Vertex v = 0; v < labels_.size(); ++v)
            if (labels_[v] == Label::Forced)
                forced.push_back(v);
        if (forced != basis_)
            return false;
        for (auto f : basis_) {
            for (auto w : g.neighbours(f)) {
                if (labels_[w] != Label::Excluded)
                    return false;
                for (auto x : g.neighbours(w))
                    if (x != f && labels_[x] != Label::Excluded)
                        return false;
            }
        }
        return true;
    }

    friend auto operator==(const StateMap &, const StateMap &) -> bool = default;

private:
    auto explain_exclusion(const BipartiteGraph & g, Vertex u) const -> Conflict
    {
        for (auto w : g.neighbours(u))
            if (labels_[w] == Label::Forced)
                return {ConflictReason::AdjacentForced, u, w};
        for (auto w : g.neighbours(u))
            for (auto x : g.neighbours(w))
                if (labels_[x] == Label::Forced)
                    return {ConflictReason::DistanceViolation, u, x};
        return {ConflictReason::ForcedExcludedClash, u, std::nullopt};
    }

    std::vector<Label> labels_;
    std::vector<Vertex> basis_;
};

struct SettledSplit {
    std::vector<Vertex> dominated;
    std::vector<Vertex> residual;
};

/// Splits V into vertices already dominated by the basis and those still
/// needing a dominator.
inline auto settled_and_residual(const StateMap & state, const BipartiteGraph & g) -> SettledSplit
{
    VertexMask dominated(g.size(), false);
    for (auto f : state.basis()) {
        dominated[f] = true;
        for (auto w : g.neighbours(f))
            dominated[w] = true;
    }
    SettledSplit out;
    for (Vertex v = 0; v < g.size(); ++v)
        (dominated[v] ? out.dominated : out.residual).push_back(v);
    return out;
}

}
