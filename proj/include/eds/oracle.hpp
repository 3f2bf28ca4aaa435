#pragma once

#include <eds/domination.hpp>
#include <eds/graph.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace eds {

class SizeCapExceeded : public std::runtime_error {
public:
    SizeCapExceeded(std::size_t n, std::size_t cap) :
        std::runtime_error("instance with " + std::to_string(n) + " vertices exceeds the oracle size cap of "
            + std::to_string(cap))
    {
    }
};

struct OracleOptions {
    // Branch on the most constrained undominated vertex instead of on the
    // lowest free id. Same answer, different search tree.
    bool mrv = false;
    std::size_t size_cap = 4096;
    std::size_t count_cap = 30;
};

struct OracleResult {
    std::optional<EdsSolution> solution;
    std::uint64_t explored_nodes = 0;
};

namespace detail {
    /// Exact cover of `region` by closed neighbourhoods of allowed vertices.
    ///
    /// Undo is trail based; every propagation step is recorded so a failed
    /// branch restores dominance and decision status exactly.
    class CoverSearch {
    public:
        CoverSearch(const BipartiteGraph & g, std::vector<Vertex> region, const VertexMask & allowed,
            const VertexMask & dominated) :
            g_(g), region_(std::move(region)), allowed_(allowed), dom_(dominated),
            status_(g.size(), Status::Undecided)
        {
        }

        [[nodiscard]] auto nodes() const -> std::uint64_t { return nodes_; }

        // Lexicographically smallest completion. All efficient dominating sets
        // of a graph have the same size, so deciding ids in ascending order
        // with "include" tried first reaches the minimum first.
        auto first_lexicographic() -> std::optional<std::vector<Vertex>>
        {
            if (lex_search())
                return sorted_chosen();
            return std::nullopt;
        }

        // Calls fn(chosen) for every completion; fn returns false to stop.
        // Each completion is produced exactly once: the branching vertex has
        // exactly one dominator in any completion.
        template <typename Fn>
        auto enumerate(bool mrv, Fn && fn) -> bool
        {
            return enum_search(mrv, fn);
        }

    private:
        enum class Status : std::uint8_t { Undecided, In, Out };
        struct Undo {
            Vertex v;
            bool was_dom_change;
            Status old_status;
        };

        auto placeable(Vertex c) const -> bool
        {
            if (status_[c] != Status::Undecided || ! allowed_[c] || dom_[c])
                return false;
            for (auto w : g_.neighbours(c))
                if (dom_[w])
                    return false;
            return true;
        }

        void set_status(Vertex v, Status s)
        {
            trail_.push_back({v, false, status_[v]});
            status_[v] = s;
        }

        void include(Vertex c)
        {
            set_status(c, Status::In);
            chosen_.push_back(c);
            trail_.push_back({c, true, Status::Undecided});
            dom_[c] = true;
            for (auto w : g_.neighbours(c)) {
                trail_.push_back({w, true, Status::Undecided});
                dom_[w] = true;
            }
        }

        void undo_to(std::size_t mark, std::size_t chosen_mark)
        {
            while (trail_.size() > mark) {
                auto u = trail_.back();
                trail_.pop_back();
                if (u.was_dom_change)
                    dom_[u.v] = false;
                else
                    status_[u.v] = u.old_status;
            }
            chosen_.resize(chosen_mark);
        }

        // Candidates of v: allowed, placeable members of N[v].
        auto count_candidates(Vertex v, Vertex & last) const -> std::size_t
        {
            std::size_t count = 0;
            if (placeable(v)) {
                ++count;
                last = v;
            }
            for (auto w : g_.neighbours(v))
                if (placeable(w)) {
                    ++count;
                    last = w;
                }
            return count;
        }

        // Unit propagation to fixpoint; false on a dead end.
        auto propagate() -> bool
        {
            bool changed = true;
            while (changed) {
                changed = false;
                for (auto v : region_) {
                    if (dom_[v])
                        continue;
                    Vertex only = 0;
                    auto c = count_candidates(v, only);
                    if (c == 0)
                        return false;
                    if (c == 1) {
                        include(only);
                        changed = true;
                    }
                }
            }
            return true;
        }

        auto all_dominated() const -> bool
        {
            for (auto v : region_)
                if (! dom_[v])
                    return false;
            return true;
        }

        auto lex_search() -> bool
        {
            ++nodes_;
            auto mark = trail_.size();
            auto chosen_mark = chosen_.size();
            if (! propagate()) {
                undo_to(mark, chosen_mark);
                return false;
            }
            if (all_dominated())
                return true;

            std::optional<Vertex> pick;
            for (auto v : region_)
                if (placeable(v)) {
                    pick = v;
                    break;
                }
            if (! pick) {
                undo_to(mark, chosen_mark);
                return false;
            }

            auto inner = trail_.size();
            auto inner_chosen = chosen_.size();
            include(*pick);
            if (lex_search())
                return true;
            undo_to(inner, inner_chosen);
            set_status(*pick, Status::Out);
            if (lex_search())
                return true;
            undo_to(mark, chosen_mark);
            return false;
        }

        template <typename Fn>
        auto enum_search(bool mrv, Fn & fn) -> bool
        {
            ++nodes_;
            auto mark = trail_.size();
            auto chosen_mark = chosen_.size();
            if (! propagate()) {
                undo_to(mark, chosen_mark);
                return true;
            }
            std::optional<Vertex> target;
            std::size_t best = SIZE_MAX;
            for (auto v : region_) {
                if (dom_[v])
                    continue;
                if (! mrv) {
                    target = v;
                    break;
                }
                Vertex dummy = 0;
                auto c = count_candidates(v, dummy);
                if (c < best) {
                    best = c;
                    target = v;
                }
            }
            if (! target) {
                bool go_on = fn(sorted_chosen());
                undo_to(mark, chosen_mark);
                return go_on;
            }

            std::vector<Vertex> cands;
            if (placeable(*target))
                cands.push_back(*target);
            for (auto w : g_.neighbours(*target))
                if (placeable(w))
                    cands.push_back(w);
            std::sort(cands.begin(), cands.end());
            for (auto c : cands) {
                auto inner = trail_.size();
                auto inner_chosen = chosen_.size();
                include(c);
                bool go_on = enum_search(mrv, fn);
                undo_to(inner, inner_chosen);
                if (! go_on) {
                    undo_to(mark, chosen_mark);
                    return false;
                }
            }
            undo_to(mark, chosen_mark);
            return true;
        }

        auto sorted_chosen() const -> std::vector<Vertex>
        {
            auto out = chosen_;
            std::sort(out.begin(), out.end());
            return out;
        }

        const BipartiteGraph & g_;
        std::vector<Vertex> region_;
        VertexMask allowed_;
        VertexMask dom_;
        std::vector<Status> status_;
        std::vector<Undo> trail_;
        std::vector<Vertex> chosen_;
        std::uint64_t nodes_ = 0;
    };

    struct SearchSetup {
        std::vector<Vertex> region;
        VertexMask allowed;
        VertexMask dominated;
    };

    inline auto setup_from(const BipartiteGraph & g, const StateMap * restrict) -> SearchSetup
    {
        SearchSetup s;
        s.allowed.assign(g.size(), true);
        s.dominated.assign(g.size(), false);
        if (restrict) {
            if (restrict->size() != g.size() || ! restrict->consistent(g))
                throw std::invalid_argument("oracle restriction is not a consistent state for this graph");
            for (Vertex v = 0; v < g.size(); ++v)
                s.allowed[v] = restrict->is_free(v);
            for (auto f : restrict->basis()) {
                s.dominated[f] = true;
                for (auto w : g.neighbours(f))
                    s.dominated[w] = true;
            }
        }
        for (Vertex v = 0; v < g.size(); ++v)
            if (! s.dominated[v])
                s.region.push_back(v);
        return s;
    }

    inline auto with_basis(std::vector<Vertex> chosen, const StateMap * restrict) -> EdsSolution
    {
        if (restrict)
            chosen.insert(chosen.end(), restrict->basis().begin(), restrict->basis().end());
        return EdsSolution(std::move(chosen));
    }
}

/// Exact solver: the lexicographically smallest e.d.s. (as a sorted id
/// sequence) that contains every Forced vertex of `restrict` and no Excluded
/// one, or none.
inline auto oracle_solve(const BipartiteGraph & g, const StateMap * restrict = nullptr, const OracleOptions & opts = {})
    -> OracleResult
{
    if (g.size() > opts.size_cap)
        throw SizeCapExceeded(g.size(), opts.size_cap);
    auto setup = detail::setup_from(g, restrict);
    detail::CoverSearch search(g, std::move(setup.region), setup.allowed, setup.dominated);
    OracleResult out;
    if (! opts.mrv) {
        if (auto chosen = search.first_lexicographic())
            out.solution = detail::with_basis(std::move(*chosen), restrict);
    }
    else {
        // the heuristic search order does not respect id order, so keep the
        // smallest of all completions
        std::optional<std::vector<Vertex>> best;
        search.enumerate(true, [&](const std::vector<Vertex> & chosen) {
            auto full = detail::with_basis(chosen, restrict).vertices();
            if (! best || full < *best)
                best = std::move(full);
            return true;
        });
        if (best)
            out.solution = EdsSolution(std::move(*best));
    }
    out.explored_nodes = search.nodes();
    return out;
}

inline auto oracle_solve(const BipartiteGraph & g, const StateMap & restrict, const OracleOptions & opts = {})
    -> OracleResult
{
    return oracle_solve(g, &restrict, opts);
}

/// Number of distinct efficient dominating sets.
inline auto oracle_count(const BipartiteGraph & g, const OracleOptions & opts = {}) -> std::uint64_t
{
    if (g.size() > opts.count_cap)
        throw SizeCapExceeded(g.size(), opts.count_cap);
    auto setup = detail::setup_from(g, nullptr);
    detail::CoverSearch search(g, std::move(setup.region), setup.allowed, setup.dominated);
    std::uint64_t count = 0;
    search.enumerate(opts.mrv, [&](const std::vector<Vertex> &) {
        ++count;
        return true;
    });
    return count;
}

/// Completes a consistent partial state: every component of the still
/// undominated part is solved independently, lexicographically smallest
/// first. The result contains the basis.
inline auto complete_by_oracle(const BipartiteGraph & g, const StateMap & state, const OracleOptions & opts = {})
    -> OracleResult
{
    auto split = settled_and_residual(state, g);
    OracleResult out;
    std::vector<Vertex> chosen(state.basis().begin(), state.basis().end());
    auto parts = components(g, mask_of(g.size(), split.residual));
    VertexMask dominated(g.size(), true);
    for (auto v : split.residual)
        dominated[v] = false;
    VertexMask allowed(g.size(), false);
    for (Vertex v = 0; v < g.size(); ++v)
        allowed[v] = state.is_free(v);

    for (auto & members : parts.members) {
        if (members.size() > opts.size_cap)
            throw SizeCapExceeded(members.size(), opts.size_cap);
        detail::CoverSearch search(g, members, allowed, dominated);
        auto part = search.first_lexicographic();
        out.explored_nodes += search.nodes();
        if (! part)
            return out;
        chosen.insert(chosen.end(), part->begin(), part->end());
    }
    out.solution = EdsSolution(std::move(chosen));
    return out;
}

}
