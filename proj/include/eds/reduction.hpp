#pragma once

#include <eds/domination.hpp>
#include <eds/graph.hpp>
#include <eds/patterns.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace eds {

/// Where a forcing or exclusion came from. R*, B* are the reduction and
/// branching rules; the rest are seeded by the driver.
enum class Rule : std::uint8_t {
    Seed,
    R1,
    R2,
    R3,
    R4,
    R5,
    B1,
    B2,
    B3,
    MidpointExclusion,
    EndpointForcing,
    P8Forcing,
};

inline auto to_string(Rule r) -> std::string
{
    switch (r) {
    case Rule::Seed: return "seed";
    case Rule::R1: return "R1";
    case Rule::R2: return "R2";
    case Rule::R3: return "R3";
    case Rule::R4: return "R4";
    case Rule::R5: return "R5";
    case Rule::B1: return "B1";
    case Rule::B2: return "B2";
    case Rule::B3: return "B3";
    case Rule::MidpointExclusion: return "midpoint-exclusion";
    case Rule::EndpointForcing: return "endpoint-forcing";
    case Rule::P8Forcing: return "p8-forcing";
    }
    return "?";
}

enum class Action : std::uint8_t { Force, Exclude };

struct Event {
    Rule rule;
    Action action;
    Vertex vertex;

    friend auto operator==(const Event &, const Event &) -> bool = default;
};

inline auto apply_event(const BipartiteGraph & g, StateMap & state, const Event & e) -> std::optional<Conflict>
{
    return e.action == Action::Force ? state.force(g, e.vertex) : state.exclude(e.vertex);
}

struct Reduced {
    StateMap state;
    std::vector<Event> events;
};

struct Infeasible {
    Rule rule;
    std::vector<Vertex> witness;
    std::vector<Event> events;
};

struct BranchAlternative {
    std::vector<Vertex> force;
    std::vector<Vertex> exclude;

    friend auto operator==(const BranchAlternative &, const BranchAlternative &) -> bool = default;
};

struct Branch {
    Rule rule;
    std::vector<Vertex> witness;
    std::vector<BranchAlternative> alternatives;
};

using PropagationResult = std::variant<Reduced, Infeasible, Branch>;

/// Applies an alternative (forcings first, then exclusions), logging events.
inline auto apply_alternative(const BipartiteGraph & g, StateMap & state, const BranchAlternative & alt, Rule rule,
    std::vector<Event> * log = nullptr) -> std::optional<Conflict>
{
    for (auto v : alt.force) {
        if (auto c = state.force(g, v))
            return c;
        if (log)
            log->push_back({rule, Action::Force, v});
    }
    for (auto v : alt.exclude) {
        if (auto c = state.exclude(v))
            return c;
        if (log)
            log->push_back({rule, Action::Exclude, v});
    }
    return std::nullopt;
}

struct PropagateOptions {
    // R4 and R5 rely on the six-vertex seed structure and S(1,1,5)-freeness;
    // R1-R3 are plain consequences of the domination property.
    bool structural_rules = true;
    // Shuffle the rule order on every pass (confluence testing).
    std::optional<std::uint64_t> order_seed;
};

namespace detail {
    enum class Step : std::uint8_t { NoChange, Changed, Dead };

    struct RuleContext {
        const BipartiteGraph & g;
        const DistanceLevels & levels;
        StateMap & state;
        std::vector<Event> & events;
        std::vector<Vertex> witness;
        Rule failed_rule = Rule::Seed;

        auto dead(Rule r, std::vector<Vertex> w) -> Step
        {
            failed_rule = r;
            witness = std::move(w);
            return Step::Dead;
        }

        auto neighbours_in(Vertex v, std::size_t lo, std::size_t hi) const -> std::vector<Vertex>
        {
            std::vector<Vertex> out;
            for (auto w : g.neighbours(v))
                if (levels.in_range(w, lo, hi))
                    out.push_back(w);
            return out;
        }

        auto count_in(Vertex v, std::size_t lo, std::size_t hi) const -> std::size_t
        {
            std::size_t c = 0;
            for (auto w : g.neighbours(v))
                if (levels.in_range(w, lo, hi))
                    ++c;
            return c;
        }

        auto within_two(Vertex a, Vertex b) const -> bool
        {
            if (a == b || g.adjacent(a, b))
                return true;
            for (auto w : g.neighbours(a))
                if (g.adjacent(w, b))
                    return true;
            return false;
        }

        auto common_neighbour_in(Vertex a, Vertex b, std::size_t level) const -> std::optional<Vertex>
        {
            for (auto w : g.neighbours(a))
                if (levels.in(w, level) && g.adjacent(w, b))
                    return w;
            return std::nullopt;
        }

        auto force(Rule r, Vertex v, std::vector<Vertex> w) -> Step
        {
            if (state.is_forced(v))
                return Step::NoChange;
            if (state.force(g, v))
                return dead(r, std::move(w));
            events.push_back({r, Action::Force, v});
            return Step::Changed;
        }
    };

    // An N2 vertex with no N3 neighbour cannot be dominated.
    inline auto rule_r1(RuleContext & ctx) -> Step
    {
        for (auto u : ctx.levels.bucket(2))
            if (ctx.count_in(u, 3, 3) == 0)
                return ctx.dead(Rule::R1, {u});
        return Step::NoChange;
    }

    // An N2 vertex with a single N3 neighbour w forces w.
    inline auto rule_r2(RuleContext & ctx) -> Step
    {
        std::vector<std::pair<Vertex, Vertex>> singles;
        for (auto u : ctx.levels.bucket(2)) {
            auto n3 = ctx.neighbours_in(u, 3, 3);
            if (n3.size() == 1)
                singles.emplace_back(u, n3[0]);
        }
        for (std::size_t i = 0; i < singles.size(); ++i)
            for (std::size_t j = i + 1; j < singles.size(); ++j) {
                auto w = singles[i].second, w2 = singles[j].second;
                if (w != w2 && ctx.within_two(w, w2))
                    return ctx.dead(Rule::R2, {singles[i].first, w, singles[j].first, w2});
            }
        for (auto [u, w] : singles)
            if (auto s = ctx.force(Rule::R2, w, {u, w}); s != Step::NoChange)
                return s;
        return Step::NoChange;
    }

    // An N3 vertex without N3/N4 neighbours can only dominate itself.
    inline auto rule_r3(RuleContext & ctx) -> Step
    {
        std::vector<Vertex> lonely;
        for (auto w : ctx.levels.bucket(3))
            if (ctx.count_in(w, 3, 4) == 0)
                lonely.push_back(w);
        for (std::size_t i = 0; i < lonely.size(); ++i)
            for (std::size_t j = i + 1; j < lonely.size(); ++j)
                if (auto u = ctx.common_neighbour_in(lonely[i], lonely[j], 2))
                    return ctx.dead(Rule::R3, {lonely[i], *u, lonely[j]});
        for (auto w : lonely)
            if (auto s = ctx.force(Rule::R3, w, {w}); s != Step::NoChange)
                return s;
        return Step::NoChange;
    }

    // Induced P4 (r2, r3, r4, r5) hanging off N2 into N3/N4/N5: r3 is not in
    // the solution and r4 is forced.
    inline auto rule_r4(RuleContext & ctx) -> Step
    {
        for (auto r2 : ctx.levels.bucket(2))
            for (auto r3 : ctx.g.neighbours(r2)) {
                if (! ctx.levels.in(r3, 3))
                    continue;
                for (auto r4 : ctx.g.neighbours(r3)) {
                    if (! ctx.levels.in_range(r4, 3, 4))
                        continue;
                    for (auto r5 : ctx.g.neighbours(r4)) {
                        if (r5 == r3 || ! ctx.levels.in_range(r5, 3, 5) || ctx.g.adjacent(r2, r5))
                            continue;
                        if (ctx.state.is_forced(r4) && ctx.state.is_excluded(r3))
                            continue;
                        std::vector<Vertex> w{r2, r3, r4, r5};
                        if (ctx.state.exclude(r3))
                            return ctx.dead(Rule::R4, w);
                        ctx.events.push_back({Rule::R4, Action::Exclude, r3});
                        auto s = ctx.force(Rule::R4, r4, w);
                        return s == Step::NoChange ? Step::Changed : s;
                    }
                }
            }
        return Step::NoChange;
    }

    // N3 edges whose endpoints have no other N3/N4 neighbour: exactly one
    // endpoint of each must be in the solution.
    inline auto isolated_n3_edges(const RuleContext & ctx) -> std::vector<std::pair<Vertex, Vertex>>
    {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (auto a : ctx.levels.bucket(3)) {
            auto na = ctx.neighbours_in(a, 3, 4);
            if (na.size() != 1 || ! ctx.levels.in(na[0], 3) || na[0] < a)
                continue;
            if (ctx.count_in(na[0], 3, 4) == 1)
                out.emplace_back(a, na[0]);
        }
        return out;
    }

    // Isolated N3 edges touched by u, oriented (u-side endpoint, far endpoint).
    inline auto edges_at(const RuleContext & ctx, Vertex u, const std::vector<std::pair<Vertex, Vertex>> & edges)
        -> std::vector<std::pair<Vertex, Vertex>>
    {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (auto [a, b] : edges) {
            if (ctx.g.adjacent(u, a))
                out.emplace_back(a, b);
            else if (ctx.g.adjacent(u, b))
                out.emplace_back(b, a);
        }
        return out;
    }

    // Three or more isolated N3 edges under a common N2 vertex u. If another
    // N2 vertex u' sees the far ends of exactly two of them, every other far
    // end is forced; if u' sees three, nothing works.
    inline auto rule_r5(RuleContext & ctx) -> Step
    {
        auto edges = isolated_n3_edges(ctx);
        if (edges.size() < 3)
            return Step::NoChange;
        for (auto u : ctx.levels.bucket(2)) {
            auto at_u = edges_at(ctx, u, edges);
            if (at_u.size() < 3)
                continue;
            for (auto u2 : ctx.levels.bucket(2)) {
                if (u2 == u)
                    continue;
                std::vector<std::size_t> seen;
                for (std::size_t i = 0; i < at_u.size(); ++i)
                    if (ctx.g.adjacent(u2, at_u[i].second))
                        seen.push_back(i);
                if (seen.size() >= 3) {
                    std::vector<Vertex> w{u, u2};
                    for (auto i : seen) {
                        w.push_back(at_u[i].first);
                        w.push_back(at_u[i].second);
                    }
                    return ctx.dead(Rule::R5, w);
                }
                if (seen.size() != 2)
                    continue;
                for (std::size_t k = 0; k < at_u.size(); ++k) {
                    if (k == seen[0] || k == seen[1])
                        continue;
                    auto [x, y] = at_u[k];
                    std::vector<Vertex> w{u, u2, at_u[seen[0]].first, at_u[seen[0]].second, at_u[seen[1]].first,
                        at_u[seen[1]].second, x, y};
                    if (auto s = ctx.force(Rule::R5, y, w); s != Step::NoChange)
                        return s;
                }
            }
        }
        return Step::NoChange;
    }
}

/// Runs the forcing rules to fixpoint, recomputing distance levels from the
/// basis after every forcing.
inline auto propagate(const BipartiteGraph & g, StateMap state, const PropagateOptions & opts = {})
    -> PropagationResult
{
    std::vector<Event> events;
    if (state.basis().empty())
        return Reduced{std::move(state), std::move(events)};

    std::vector<Rule> order{Rule::R1, Rule::R2, Rule::R3};
    if (opts.structural_rules) {
        order.push_back(Rule::R4);
        order.push_back(Rule::R5);
    }
    std::optional<std::mt19937_64> rng;
    if (opts.order_seed)
        rng.emplace(*opts.order_seed);

    while (true) {
        if (rng)
            for (std::size_t i = order.size(); i > 1; --i)
                std::swap(order[i - 1], order[(*rng)() % i]);
        DistanceLevels levels(g, state.basis());
        detail::RuleContext ctx{g, levels, state, events, {}, Rule::Seed};
        auto step = detail::Step::NoChange;
        for (auto r : order) {
            switch (r) {
            case Rule::R1: step = detail::rule_r1(ctx); break;
            case Rule::R2: step = detail::rule_r2(ctx); break;
            case Rule::R3: step = detail::rule_r3(ctx); break;
            case Rule::R4: step = detail::rule_r4(ctx); break;
            case Rule::R5: step = detail::rule_r5(ctx); break;
            default: break;
            }
            if (step != detail::Step::NoChange)
                break;
        }
        if (step == detail::Step::Dead)
            return Infeasible{ctx.failed_rule, std::move(ctx.witness), std::move(events)};
        if (step == detail::Step::NoChange)
            return Reduced{std::move(state), std::move(events)};
    }
}

namespace detail {
    inline auto free_n3_on_side(const BipartiteGraph & g, const DistanceLevels & levels, const StateMap & state,
        Side side, std::span<const Vertex> keep) -> std::vector<Vertex>
    {
        std::vector<Vertex> out;
        for (auto t : levels.bucket(3))
            if (g.side(t) == side && state.is_free(t) && std::find(keep.begin(), keep.end(), t) == keep.end())
                out.push_back(t);
        return out;
    }

    // P3 in N3 ∪ N4 with an undecided N3 midpoint s: s is in or out; if in,
    // it is the only solution vertex of its colour in N3.
    inline auto branch_b1(RuleContext & ctx) -> std::optional<Branch>
    {
        for (auto s : ctx.levels.bucket(3)) {
            if (! ctx.state.is_free(s))
                continue;
            auto n34 = ctx.neighbours_in(s, 3, 4);
            if (n34.size() < 2)
                continue;
            Vertex keep[] = {s};
            BranchAlternative include{{s}, free_n3_on_side(ctx.g, ctx.levels, ctx.state, ctx.g.side(s), keep)};
            BranchAlternative leave_out{{}, {s}};
            return Branch{Rule::B1, {n34[0], s, n34[1]}, {include, leave_out}};
        }
        return std::nullopt;
    }

    // P4 (x1, y1, x2, y2) in N3 with settled inner vertices: x1 and y2 are the
    // N3 solution vertices. With y1, y2 in N4 instead, x1 (if chosen) is the
    // only N3 solution vertex of its colour.
    inline auto branch_b2(RuleContext & ctx) -> std::optional<Branch>
    {
        for (auto x1 : ctx.levels.bucket(3)) {
            if (! ctx.state.is_free(x1))
                continue;
            for (auto y1 : ctx.g.neighbours(x1)) {
                bool y1_in_n3 = ctx.levels.in(y1, 3);
                if (! ctx.levels.in_range(y1, 3, 4) || (y1_in_n3 && ctx.state.is_free(y1)))
                    continue;
                for (auto x2 : ctx.g.neighbours(y1)) {
                    if (x2 == x1 || ! ctx.levels.in(x2, 3) || ctx.state.is_free(x2))
                        continue;
                    for (auto y2 : ctx.g.neighbours(x2)) {
                        if (y2 == y1 || ctx.g.adjacent(x1, y2))
                            continue;
                        bool shape_n3 = y1_in_n3 && ctx.levels.in(y2, 3);
                        bool shape_n4 = ! y1_in_n3 && ctx.levels.in(y2, 4);
                        if (shape_n3) {
                            Vertex keep[] = {x1, y2};
                            auto others = free_n3_on_side(ctx.g, ctx.levels, ctx.state, ctx.g.side(x1), keep);
                            auto more = free_n3_on_side(ctx.g, ctx.levels, ctx.state, ctx.g.side(y2), keep);
                            others.insert(others.end(), more.begin(), more.end());
                            std::sort(others.begin(), others.end());
                            return Branch{Rule::B2, {x1, y1, x2, y2}, {BranchAlternative{{x1, y2}, others}}};
                        }
                        if (shape_n4) {
                            Vertex keep[] = {x1};
                            BranchAlternative include{
                                {x1}, free_n3_on_side(ctx.g, ctx.levels, ctx.state, ctx.g.side(x1), keep)};
                            return Branch{Rule::B2, {x1, y1, x2, y2}, {include, BranchAlternative{{}, {x1}}}};
                        }
                    }
                }
            }
        }
        return std::nullopt;
    }

    // Two isolated N3 edges (x1, y1), (x2, y2) with a common N2 neighbour of
    // x1, x2 and another of y1, y2: either x1, y2 or x2, y1 are chosen.
    inline auto branch_b3(RuleContext & ctx) -> std::optional<Branch>
    {
        auto edges = isolated_n3_edges(ctx);
        for (auto u : ctx.levels.bucket(2)) {
            auto at_u = edges_at(ctx, u, edges);
            for (std::size_t i = 0; i < at_u.size(); ++i)
                for (std::size_t j = i + 1; j < at_u.size(); ++j) {
                    auto [x1, y1] = at_u[i];
                    auto [x2, y2] = at_u[j];
                    if (! (ctx.state.is_free(x1) || ctx.state.is_free(y1) || ctx.state.is_free(x2)
                            || ctx.state.is_free(y2)))
                        continue;
                    if (ctx.state.is_forced(x1) || ctx.state.is_forced(y1) || ctx.state.is_forced(x2)
                        || ctx.state.is_forced(y2))
                        continue;
                    auto u2 = ctx.common_neighbour_in(y1, y2, 2);
                    if (! u2)
                        continue;
                    return Branch{Rule::B3, {u, *u2, x1, y1, x2, y2},
                        {BranchAlternative{{x1, y2}, {}}, BranchAlternative{{x2, y1}, {}}}};
                }
        }
        return std::nullopt;
    }
}

/// Finds the first under-determined structure (B1, then B2, then B3) and
/// returns its alternatives, keeping only those consistent with `state`.
/// Reduced (with the state unchanged) when there is none; Infeasible when no
/// alternative survives.
inline auto branch_candidates(const BipartiteGraph & g, const StateMap & state) -> PropagationResult
{
    if (state.basis().empty())
        return Reduced{state, {}};
    DistanceLevels levels(g, state.basis());
    StateMap scratch = state;
    std::vector<Event> events;
    detail::RuleContext ctx{g, levels, scratch, events, {}, Rule::Seed};

    std::optional<Branch> branch = detail::branch_b1(ctx);
    if (! branch)
        branch = detail::branch_b2(ctx);
    if (! branch)
        branch = detail::branch_b3(ctx);
    if (! branch)
        return Reduced{state, {}};

    std::vector<BranchAlternative> viable;
    for (auto & alt : branch->alternatives) {
        StateMap trial = state;
        if (! apply_alternative(g, trial, alt, branch->rule) && trial != state
            && std::find(viable.begin(), viable.end(), alt) == viable.end())
            viable.push_back(alt);
    }
    if (viable.empty())
        return Infeasible{branch->rule, branch->witness, {}};
    branch->alternatives = std::move(viable);
    return *branch;
}

struct HalfPartition {
    std::vector<Vertex> h1;
    std::vector<Vertex> h2;
};

/// H1 = ((N2 ∪ N4) ∩ X) ∪ (N3 ∩ Y), H2 = ((N2 ∪ N4) ∩ Y) ∪ (N3 ∩ X).
inline auto partition_h1_h2(const BipartiteGraph & g, const DistanceLevels & levels) -> HalfPartition
{
    HalfPartition out;
    for (std::size_t i = 2; i <= 4; ++i)
        for (auto v : levels.bucket(i)) {
            bool odd_level = i == 3;
            bool on_x = g.side(v) == Side::X;
            (on_x != odd_level ? out.h1 : out.h2).push_back(v);
        }
    std::sort(out.h1.begin(), out.h1.end());
    std::sort(out.h2.begin(), out.h2.end());
    return out;
}

enum class Assertion : std::uint8_t { A1, A2, A3, A4, A5, A6 };

inline auto to_string(Assertion a) -> std::string { return "A" + std::to_string(static_cast<int>(a) + 1); }

struct AssertionViolation {
    Assertion id;
    std::vector<Vertex> witness;
};

struct AssertionReport {
    std::vector<AssertionViolation> violations;

    [[nodiscard]] auto empty() const -> bool { return violations.empty(); }
    [[nodiscard]] auto has(Assertion a) const -> bool
    {
        return std::any_of(violations.begin(), violations.end(), [&](auto & v) { return v.id == a; });
    }
};

struct AssertOptions {
    // Components of N2 ∪ N3 ∪ N4 are examined with every X-Y pair of their N2
    // vertices treated as adjacent (never added to the real graph).
    bool virtual_n2_join = true;
};

namespace detail {
    struct ResidualPiece {
        BipartiteGraph graph;
        std::vector<Vertex> to_global;
    };

    inline auto residual_pieces(const BipartiteGraph & g, const DistanceLevels & levels, bool join)
        -> std::vector<ResidualPiece>
    {
        VertexMask deep(g.size(), false);
        for (std::size_t i = 2; i < levels.depth(); ++i)
            for (auto v : levels.bucket(i))
                deep[v] = true;
        std::vector<ResidualPiece> out;
        for (auto & members : components(g, deep).members) {
            auto sub = induced_subgraph(g, members);
            if (join) {
                std::vector<std::vector<Vertex>> adj(members.size());
                std::vector<Side> sides(members.size());
                for (Vertex i = 0; i < members.size(); ++i) {
                    sides[i] = sub.graph.side(i);
                    auto nb = sub.graph.neighbours(i);
                    adj[i].assign(nb.begin(), nb.end());
                }
                for (Vertex i = 0; i < members.size(); ++i)
                    for (Vertex j = i + 1; j < members.size(); ++j)
                        if (levels.in(members[i], 2) && levels.in(members[j], 2) && sides[i] != sides[j]) {
                            adj[i].push_back(j);
                            adj[j].push_back(i);
                        }
                sub.graph = BipartiteGraph::from_coloured(std::move(adj), std::move(sides));
            }
            out.push_back({std::move(sub.graph), std::move(sub.to_global)});
        }
        return out;
    }

    inline auto globalise(std::span<const Vertex> local, const std::vector<Vertex> & to_global)
        -> std::vector<Vertex>
    {
        std::vector<Vertex> out;
        for (auto v : local)
            out.push_back(to_global[v]);
        return out;
    }
}

/// Pure checks of the structure a fully reduced state is expected to have:
///   A1 N5 is empty;
///   A2 N4 is independent;
///   A3 endpoints of N3-N3 edges have no N4 neighbour;
///   A4 no induced P6 alternating N2, N3 (starting in N2);
///   A5 same-side N3 vertices of a residual component are at distance 2 or 4;
///   A6 every residual component is P8-free.
inline auto assert_structural_lemmas(const BipartiteGraph & g, const StateMap & state, const AssertOptions & opts = {})
    -> AssertionReport
{
    AssertionReport report;
    if (state.basis().empty())
        return report;
    DistanceLevels levels(g, state.basis());
    auto add = [&](Assertion a, std::vector<Vertex> w) { report.violations.push_back({a, std::move(w)}); };

    if (levels.depth() > 5)
        add(Assertion::A1, {levels.bucket(5).begin(), levels.bucket(5).end()});

    for (auto v : levels.bucket(4))
        for (auto w : g.neighbours(v))
            if (v < w && levels.in(w, 4))
                add(Assertion::A2, {v, w});

    for (auto r : levels.bucket(3))
        for (auto s : g.neighbours(r)) {
            if (s < r || ! levels.in(s, 3))
                continue;
            for (auto e : {r, s})
                for (auto t : g.neighbours(e))
                    if (levels.in(t, 4))
                        add(Assertion::A3, {r, s, t});
        }

    {
        VertexMask n23(g.size(), false);
        for (auto v : levels.bucket(2))
            n23[v] = true;
        for (auto v : levels.bucket(3))
            n23[v] = true;
        for (auto u : levels.bucket(2)) {
            bool stop = ! for_each_induced_path_from(g, u, 6, [&](std::span<const Vertex> p) {
                for (std::size_t i = 0; i < 6; ++i)
                    if (! levels.in(p[i], i % 2 == 0 ? 2 : 3))
                        return true;
                add(Assertion::A4, {p.begin(), p.end()});
                return false;
            }, &n23);
            if (stop)
                break;
        }
    }

    for (auto & piece : detail::residual_pieces(g, levels, opts.virtual_n2_join)) {
        const auto & q = piece.graph;
        std::vector<Vertex> n3;
        for (Vertex i = 0; i < q.size(); ++i)
            if (levels.in(piece.to_global[i], 3))
                n3.push_back(i);
        for (auto a : n3) {
            DistanceLevels from_a(q, std::span<const Vertex>(&a, 1));
            for (auto b : n3) {
                if (b <= a || q.side(a) != q.side(b))
                    continue;
                auto d = from_a.level(b);
                if (! d || (*d != 2 && *d != 4))
                    add(Assertion::A5, {piece.to_global[a], piece.to_global[b]});
            }
        }
        VertexMask all(q.size(), true);
        if (auto p8 = find_induced_path(q, 8, all))
            add(Assertion::A6, detail::globalise(p8->vertices, piece.to_global));
    }
    return report;
}

}
