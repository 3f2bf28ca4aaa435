#pragma once

#include <eds/domination.hpp>
#include <eds/graph.hpp>
#include <eds/oracle.hpp>
#include <eds/patterns.hpp>
#include <eds/reduction.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eds {

enum class Strictness : std::uint8_t { Permissive, Strict };

class NotS115Free : public std::runtime_error {
public:
    explicit NotS115Free(InducedWitness w) :
        std::runtime_error("graph contains an induced S(1,1,5)"), witness_(std::move(w))
    {
    }

    [[nodiscard]] auto witness() const -> const InducedWitness & { return witness_; }

private:
    InducedWitness witness_;
};

struct SolveOptions {
    Strictness strictness = Strictness::Permissive;
    // Solve a component exactly when every branch fails. Off by default so
    // that the driver's own coverage is what gets measured.
    bool oracle_fallback = false;
    std::size_t max_branch_depth = 64;
    std::optional<std::uint64_t> rule_order_seed;
    AssertOptions assertions;
    OracleOptions oracle;
};

enum class BranchLabel : std::uint8_t { Singleton, A, B, C, Fallback, Failed };

inline auto to_string(BranchLabel b) -> std::string
{
    switch (b) {
    case BranchLabel::Singleton: return "singleton";
    case BranchLabel::A: return "A";
    case BranchLabel::B: return "B";
    case BranchLabel::C: return "C";
    case BranchLabel::Fallback: return "fallback";
    case BranchLabel::Failed: return "failed";
    }
    return "?";
}

/// How one connected component was settled. Events use global ids and end
/// with the oracle's completion (rule Seed, action Force), so replaying every
/// event on a fresh state yields exactly the component's part of the solution.
struct ComponentTrace {
    std::size_t component_id = 0;
    std::vector<Vertex> members;
    BranchLabel branch = BranchLabel::Failed;
    std::optional<InducedWitness> candidate;
    std::vector<Event> events;
    std::vector<AssertionViolation> warnings;
    std::size_t candidates_tried = 0;
    bool depth_capped = false;
    bool success = false;
};

struct SolveTrace {
    std::vector<ComponentTrace> components;
};

struct SolveResult {
    std::optional<EdsSolution> solution;
    SolveTrace trace;
};

namespace detail {
    struct Attempt {
        std::vector<Vertex> solution;
        std::vector<Event> events;
        std::vector<AssertionViolation> warnings;
    };

    class ComponentSolver {
    public:
        ComponentSolver(const BipartiteGraph & q, const SolveOptions & opts) : q_(q), opts_(opts) {}

        auto singleton() -> std::optional<Attempt>
        {
            for (Vertex v = 0; v < q_.size(); ++v)
                if (q_.degree(v) + 1 == q_.size())
                    return Attempt{{v}, {{Rule::Seed, Action::Force, v}}, {}};
            return std::nullopt;
        }

        // Every P4 midpoint is out; every endpoint that is nowhere a midpoint
        // is in.
        auto branch_a() -> std::optional<Attempt>
        {
            VertexMask mid(q_.size(), false), end(q_.size(), false);
            for_each_induced_path(q_, 4, [&](std::span<const Vertex> p) {
                mid[p[1]] = mid[p[2]] = true;
                end[p[0]] = end[p[3]] = true;
                return true;
            });
            StateMap state(q_.size());
            std::vector<Event> events;
            for (Vertex v = 0; v < q_.size(); ++v)
                if (mid[v]) {
                    state.exclude(v);
                    events.push_back({Rule::MidpointExclusion, Action::Exclude, v});
                }
            for (Vertex v = 0; v < q_.size(); ++v)
                if (end[v] && ! mid[v]) {
                    if (state.force(q_, v))
                        return std::nullopt;
                    events.push_back({Rule::EndpointForcing, Action::Force, v});
                }
            return finish(state, std::move(events), {});
        }

        // Hypothesise two solution vertices at distance three taken from an
        // induced P6 or C6 and follow the rules.
        auto branch_b(ComponentTrace & trace) -> std::optional<Attempt>
        {
            std::set<std::pair<Vertex, Vertex>> tried;
            std::optional<Attempt> found;
            auto run = [&](const InducedWitness & w, Vertex a, Vertex b) -> bool {
                if (a > b)
                    std::swap(a, b);
                if (! tried.insert({a, b}).second)
                    return true;
                ++trace.candidates_tried;
                StateMap state(q_.size());
                state.force(q_, a);
                if (state.force(q_, b))
                    return true;
                std::vector<Event> events{{Rule::Seed, Action::Force, a}, {Rule::Seed, Action::Force, b}};
                capped_ = false;
                found = explore(std::move(state), std::move(events), 0);
                trace.depth_capped = trace.depth_capped || capped_;
                if (found) {
                    trace.candidate = w;
                    return false;
                }
                return true;
            };
            bool go_on = for_each_induced_path(q_, 6, [&](std::span<const Vertex> p) {
                return run(InducedWitness{PatternKind::Path, {p.begin(), p.end()}}, p[1], p[4]);
            });
            if (go_on)
                for_each_induced_c6(q_, [&](const InducedWitness & w) {
                    for (std::size_t i = 0; i < 3; ++i)
                        if (! run(w, w.vertices[i], w.vertices[i + 3]))
                            return false;
                    return true;
                });
            return found;
        }

        // No two solution vertices sit on a P6/C6 at positions 2 and 5: the
        // second and seventh vertex of every induced P8 are in.
        auto branch_c() -> std::optional<Attempt>
        {
            StateMap state(q_.size());
            std::vector<Event> events;
            bool ok = for_each_induced_path(q_, 8, [&](std::span<const Vertex> p) {
                for (auto v : {p[1], p[6]}) {
                    if (state.is_forced(v))
                        continue;
                    if (state.force(q_, v))
                        return false;
                    events.push_back({Rule::P8Forcing, Action::Force, v});
                }
                return true;
            });
            if (! ok)
                return std::nullopt;
            PropagateOptions popts;
            popts.structural_rules = false;
            popts.order_seed = opts_.rule_order_seed;
            auto r = propagate(q_, std::move(state), popts);
            auto * red = std::get_if<Reduced>(&r);
            if (! red)
                return std::nullopt;
            events.insert(events.end(), red->events.begin(), red->events.end());
            auto done = finish(red->state, std::move(events), {});
            if (done && has_2d_pattern(done->solution))
                return std::nullopt;
            return done;
        }

        auto fallback() -> std::optional<Attempt>
        {
            auto r = oracle_solve(q_, nullptr, opts_.oracle);
            if (! r.solution)
                return std::nullopt;
            Attempt a;
            a.solution = r.solution->vertices();
            for (auto v : a.solution)
                a.events.push_back({Rule::Seed, Action::Force, v});
            return a;
        }

    private:
        auto explore(StateMap state, std::vector<Event> events, std::size_t depth) -> std::optional<Attempt>
        {
            PropagateOptions popts;
            popts.order_seed = opts_.rule_order_seed;
            auto r = propagate(q_, std::move(state), popts);
            auto * red = std::get_if<Reduced>(&r);
            if (! red)
                return std::nullopt;
            events.insert(events.end(), red->events.begin(), red->events.end());

            auto b = branch_candidates(q_, red->state);
            if (std::holds_alternative<Infeasible>(b))
                return std::nullopt;
            if (auto * br = std::get_if<Branch>(&b)) {
                if (depth >= opts_.max_branch_depth) {
                    capped_ = true;
                    return std::nullopt;
                }
                for (auto & alt : br->alternatives) {
                    StateMap next = red->state;
                    auto next_events = events;
                    if (apply_alternative(q_, next, alt, br->rule, &next_events))
                        continue;
                    if (auto found = explore(std::move(next), std::move(next_events), depth + 1))
                        return found;
                }
                return std::nullopt;
            }

            auto report = assert_structural_lemmas(q_, red->state, opts_.assertions);
            if (opts_.strictness == Strictness::Strict && report.has(Assertion::A6))
                return std::nullopt;
            return finish(red->state, std::move(events), std::move(report.violations));
        }

        auto finish(const StateMap & state, std::vector<Event> events, std::vector<AssertionViolation> warnings)
            -> std::optional<Attempt>
        {
            auto r = complete_by_oracle(q_, state, opts_.oracle);
            if (! r.solution || ! verify(q_, *r.solution).valid)
                return std::nullopt;
            for (auto v : r.solution->vertices())
                if (! state.is_forced(v))
                    events.push_back({Rule::Seed, Action::Force, v});
            return Attempt{r.solution->vertices(), std::move(events), std::move(warnings)};
        }

        // Two solution vertices at distance 3 that are the second and fifth
        // vertex of an induced P6 or C6.
        auto has_2d_pattern(const std::vector<Vertex> & d) const -> bool
        {
            VertexMask in_d = mask_of(q_.size(), d);
            for (auto x : d)
                for (auto a : q_.neighbours(x))
                    for (auto b : q_.neighbours(a)) {
                        if (b == x)
                            continue;
                        for (auto y : q_.neighbours(b)) {
                            if (! in_d[y] || y <= x || q_.adjacent(a, y))
                                continue;
                            for (auto v1 : q_.neighbours(x)) {
                                if (v1 == a || q_.adjacent(v1, b))
                                    continue;
                                for (auto v6 : q_.neighbours(y))
                                    if (v6 != b && ! q_.adjacent(v6, a))
                                        return true;
                            }
                        }
                    }
            return false;
        }

        const BipartiteGraph & q_;
        const SolveOptions & opts_;
        bool capped_ = false;
    };
}

/// Finds an efficient dominating set component by component. Every returned
/// set has been verified; nullopt means some component had no branch succeed.
inline auto solve(const BipartiteGraph & g, const SolveOptions & opts = {}) -> SolveResult
{
    if (opts.strictness == Strictness::Strict)
        if (auto w = find_s115(g))
            throw NotS115Free(std::move(*w));

    SolveResult out;
    std::vector<Vertex> chosen;
    bool all_ok = true;
    auto parts = components(g);
    for (std::size_t c = 0; c < parts.count(); ++c) {
        ComponentTrace trace;
        trace.component_id = c;
        trace.members = parts.members[c];
        auto sub = induced_subgraph(g, trace.members);
        detail::ComponentSolver solver(sub.graph, opts);

        std::optional<detail::Attempt> found;
        if ((found = solver.singleton()))
            trace.branch = BranchLabel::Singleton;
        else if ((found = solver.branch_a()))
            trace.branch = BranchLabel::A;
        else if ((found = solver.branch_b(trace)))
            trace.branch = BranchLabel::B;
        else if ((found = solver.branch_c()))
            trace.branch = BranchLabel::C;
        else if (opts.oracle_fallback && (found = solver.fallback()))
            trace.branch = BranchLabel::Fallback;

        if (found) {
            trace.success = true;
            for (auto v : found->solution)
                chosen.push_back(sub.to_global[v]);
            for (auto e : found->events)
                trace.events.push_back({e.rule, e.action, sub.to_global[e.vertex]});
            for (auto & w : found->warnings) {
                auto global = w;
                for (auto & v : global.witness)
                    v = sub.to_global[v];
                trace.warnings.push_back(std::move(global));
            }
        }
        else {
            trace.candidate.reset();
            all_ok = false;
        }
        out.trace.components.push_back(std::move(trace));
    }
    if (all_ok) {
        EdsSolution d(std::move(chosen));
        if (verify(g, d).valid)
            out.solution = std::move(d);
    }
    return out;
}

struct CompareReport {
    std::optional<EdsSolution> driver;
    std::optional<EdsSolution> oracle;
    bool driver_valid = true;
    bool oracle_valid = true;
    bool agree = false;
};

/// Runs the driver and the exact oracle on the same graph.
inline auto solve_compare(const BipartiteGraph & g, const SolveOptions & opts = {}) -> CompareReport
{
    CompareReport r;
    r.driver = solve(g, opts).solution;
    r.oracle = oracle_solve(g, nullptr, opts.oracle).solution;
    if (r.driver)
        r.driver_valid = verify(g, *r.driver).valid;
    if (r.oracle)
        r.oracle_valid = verify(g, *r.oracle).valid;
    r.agree = r.driver.has_value() == r.oracle.has_value();
    return r;
}

}
