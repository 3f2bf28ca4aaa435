#pragma once

#include <eds/domination.hpp>
#include <eds/generators.hpp>
#include <eds/graph.hpp>
#include <eds/graph_io.hpp>
#include <eds/oracle.hpp>
#include <eds/patterns.hpp>
#include <eds/solver.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace eds {

namespace exit_code {
    constexpr int ok = 0;
    constexpr int negative = 1;
    constexpr int input_error = 2;
    constexpr int not_bipartite = 3;
    constexpr int not_s115_free = 4;
}

namespace detail {
    inline auto load_graph(const std::string & path) -> BipartiteGraph
    {
        std::ifstream in(path);
        if (! in)
            throw ParseError(0, "cannot open '" + path + "'");
        return parse_graph(in);
    }

    inline void print_solution(std::ostream & out, const std::optional<EdsSolution> & d)
    {
        if (! d) {
            out << "NONE\n";
            return;
        }
        out << "EDS " << d->size() << '\n' << format_vertices(d->vertices()) << '\n';
    }

    inline void print_trace(std::ostream & out, const SolveTrace & trace)
    {
        for (const auto & c : trace.components) {
            out << "# component " << c.component_id << " size " << c.members.size() << " branch "
                << to_string(c.branch) << " candidates " << c.candidates_tried;
            if (c.candidate)
                out << " witness " << describe(*c.candidate) << ' ' << format_vertices(c.candidate->vertices);
            if (c.depth_capped)
                out << " depth-capped";
            out << '\n';
            for (const auto & e : c.events)
                out << "#   " << to_string(e.rule) << (e.action == Action::Force ? " force " : " exclude ")
                    << e.vertex << '\n';
            for (const auto & w : c.warnings)
                out << "#   warning " << to_string(w.id) << ' ' << format_vertices(w.witness) << '\n';
        }
    }

    struct CompareInstance {
        BipartiteGraph graph;
        double p;
    };

    // Instance i of a comparison batch: n uniform in [ceil(max_n / 2), max_n],
    // the X side between n/4 and 3n/4, p from {0.1, 0.2, 0.3}; resampled
    // until the filter accepts.
    inline auto compare_instance(std::uint64_t seed, std::size_t i, std::size_t max_n) -> CompareInstance
    {
        static constexpr double ps[] = {0.1, 0.2, 0.3};
        for (std::uint64_t attempt = 0;; ++attempt) {
            std::mt19937_64 rng(splitmix64(splitmix64(seed + i) + attempt));
            std::size_t lo = (max_n + 1) / 2;
            std::size_t n = lo + rng() % (max_n - lo + 1);
            std::size_t nx = n / 4 + rng() % (n / 2 + 1);
            double p = ps[rng() % 3];
            try {
                return {gen_s115_free(nx, n - nx, p, rng(), 100).graph, p};
            }
            catch (const TriesExhausted &) {
            }
        }
    }
}

/// The eds command line. `args` excludes the program name.
inline auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"Efficient dominating sets in S(1,1,5)-free bipartite graphs", "eds"};
    app.require_subcommand(1);

    std::string file;
    bool strict = false, permissive = false, trace = false, fallback = false;
    auto * solve_cmd = app.add_subcommand("solve", "find an efficient dominating set");
    solve_cmd->add_option("file", file, "graph file")->required();
    auto * strict_flag = solve_cmd->add_flag("--strict", strict, "refuse graphs containing S(1,1,5)");
    solve_cmd->add_flag("--permissive", permissive, "accept any bipartite graph (default)")->excludes(strict_flag);
    solve_cmd->add_flag("--trace", trace, "print how each component was solved");
    solve_cmd->add_flag("--fallback", fallback, "use the exact solver when every branch fails");

    bool mrv = false;
    auto * oracle_cmd = app.add_subcommand("oracle", "exact search (lexicographically smallest solution)");
    oracle_cmd->add_option("file", file, "graph file")->required();
    oracle_cmd->add_flag("--mrv", mrv, "branch on the most constrained vertex");

    std::string set;
    auto * verify_cmd = app.add_subcommand("verify", "check a candidate set");
    verify_cmd->add_option("file", file, "graph file")->required();
    verify_cmd->add_option("--set", set, "space-separated vertex ids")->required();

    std::string pattern;
    auto * detect_cmd = app.add_subcommand("detect", "look for an induced pattern");
    detect_cmd->add_option("file", file, "graph file")->required();
    detect_cmd->add_option("--pattern", pattern, "pattern")
        ->required()
        ->check(CLI::IsMember({"s115", "p8", "c6"}));

    std::string kind, family, out_path;
    std::uint64_t seed = 0;
    std::size_t nx = 4, ny = 4, nd = 4, spread = 2, n = 6, max_tries = 1000;
    double p = 0.3, extra_p = 0.05;
    auto * gen_cmd = app.add_subcommand("gen", "write a generated graph");
    gen_cmd->add_option("--kind", kind, "random, s115free, planted or family")
        ->required()
        ->check(CLI::IsMember({"random", "s115free", "planted", "family"}));
    gen_cmd->add_option("--seed", seed, "64-bit seed");
    gen_cmd->add_option("--out", out_path, "output file")->required();
    gen_cmd->add_option("--nx", nx, "X side size");
    gen_cmd->add_option("--ny", ny, "Y side size");
    gen_cmd->add_option("--p", p, "edge probability");
    gen_cmd->add_option("--max-tries", max_tries, "rejection sampling budget");
    gen_cmd->add_option("--nd", nd, "planted solution size");
    gen_cmd->add_option("--spread", spread, "private neighbours per planted vertex");
    gen_cmd->add_option("--extra-p", extra_p, "probability of extra edges between non-solution vertices");
    gen_cmd->add_option("--family", family, "path, cycle, star, complete_bipartite or spider115");
    gen_cmd->add_option("--n", n, "family size");

    std::size_t count = 100, max_n = 16;
    auto * compare_cmd = app.add_subcommand("compare", "driver versus exact solver on S(1,1,5)-free graphs");
    compare_cmd->add_option("--count", count, "instances");
    compare_cmd->add_option("--seed", seed, "64-bit seed");
    compare_cmd->add_option("--max-n", max_n, "largest vertex count")->check(CLI::Range(1, 4096));
    compare_cmd->add_flag("--strict", strict, "run the driver in strict mode");

    std::size_t reps = 3;
    auto * bench_cmd = app.add_subcommand("bench", "time the driver on planted instances");
    bench_cmd->add_option("--seed", seed, "64-bit seed");
    bench_cmd->add_option("--reps", reps, "instances per size");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_code::ok;
    }
    catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_code::ok;
    }
    catch (const CLI::ParseError & e) {
        err << "error: " << e.what() << '\n';
        return exit_code::input_error;
    }

    try {
        if (solve_cmd->parsed()) {
            auto g = detail::load_graph(file);
            SolveOptions opts;
            opts.strictness = strict ? Strictness::Strict : Strictness::Permissive;
            opts.oracle_fallback = fallback;
            try {
                auto r = solve(g, opts);
                detail::print_solution(out, r.solution);
                if (trace)
                    detail::print_trace(out, r.trace);
                return r.solution ? exit_code::ok : exit_code::negative;
            }
            catch (const NotS115Free & e) {
                err << "error: " << e.what() << '\n';
                out << "S115 " << format_vertices(e.witness().vertices) << '\n';
                return exit_code::not_s115_free;
            }
        }
        if (oracle_cmd->parsed()) {
            auto g = detail::load_graph(file);
            OracleOptions opts;
            opts.mrv = mrv;
            auto r = oracle_solve(g, nullptr, opts);
            detail::print_solution(out, r.solution);
            return r.solution ? exit_code::ok : exit_code::negative;
        }
        if (verify_cmd->parsed()) {
            auto g = detail::load_graph(file);
            auto ids = parse_vertex_list(set);
            for (auto v : ids)
                if (v >= g.size())
                    throw ParseError(0, "vertex " + std::to_string(v) + " out of range");
            auto report = verify(g, EdsSolution(ids));
            if (report.valid) {
                out << "VALID\n";
                return exit_code::ok;
            }
            out << "INVALID v=" << report.violation->vertex << " count=" << report.violation->dominators << '\n';
            return exit_code::negative;
        }
        if (detect_cmd->parsed()) {
            auto g = detail::load_graph(file);
            std::optional<InducedWitness> w;
            if (pattern == "s115")
                w = find_s115(g);
            else if (pattern == "p8")
                w = find_induced_path(g, 8, VertexMask(g.size(), true));
            else
                for_each_induced_c6(g, [&](const InducedWitness & c) {
                    w = c;
                    return false;
                });
            if (! w) {
                out << "FREE\n";
                return exit_code::ok;
            }
            out << format_vertices(w->vertices) << '\n';
            return exit_code::negative;
        }
        if (gen_cmd->parsed()) {
            std::optional<EdsSolution> planted;
            BipartiteGraph g;
            if (kind == "random")
                g = gen_random(nx, ny, p, seed);
            else if (kind == "s115free")
                g = gen_s115_free(nx, ny, p, seed, max_tries).graph;
            else if (kind == "planted") {
                auto inst = gen_planted(nd, spread, extra_p, seed);
                g = std::move(inst.graph);
                planted = std::move(inst.planted);
            }
            else
                g = gen_family(family, n);
            std::ofstream f(out_path);
            if (! f)
                throw ParseError(0, "cannot write '" + out_path + "'");
            write_graph(f, g);
            if (planted) {
                std::ofstream s(out_path + ".solution");
                s << format_vertices(planted->vertices()) << '\n';
            }
            out << "wrote " << out_path << " (n=" << g.size() << " m=" << g.edge_count() << ")\n";
            return exit_code::ok;
        }
        if (compare_cmd->parsed()) {
            SolveOptions opts;
            opts.strictness = strict ? Strictness::Strict : Strictness::Permissive;
            std::size_t agree = 0, found = 0, invalid = 0;
            for (std::size_t i = 0; i < count; ++i) {
                auto inst = detail::compare_instance(seed, i, max_n);
                auto r = solve_compare(inst.graph, opts);
                agree += r.agree;
                found += r.oracle.has_value();
                bool bad = ! r.driver_valid || ! r.oracle_valid;
                invalid += bad;
                if (! r.agree || bad)
                    out << "MISMATCH instance " << i << " n=" << inst.graph.size() << " p=" << inst.p
                        << " driver=" << (r.driver ? "some" : "none") << " oracle=" << (r.oracle ? "some" : "none")
                        << '\n';
            }
            out << "instances " << count << " agree " << agree << " with-solution " << found << " invalid "
                << invalid << '\n';
            return agree == count && invalid == 0 ? exit_code::ok : exit_code::negative;
        }
        if (bench_cmd->parsed()) {
            out << "n\tm\tnd\tms\tfound\n";
            for (std::size_t size_nd : {2, 5, 10, 15, 20})
                for (std::size_t r = 0; r < reps; ++r) {
                    auto inst = gen_planted(size_nd, 9, 0.02, splitmix64(seed + size_nd * 1000 + r));
                    auto t0 = std::chrono::steady_clock::now();
                    auto res = solve(inst.graph);
                    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
                    out << inst.graph.size() << '\t' << inst.graph.edge_count() << '\t' << size_nd << '\t'
                        << std::fixed << std::setprecision(3) << ms << '\t' << (res.solution ? 1 : 0) << '\n';
                }
            return exit_code::ok;
        }
    }
    catch (const NotBipartite & e) {
        err << "error: " << e.what() << ": " << format_vertices(e.cycle()) << '\n';
        return exit_code::not_bipartite;
    }
    catch (const ParseError & e) {
        err << "error: " << e.what() << '\n';
        return exit_code::input_error;
    }
    catch (const GraphError & e) {
        err << "error: " << e.what() << '\n';
        return exit_code::input_error;
    }
    catch (const TriesExhausted & e) {
        err << "error: " << e.what() << '\n';
        return exit_code::input_error;
    }
    catch (const std::invalid_argument & e) {
        err << "error: " << e.what() << '\n';
        return exit_code::input_error;
    }
    return exit_code::input_error;
}

}
