// Copyright 2026 The qpz Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "qpz/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>

#include "qpz/compile.hpp"
#include "qpz/error.hpp"
#include "qpz/oracle.hpp"
#include "qpz/puzzle_file.hpp"
#include "qpz/solvers.hpp"
#include "qpz/takuzu.hpp"

namespace qpz::cli {

namespace {

struct SolveFlags {
    std::uint64_t seed = 0;
    int restarts = 20;
    int sweeps = 2000;
    bool parallel = false;
    bool machine = false;
    std::size_t exhaustive_limit = 20;
};

std::string one_line(const std::string& grid) {
    std::string s = grid;
    if (!s.empty() && s.back() == '\n') s.pop_back();
    std::replace(s.begin(), s.end(), '\n', '/');
    return s;
}

void print_report(std::ostream& out, const VerifyReport& r) {
    if (r.satisfied) {
        out << "verifier: satisfied\n";
        return;
    }
    out << "verifier: " << r.violations.size() << " violation(s)\n";
    for (const Violation& v : r.violations) {
        out << "  " << v.constraint << ':';
        for (CellRef c : v.cells) out << ' ' << to_string(c);
        out << '\n';
    }
}

PuzzleFile load(const std::string& path, std::ostream& err) {
    PuzzleFile f = load_puzzle(path);
    for (const std::string& w : f.warnings) err << "warning: " << w << '\n';
    return f;
}

int cmd_build(const std::string& path, std::ostream& out, std::ostream& err) {
    const PuzzleFile f = load(path, err);
    const Compiled c = compile(f.problem);
    out << "family: " << to_string(family(f.problem)) << '\n'
        << "variables: " << c.qubo.num_vars() << '\n'
        << "linear terms: " << c.qubo.linear().size() << '\n'
        << "quadratic terms: " << c.qubo.quadratic().size() << '\n'
        << "offset: " << c.qubo.offset() << '\n';
    if (c.floor.family != Family::max_pieces) out << "predicted floor: " << predicted_min_energy(c.floor) << '\n';
    return kOk;
}

int cmd_reduce(const std::string& path, std::ostream& out, std::ostream& err) {
    const PuzzleFile f = load(path, err);
    const Compiled c = compile(f.problem);
    const VarMap& vm = c.vars;
    out << "cells: " << vm.board().size() << '\n'
        << "free: " << vm.count(VarMap::State::free) << '\n'
        << "fixed: " << vm.count(VarMap::State::fixed) << '\n'
        << "aliased: " << vm.count(VarMap::State::aliased) << '\n'
        << "inactive: " << vm.count(VarMap::State::inactive) << '\n';
    if (const auto* t = std::get_if<TakuzuProblem>(&f.problem))
        out << "bound: " << takuzu_variable_bound(*t) << '\n';
    return kOk;
}

bool acceptable(const Problem& p, const BinaryGrid& g) { return verify(p, g).satisfied; }

int cmd_solve(const std::string& path, const SolveFlags& fl, std::ostream& out, std::ostream& err) {
    const PuzzleFile f = load(path, err);
    Compiled c = compile(f.problem);
    const std::size_t n = c.qubo.num_vars();
    const bool exhaustive = n <= fl.exhaustive_limit;
    const bool max_pieces = c.floor.family == Family::max_pieces;

    std::optional<QuarterInt> floor;
    if (max_pieces && exhaustive) {
        const Enumeration e = enumerate_solutions(f.problem, 1);
        if (!e.best_weight) throw InfeasibleError("initial", "the given pieces already threaten each other");
        c.floor.max_independent_weight = e.best_weight;
    }
    if (!max_pieces || exhaustive) floor = predicted_min_energy(c.floor);

    std::optional<BinaryGrid> grid;
    QuarterInt energy;
    std::string method;
    if (exhaustive) {
        method = "exhaustive";
        const SolveResult r = solve_exhaustive(c.qubo);
        energy = r.best_energy;
        if (energy > *floor) {
            err << "infeasible: exhaustive minimum " << energy << " > floor " << *floor << '\n';
            return kInfeasible;
        }
        for (const Assignment& x : r.optima) {
            BinaryGrid g = c.decode(x);
            if (acceptable(f.problem, g)) {
                grid = std::move(g);
                break;
            }
        }
        if (!grid) {
            if (r.optima_truncated) {
                err << "gave up: no verified board among the first " << r.optima.size() << " optima\n";
                return kGaveUp;
            }
            err << "infeasible: no minimiser at the floor satisfies every rule\n";
            return kInfeasible;
        }
    } else {
        method = "anneal";
        AnnealParams ap;
        ap.seed = fl.seed;
        ap.restarts = fl.restarts;
        ap.sweeps = fl.sweeps;
        ap.parallel = fl.parallel;
        ap.stop_at = floor;
        const SolveResult r = solve_anneal(c.qubo, ap);
        energy = r.best_energy;
        if (floor && energy > *floor) {
            err << "gave up: best energy " << energy << " above floor " << *floor << '\n';
            return kGaveUp;
        }
        grid = c.decode(r.best);
    }

    const VerifyReport report = verify(f.problem, *grid);
    const std::string text = format_grid(f.problem, *grid);
    const std::string floor_text = floor ? floor->to_string() : std::string("unknown");
    if (fl.machine) {
        out << "status: " << (report.satisfied ? "solved" : "unverified") << '\n'
            << "family: " << to_string(family(f.problem)) << '\n'
            << "method: " << method << '\n'
            << "variables: " << n << '\n'
            << "energy: " << energy << '\n'
            << "floor: " << floor_text << '\n'
            << "verified: " << (report.satisfied ? "yes" : "no") << '\n'
            << "grid: " << one_line(text) << '\n';
    } else {
        out << text << "energy: " << energy << '\n' << "floor: " << floor_text << '\n';
        print_report(out, report);
    }
    if (!report.satisfied) {
        err << "gave up: the lowest-energy board breaks a rule\n";
        return kGaveUp;
    }
    return kOk;
}

int cmd_verify(const std::string& path, const std::string& solution, std::ostream& out, std::ostream& err) {
    const PuzzleFile f = load(path, err);
    const BinaryGrid g = parse_solution(f.problem, read_text_file(solution));
    const VerifyReport r = verify(f.problem, g);
    print_report(out, r);
    return r.satisfied ? kOk : kInfeasible;
}

int cmd_count(const std::string& path, std::size_t cap, std::ostream& out, std::ostream& err) {
    const PuzzleFile f = load(path, err);
    const Enumeration e = enumerate_solutions(f.problem, cap);
    out << "solutions: " << e.count << (e.truncated ? " (stopped at cap)" : "") << '\n';
    if (e.best_weight) out << "best weight: " << *e.best_weight << '\n';
    return kOk;
}

int cmd_export(const std::string& path, const std::string& output, std::ostream& out, std::ostream& err) {
    const PuzzleFile f = load(path, err);
    const std::string text = export_qubo(compile(f.problem).qubo);
    if (output.empty()) {
        out << text;
        return kOk;
    }
    std::ofstream file(output, std::ios::binary);
    if (!file) {
        err << "error: cannot write " << output << '\n';
        return kParseError;
    }
    file << text;
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Compile grid puzzles to QUBOs, solve and verify them", "qpz"};
    app.require_subcommand(1);
    std::string file, solution, output;
    std::size_t cap = 1000;
    SolveFlags fl;

    auto* build = app.add_subcommand("build", "Print variable and term counts");
    build->add_option("file", file, "Puzzle file")->required();
    auto* reduce = app.add_subcommand("reduce", "Print the preprocessing summary");
    reduce->add_option("file", file, "Puzzle file")->required();
    auto* solve = app.add_subcommand("solve", "Solve and verify");
    solve->add_option("file", file, "Puzzle file")->required();
    solve->add_option("--seed", fl.seed, "Annealer seed");
    solve->add_option("--restarts", fl.restarts, "Annealer restarts")->check(CLI::PositiveNumber);
    solve->add_option("--sweeps", fl.sweeps, "Sweeps per restart")->check(CLI::PositiveNumber);
    solve->add_flag("--parallel", fl.parallel, "Run restarts concurrently");
    solve->add_flag("--machine", fl.machine, "Key-value output");
    solve->add_option("--exhaustive-limit", fl.exhaustive_limit,
                      "Largest variable count searched exhaustively")
        ->check(CLI::Range(std::size_t{0}, kMaxExhaustiveVars));
    auto* verify_cmd = app.add_subcommand("verify", "Check a solution grid");
    verify_cmd->add_option("file", file, "Puzzle file")->required();
    verify_cmd->add_option("solution", solution, "Solution grid")->required();
    auto* count = app.add_subcommand("count", "Count solutions with the oracle");
    count->add_option("file", file, "Puzzle file")->required();
    count->add_option("--cap", cap, "Stop after this many solutions")->check(CLI::PositiveNumber);
    auto* exp = app.add_subcommand("export", "Write the QUBO text format");
    exp->add_option("file", file, "Puzzle file")->required();
    exp->add_option("-o,--output", output, "Output path (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }

    try {
        if (*build) return cmd_build(file, out, err);
        if (*reduce) return cmd_reduce(file, out, err);
        if (*solve) return cmd_solve(file, fl, out, err);
        if (*verify_cmd) return cmd_verify(file, solution, out, err);
        if (*count) return cmd_count(file, cap, out, err);
        if (*exp) return cmd_export(file, output, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const InfeasibleError& e) {
        err << "infeasible: " << e.what() << '\n';
        return kInfeasible;
    } catch (const StructuralError& e) {
        err << "invalid puzzle: " << e.what() << '\n';
        return kParseError;
    } catch (const std::invalid_argument& e) {
        err << "invalid puzzle: " << e.what() << '\n';
        return kParseError;
    }
    return kParseError;
}

}  // namespace qpz::cli
