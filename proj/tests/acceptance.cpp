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

// Runs the nine acceptance checks and prints one PASS/FAIL line for each.
// Exits non-zero if any check fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "qpz/error.hpp"
#include "qpz/oracle.hpp"
#include "qpz/queens.hpp"
#include "qpz/solvers.hpp"
#include "qpz/takuzu.hpp"
#include "support.hpp"

namespace qpz {
namespace {

using testing::boards_at;
using testing::oracle_set;

struct Check {
    bool ok = true;
    std::ostringstream why;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) why << what;
        ok = ok && cond;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void nqueens_correctness(Check& c) {
    const Compiled four = build_nqueens(4);
    const SolveResult r = solve_exhaustive(four.qubo);
    c.expect(r.best_energy == QuarterInt{}, "4-queens minimum is " + r.best_energy.to_string());
    c.expect(r.optima.size() == 2, "4-queens has " + std::to_string(r.optima.size()) + " minimisers");
    std::set<BinaryGrid> minima;
    for (const Assignment& x : r.optima) minima.insert(four.decode(x));
    c.expect(minima == oracle_set(make_nqueens_problem(4)), "4-queens minimisers differ from the oracle");
    for (int n : {2, 3}) {
        const QuarterInt e = solve_exhaustive(build_nqueens(n).qubo).best_energy;
        c.expect(e > QuarterInt{}, std::to_string(n) + "-queens reaches zero");
    }
}

void eight_queens_anneal(Check& c) {
    const Compiled eight = build_nqueens(8);
    const Problem p = make_nqueens_problem(8);
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        AnnealParams params;
        params.seed = seed;
        const SolveResult r = solve_anneal(eight.qubo, params);
        if (r.best_energy != QuarterInt{}) continue;
        ++hits;
        c.expect(verify(p, eight.decode(r.best)).satisfied, "seed " + std::to_string(seed) + " optimum fails verify");
    }
    c.expect(hits >= 19, "only " + std::to_string(hits) + "/20 seeds reached zero");
}

void ttp_floor(Check& c) {
    TakuzuProblem four;
    four.rows = four.cols = 4;
    const Compiled c4 = compile_takuzu(four);
    c.expect(c4.qubo.num_vars() == 16, "4x4 has free-variable count " + std::to_string(c4.qubo.num_vars()));
    QuarterInt best = c4.qubo.energy(Assignment(16, 0));
    for (std::uint64_t m = 0; m < (1u << 16); ++m) best = std::min(best, c4.qubo.energy(testing::bits(m, 16)));
    c.expect(best == QuarterInt::from_int(4), "4x4 minimum is " + best.to_string());
    c.expect(solve_exhaustive(c4.qubo).best_energy == best, "Gray-code search disagrees on 4x4");

    TakuzuProblem two;
    const Compiled c2 = compile_takuzu(two);
    const SolveResult r2 = solve_exhaustive(c2.qubo);
    c.expect(r2.best_energy == QuarterInt{}, "2x2 minimum is " + r2.best_energy.to_string());
    BinaryGrid a(2, 2), b(2, 2);
    a.cells = {0, 1, 1, 0};
    b.cells = {1, 0, 0, 1};
    c.expect(boards_at(c2, QuarterInt{}) == std::set<BinaryGrid>{a, b}, "2x2 minima are not the two balanced boards");
}

void tents_floor(Check& c) {
    const std::vector<TentsTreesProblem> instances{
        {3, 3, {{2, 2}}, {0, 1, 0}, {1, 0, 0}},
        {3, 3, {{1, 1}, {2, 3}}, {0, 1, 1}, {1, 0, 1}},
        {4, 4, {{1, 2}, {3, 1}, {4, 4}}, {1, 1, 0, 1}, {1, 0, 2, 0}},
    };
    for (const TentsTreesProblem& p : instances) {
        const std::string tag = std::to_string(p.trees.size()) + " tree(s): ";
        const Compiled m = build_tents_trees(p);
        c.expect(m.qubo.num_vars() <= 16, tag + "too many free variables");
        const QuarterInt floor = QuarterInt::from_quarters(static_cast<std::int64_t>(p.trees.size()));
        c.expect(predicted_min_energy(m.floor) == floor, tag + "predicted floor differs");
        const SolveResult r = solve_exhaustive(m.qubo);
        c.expect(r.best_energy == floor, tag + "exhaustive minimum is " + r.best_energy.to_string());
        const auto oracle = oracle_set(p);
        c.expect(!oracle.empty(), tag + "instance has no solution");
        c.expect(boards_at(m, floor) == oracle, tag + "minimisers differ from the oracle");
    }
}

void variable_bound(Check& c) {
    std::mt19937_64 rng(2024);
    for (int k = 0; k < 20; ++k) {
        const BinaryGrid sol = testing::random_board(rng, 6, 6, false);
        const TakuzuProblem p = testing::carve(rng, sol, 8, 6, false);
        const std::string tag = "instance " + std::to_string(k) + ": ";
        c.expect(p.symbols.size() == 6, tag + "could not place six symbols");
        const VarMap vm = preprocess_takuzu(p);
        c.expect(static_cast<long long>(vm.num_free()) <= takuzu_variable_bound(p), tag + "bound exceeded");

        // Restate every deduction as givens and symbols; the solution set must not move.
        TakuzuProblem reduced = p;
        reduced.zeros.clear();
        reduced.ones.clear();
        reduced.symbols.clear();
        for (int r = 1; r <= 6; ++r)
            for (int col = 1; col <= 6; ++col) {
                const CellRef cell{r, col};
                const Literal lit = vm.resolve(cell);
                if (lit.is_constant()) {
                    (lit == Literal::constant(true) ? reduced.ones : reduced.zeros).push_back(cell);
                } else if (vm.free_cell(lit.index()) != cell) {
                    const bool opposite = lit.kind() == Literal::Kind::negated;
                    reduced.symbols.push_back({opposite ? SymbolKind::cross : SymbolKind::equal,
                                               vm.free_cell(lit.index()), cell});
                }
            }
        const auto before = oracle_set(p);
        c.expect(before.contains(sol), tag + "source board missing from the oracle set");
        c.expect(oracle_set(reduced) == before, tag + "preprocessing changed the solution set");
        for (const BinaryGrid& g : before) c.expect(vm.encode(g).has_value(), tag + "a solution is not encodable");
    }
}

void alias_equivalence(Check& c) {
    std::mt19937_64 rng(77);
    int made = 0;
    for (int attempt = 0; made < 20 && attempt < 2000; ++attempt) {
        const BinaryGrid sol = testing::random_board(rng, 6, 6, true);
        std::uniform_int_distribution<int> givens(12, 16);
        const TakuzuProblem p = testing::carve(rng, sol, givens(rng), 6, true);
        const Compiled aliased = compile_takuzu(p);
        const Compiled plain = compile_takuzu(p, {.alias_symbols = false});
        if (aliased.qubo.num_vars() > 16 || plain.qubo.num_vars() > 22) continue;
        ++made;
        const std::string tag = "instance " + std::to_string(made) + ": ";
        const SolveResult ra = solve_exhaustive(aliased.qubo, 1u << 16);
        const SolveResult rp = solve_exhaustive(plain.qubo, 1u << 16);
        c.expect(!ra.optima_truncated && !rp.optima_truncated, tag + "too many optima");
        c.expect(ra.best_energy == rp.best_energy, tag + "minimum energies differ");
        std::set<BinaryGrid> ba, bp;
        for (const Assignment& x : ra.optima) ba.insert(aliased.decode(x));
        for (const Assignment& x : rp.optima) bp.insert(plain.decode(x));
        c.expect(ba == bp, tag + "minimising boards differ");
        c.expect(ba.contains(sol), tag + "source board is not a minimiser");
    }
    c.expect(made == 20, "only generated " + std::to_string(made) + " instances");
}

void chess(Check& c) {
    auto uniform = [](PiecesMode mode, int n, const Piece& piece) {
        PiecesProblem p;
        p.mode = mode;
        p.board = Board(n, n);
        p.pieces = PieceSpec::uniform(p.board, piece);
        return p;
    };
    const QuarterInt rooks = solve_exhaustive(build_max_pieces(uniform(PiecesMode::max, 2, Piece::rook())).qubo).best_energy;
    c.expect(rooks == QuarterInt::from_int(-2), "2x2 rooks minimum is " + rooks.to_string());
    const QuarterInt knights = solve_exhaustive(build_max_pieces(uniform(PiecesMode::max, 3, Piece::knight())).qubo).best_energy;
    c.expect(knights == QuarterInt::from_int(-5), "3x3 knights minimum is " + knights.to_string());

    PiecesProblem two = uniform(PiecesMode::coloured, 2, Piece::rook());
    two.regions = {Region{"a", {{1, 1}, {1, 2}}, 1, 0, 0}, Region{"b", {{2, 1}, {2, 2}}, 1, 0, 0}};
    PiecesProblem mixed = uniform(PiecesMode::coloured, 3, Piece::knight());
    mixed.pieces.cells[mixed.board.index({1, 1})] = Piece::rook();
    mixed.pieces.cells[mixed.board.index({2, 2})] = Piece::rook();
    mixed.regions = {Region{"a", {{1, 1}, {1, 2}, {2, 1}}, 1, 0, 0},
                     Region{"b", {{1, 3}, {2, 2}, {2, 3}}, 1, 0, 0},
                     Region{"c", {{3, 1}, {3, 2}, {3, 3}}, 1, 0, 0}};
    PiecesProblem kings = uniform(PiecesMode::coloured, 4, Piece::king());
    kings.regions = {Region{"a", {{1, 1}, {1, 2}, {2, 1}, {2, 2}}, 1, 0, 0},
                     Region{"b", {{1, 3}, {1, 4}, {2, 3}, {2, 4}}, 1, 0, 0},
                     Region{"c", {{3, 1}, {3, 2}, {4, 1}, {4, 2}}, 1, 0, 0},
                     Region{"d", {{3, 3}, {3, 4}, {4, 3}, {4, 4}}, 1, 0, 0}};
    int k = 0;
    for (const PiecesProblem* p : {&two, &mixed, &kings}) {
        ++k;
        c.expect(qubo_oracle_agreement(*p), "coloured instance " + std::to_string(k) + " disagrees with the oracle");
    }
}

void expansion_soundness(Check& c) {
    std::mt19937_64 rng(1);
    for (int k = 0; k < 200; ++k) {
        const std::size_t n = 1 + k % 6;
        const testing::SymbolicPenalty t = testing::random_penalty(rng, n);
        Qubo q(n);
        q.add_square_penalty(t.target, t.literals, t.weight);
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
            const Assignment x = testing::bits(m, n);
            if (q.energy(x) != t.value(x)) {
                c.expect(false, "penalty " + std::to_string(k) + " mismatches at mask " + std::to_string(m));
                break;
            }
        }
    }
    const Qubo q = build_nqueens(6).qubo;
    std::uniform_int_distribution<std::size_t> pick(0, q.num_vars() - 1);
    Assignment x(q.num_vars(), 0);
    FlipState s(q, x);
    for (int f = 0; f < 10000; ++f) {
        const std::size_t i = pick(rng);
        const std::int64_t predicted = s.energy() + s.delta(i);
        s.flip(i);
        x[i] ^= 1U;
        if (s.energy() != predicted || q.energy(x).numerator() != predicted) {
            c.expect(false, "delta mismatch at flip " + std::to_string(f));
            break;
        }
    }
}

void serialization(Check& c) {
    std::mt19937_64 rng(99);
    for (int k = 0; k < 50; ++k) {
        const Qubo q = testing::random_qubo(rng);
        const std::string text = export_qubo(q);
        const Qubo back = import_qubo(text);
        c.expect(back == q, "model " + std::to_string(k) + " changed");
        c.expect(export_qubo(back) == text, "model " + std::to_string(k) + " text changed");
    }
}

struct Criterion {
    const char* name;
    double budget_seconds;
    std::function<void(Check&)> run;
};

}  // namespace
}  // namespace qpz

int main() {
    using namespace qpz;
    const Criterion all[] = {
        {"n-queens correctness", 5, nqueens_correctness},
        {"8-queens annealing", 30, eight_queens_anneal},
        {"takuzu energy floor", 60, ttp_floor},
        {"tents and trees floor", 0, tents_floor},
        {"variable-reduction bound", 0, variable_bound},
        {"alias equivalence", 0, alias_equivalence},
        {"chess problems", 10, chess},
        {"expansion soundness", 0, expansion_soundness},
        {"serialization round trip", 0, serialization},
    };
    int failed = 0;
    int index = 0;
    for (const Criterion& crit : all) {
        ++index;
        Check c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            crit.run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const double took = seconds_since(t0);
        if (crit.budget_seconds > 0 && took > crit.budget_seconds)
            c.expect(false, "over the time budget");
        failed += !c.ok;
        std::printf("AC%d %s  %s (%.2f s)%s%s\n", index, c.ok ? "PASS" : "FAIL", crit.name, took,
                    c.ok ? "" : ": ", c.why.str().c_str());
    }
    return failed == 0 ? 0 : 1;
}
