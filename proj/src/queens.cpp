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

#include "qpz/queens.hpp"

#include <algorithm>
#include <set>

#include "penalty.hpp"
#include "qpz/error.hpp"

namespace qpz {

namespace {

void validate(const QueensProblem& p) {
    const Board& b = p.board;
    if (!p.diag_distance.empty() && p.diag_distance.size() != b.size())
        throw StructuralError("diagonal distance table must have one entry per cell");
    if (p.row_targets && p.row_targets->size() != static_cast<std::size_t>(b.rows()))
        throw StructuralError("row targets must have one entry per row");
    if (p.col_targets && p.col_targets->size() != static_cast<std::size_t>(b.cols()))
        throw StructuralError("column targets must have one entry per column");
    auto nonneg = [](const std::optional<std::vector<int>>& v) {
        return !v || std::all_of(v->begin(), v->end(), [](int x) { return x >= 0; });
    };
    if (!nonneg(p.row_targets) || !nonneg(p.col_targets))
        throw StructuralError("row/column targets must be nonnegative");
    for (const Region& r : p.regions) {
        if (r.q < 0 || (r.t != 0 && r.t != 1))
            throw StructuralError("region " + r.id + " needs q >= 0 and t in {0,1}");
        for (CellRef c : r.cells)
            if (!b.is_active(c))
                throw StructuralError("region " + r.id + " contains inactive cell " + to_string(c));
    }
    for (CellRef c : p.initial)
        if (!b.is_active(c)) throw StructuralError("initial queen on inactive cell " + to_string(c));
}

void throw_if_conflict(const VarMap& vm) {
    if (vm.has_conflict())
        throw InfeasibleError(vm.conflict()->rule, vm.conflict()->describe());
}

std::vector<CellRef> row_cells(const Board& b, int row) {
    std::vector<CellRef> out;
    for (int c = 1; c <= b.cols(); ++c)
        if (b.is_active({row, c})) out.push_back({row, c});
    return out;
}

std::vector<CellRef> col_cells(const Board& b, int col) {
    std::vector<CellRef> out;
    for (int r = 1; r <= b.rows(); ++r)
        if (b.is_active({r, col})) out.push_back({r, col});
    return out;
}

// Zeroes every cell of a group once its remaining capacity is used up.
void saturate(VarMap& vm, const std::vector<CellRef>& cells, const std::set<CellRef>& placed,
              const std::string& rule) {
    for (CellRef c : cells)
        if (!placed.contains(c)) vm.fix(c, false, rule);
}

std::vector<Literal> free_literals(const VarMap& vm, const std::vector<CellRef>& cells) {
    std::vector<Literal> lits;
    for (CellRef c : cells)
        if (!vm.is_fixed(c)) lits.push_back(vm.resolve(c));
    return lits;
}

}  // namespace

QueensPropagation propagate_queen_initials(const QueensProblem& p) {
    validate(p);
    const Board& b = p.board;
    QueensPropagation out{VarMap(b), p};
    VarMap& vm = out.vars;
    const std::set<CellRef> placed(p.initial.begin(), p.initial.end());

    for (CellRef c : placed) vm.fix(c, true, "initial");

    auto count_in = [&](const std::vector<CellRef>& cells) {
        return static_cast<int>(std::count_if(cells.begin(), cells.end(),
                                              [&](CellRef c) { return placed.contains(c); }));
    };

    if (out.adjusted.row_targets) {
        for (int i = 1; i <= b.rows(); ++i) {
            auto cells = row_cells(b, i);
            int& target = (*out.adjusted.row_targets)[i - 1];
            target -= count_in(cells);
            if (target < 0)
                throw InfeasibleError("row", "row " + std::to_string(i) +
                                                 " holds more initial queens than allowed");
            if (target == 0) saturate(vm, cells, placed, "row");
        }
    }
    if (out.adjusted.col_targets) {
        for (int j = 1; j <= b.cols(); ++j) {
            auto cells = col_cells(b, j);
            int& target = (*out.adjusted.col_targets)[j - 1];
            target -= count_in(cells);
            if (target < 0)
                throw InfeasibleError("column", "column " + std::to_string(j) +
                                                    " holds more initial queens than allowed");
            if (target == 0) saturate(vm, cells, placed, "column");
        }
    }
    for (Region& r : out.adjusted.regions) {
        r.p = count_in(r.cells);
        if (r.p > r.q + r.t)
            throw InfeasibleError("region", "region " + r.id +
                                                " holds more initial queens than allowed");
        if (r.p == r.q + r.t) saturate(vm, r.cells, placed, "region");
    }

    if (!p.diag_distance.empty()) {
        const auto active = b.active_cells();
        for (CellRef c : placed) {
            for (CellRef k : diagonal_cells(b, c, p.distance(c), DiagonalMode::all_but_self))
                vm.fix(k, false, "diagonal");
            // Cells whose own diagonal reach covers the placed queen.
            for (CellRef k : active) {
                if (k == c || p.distance(k) == 0) continue;
                auto reach = diagonal_cells(b, k, p.distance(k), DiagonalMode::all_but_self);
                if (std::binary_search(reach.begin(), reach.end(), c)) vm.fix(k, false, "diagonal");
            }
        }
    }
    throw_if_conflict(vm);
    return out;
}

Compiled build_nqueens(int n) {
    if (n < 1) throw StructuralError("N-queens needs N >= 1");
    Board b(n, n);
    VarMap vm(b);
    Qubo q(vm.num_free());
    for (int i = 1; i <= n; ++i) {
        std::vector<Literal> row, col;
        for (int j = 1; j <= n; ++j) {
            row.push_back(vm.resolve({i, j}));
            col.push_back(vm.resolve({j, i}));
        }
        q.add_square_penalty(QuarterInt::from_int(1), row);
        q.add_square_penalty(QuarterInt::from_int(1), col);
    }
    // Diagonal pairs counted once: partner strictly below (the last row has none).
    for (int i = 1; i < n; ++i)
        for (int j = 1; j <= n; ++j)
            for (CellRef k : diagonal_cells(b, {i, j}, kUnbounded, DiagonalMode::later_only))
                q.add_pair_interaction(vm.resolve({i, j}), vm.resolve(k), QuarterInt::from_int(1));
    return Compiled{std::move(q), std::move(vm), FloorDescriptor{Family::nqueens, 0, std::nullopt}};
}

Compiled build_lqueens(const QueensProblem& in, const LQueensOptions& opts) {
    const Board& b = in.board;
    const int n = b.rows();
    if (b.cols() != n) throw StructuralError("LQueens needs a square board");
    if (in.regions.size() != static_cast<std::size_t>(n))
        throw StructuralError("region cover invalid: LQueens needs exactly " + std::to_string(n) +
                              " regions, got " + std::to_string(in.regions.size()));
    std::vector<int> owner(b.size(), -1);
    for (std::size_t k = 0; k < in.regions.size(); ++k) {
        for (CellRef c : in.regions[k].cells) {
            if (!b.is_active(c))
                throw StructuralError("region cover invalid: inactive cell " + to_string(c));
            if (owner[b.index(c)] != -1)
                throw StructuralError("region cover invalid: cell " + to_string(c) +
                                      " in two regions");
            owner[b.index(c)] = static_cast<int>(k);
        }
    }
    for (CellRef c : b.active_cells())
        if (owner[b.index(c)] == -1)
            throw StructuralError("region cover invalid: cell " + to_string(c) + " in no region");

    QueensProblem p = in;
    p.kind = QueensKind::lqueens;
    p.diag_distance.assign(b.size(), 1);
    if (!p.row_targets) p.row_targets = std::vector<int>(n, 1);
    if (!p.col_targets) p.col_targets = std::vector<int>(n, 1);
    for (Region& r : p.regions) {
        r.q = 1;
        r.t = 0;
    }

    auto [vm, adj] = propagate_queen_initials(p);
    Qubo q(vm.num_free());

    auto add_group = [&](const std::vector<CellRef>& cells, int remaining) {
        auto lits = free_literals(vm, cells);
        if (lits.empty() && remaining == 0) return;
        detail::add_count_penalty(q, QuarterInt::from_int(remaining), lits);
    };
    for (int i = 1; i <= n; ++i) add_group(row_cells(b, i), (*adj.row_targets)[i - 1]);
    for (int j = 1; j <= n; ++j) add_group(col_cells(b, j), (*adj.col_targets)[j - 1]);

    for (CellRef c : b.active_cells()) {
        if (vm.is_fixed(c)) continue;
        for (CellRef k : diagonal_cells(b, c, 1, DiagonalMode::later_only))
            if (!vm.is_fixed(k))
                q.add_pair_interaction(vm.resolve(c), vm.resolve(k), QuarterInt::from_int(1));
    }

    std::vector<std::size_t> candidates;
    for (std::size_t k = 0; k < adj.regions.size(); ++k)
        if (!free_literals(vm, adj.regions[k].cells).empty()) candidates.push_back(k);
    std::optional<std::size_t> dropped;
    if (opts.drop_region && !candidates.empty()) {
        dropped = opts.dropped_region.value_or(candidates.back());
        if (std::find(candidates.begin(), candidates.end(), *dropped) == candidates.end())
            throw StructuralError("dropped region must still contain a free cell");
    }
    for (std::size_t k = 0; k < adj.regions.size(); ++k) {
        if (dropped && k == *dropped) continue;
        const Region& r = adj.regions[k];
        add_group(r.cells, r.q - r.p);
    }
    return Compiled{std::move(q), std::move(vm), FloorDescriptor{Family::lqueens, 0, std::nullopt}};
}

Compiled build_general_queens(const QueensProblem& p, const GeneralQueensOptions& opts) {
    auto [vm, adj] = propagate_queen_initials(p);
    const Board& b = p.board;
    Qubo q(vm.num_free());
    std::size_t half_terms = 0;

    auto add_region = [&](const std::vector<CellRef>& cells, int count, int t, int placed) {
        const int remaining = count - placed;
        if (remaining + t == 0) return;  // saturated: every cell already fixed to 0
        auto lits = free_literals(vm, cells);
        if (opts.pairwise_soft_regions && t == 1 && remaining == 0) {
            for (std::size_t a = 0; a < lits.size(); ++a)
                for (std::size_t c = 0; c < lits.size(); ++c)
                    if (a != c) q.add_pair_interaction(lits[a], lits[c], QuarterInt::from_int(1));
            return;
        }
        detail::add_count_penalty(q, QuarterInt::from_halves(2 * remaining + t), lits);
        if (t == 1) ++half_terms;
    };

    for (const Region& r : adj.regions) add_region(r.cells, r.q, r.t, r.p);
    if (adj.row_targets)
        for (int i = 1; i <= b.rows(); ++i) add_region(row_cells(b, i), (*adj.row_targets)[i - 1], 0, 0);
    if (adj.col_targets)
        for (int j = 1; j <= b.cols(); ++j) add_region(col_cells(b, j), (*adj.col_targets)[j - 1], 0, 0);

    // Every (cell, neighbour) pair, so symmetric pairs are counted twice.
    for (CellRef c : b.active_cells()) {
        const int d = p.distance(c);
        if (d == 0) continue;
        for (CellRef k : diagonal_cells(b, c, d, DiagonalMode::all_but_self))
            q.add_pair_interaction(vm.resolve(c), vm.resolve(k), QuarterInt::from_int(1));
    }
    return Compiled{std::move(q), std::move(vm), FloorDescriptor{Family::general_queens, half_terms, std::nullopt}};
}

}  // namespace qpz
