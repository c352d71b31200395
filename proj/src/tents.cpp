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

#include <algorithm>
#include <numeric>
#include <set>

#include "penalty.hpp"
#include "qpz/error.hpp"
#include "qpz/queens.hpp"

namespace qpz {

namespace {

std::vector<CellRef> orthogonal_neighbours(const Board& b, CellRef c) {
    std::vector<CellRef> out;
    for (auto [dr, dc] : {std::pair{-1, 0}, {0, -1}, {0, 1}, {1, 0}}) {
        CellRef n{c.row + dr, c.col + dc};
        if (b.in_bounds(n)) out.push_back(n);
    }
    return out;
}

}  // namespace

Compiled build_tents_trees(const TentsTreesProblem& p) {
    Board b(p.rows, p.cols);
    if (p.row_counts.size() != static_cast<std::size_t>(p.rows) ||
        p.col_counts.size() != static_cast<std::size_t>(p.cols))
        throw StructuralError("tents needs one count per row and per column");
    auto negative = [](int v) { return v < 0; };
    if (std::any_of(p.row_counts.begin(), p.row_counts.end(), negative) ||
        std::any_of(p.col_counts.begin(), p.col_counts.end(), negative))
        throw StructuralError("tent counts must be nonnegative");
    if (std::accumulate(p.row_counts.begin(), p.row_counts.end(), 0) !=
        std::accumulate(p.col_counts.begin(), p.col_counts.end(), 0))
        throw StructuralError("inconsistent counts: row and column tent totals differ");

    std::set<CellRef> trees;
    for (CellRef t : p.trees) {
        if (!b.in_bounds(t)) throw StructuralError("tree " + to_string(t) + " outside the board");
        if (!trees.insert(t).second) throw StructuralError("duplicate tree at " + to_string(t));
    }

    VarMap vm(b);
    std::vector<std::uint8_t> near_tree(b.size(), 0);
    for (CellRef t : trees)
        for (CellRef n : orthogonal_neighbours(b, t)) near_tree[b.index(n)] = 1;
    for (CellRef c : b.active_cells()) {
        if (trees.contains(c))
            vm.fix(c, false, "tree");
        else if (!near_tree[b.index(c)])
            vm.fix(c, false, "region");
    }

    Qubo q(vm.num_free());
    for (int i = 1; i <= b.rows(); ++i) {
        std::vector<Literal> lits;
        for (int j = 1; j <= b.cols(); ++j) lits.push_back(vm.resolve({i, j}));
        q.add_square_penalty(QuarterInt::from_int(p.row_counts[i - 1]), lits);
    }
    for (int j = 1; j <= b.cols(); ++j) {
        std::vector<Literal> lits;
        for (int i = 1; i <= b.rows(); ++i) lits.push_back(vm.resolve({i, j}));
        q.add_square_penalty(QuarterInt::from_int(p.col_counts[j - 1]), lits);
    }
    for (CellRef c : b.active_cells())
        for (CellRef k : adjacency_cells(b, c, /*include_orthogonal=*/true, /*below_only=*/true))
            q.add_pair_interaction(vm.resolve(c), vm.resolve(k), QuarterInt::from_int(1));
    // 1 or 2 tents next to every tree: 3 or more would touch diagonally.
    for (CellRef t : trees) {
        std::vector<Literal> lits;
        for (CellRef n : orthogonal_neighbours(b, t)) lits.push_back(vm.resolve(n));
        detail::add_count_penalty(q, QuarterInt::from_halves(3), lits);
    }
    return Compiled{std::move(q), std::move(vm), FloorDescriptor{Family::tents, trees.size(), std::nullopt}};
}

}  // namespace qpz
