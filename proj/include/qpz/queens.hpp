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

#pragma once

#include <optional>
#include <vector>

#include "qpz/model.hpp"
#include "qpz/problems.hpp"

namespace qpz {

// --- queens ----------------------------------------------------------------

struct QueensPropagation {
    VarMap vars;
    /// Row/column targets reduced by placed queens; region p set to the placed count.
    QueensProblem adjusted;
};

/// Fixes pre-placed queens to 1 and every cell they rule out to 0.
/// Throws InfeasibleError when the placed queens already violate a constraint.
QueensPropagation propagate_queen_initials(const QueensProblem& p);

/// One queen per row and column, no two on any diagonal; N^2 variables.
Compiled build_nqueens(int n);

struct LQueensOptions {
    /// Leave one region out of the region term; it is implied by the others.
    bool drop_region = true;
    /// Index into p.regions of the region to leave out. Defaults to the last
    /// region that still has a free cell.
    std::optional<std::size_t> dropped_region;
};

/// Square board with a queen in every line and region; only touching diagonals clash.
Compiled build_lqueens(const QueensProblem& p, const LQueensOptions& opts = {});

struct GeneralQueensOptions {
    /// Encode soft regions with target {0, 1} as pairwise exclusions instead
    /// of the (1/2 - sum)^2 term.
    bool pairwise_soft_regions = false;
};

/// One square penalty per region (rows/columns with targets included) plus a
/// pair term for every (cell, diagonal neighbour within the cell's distance).
Compiled build_general_queens(const QueensProblem& p, const GeneralQueensOptions& opts = {});

// --- tents & trees ---------------------------------------------------------

Compiled build_tents_trees(const TentsTreesProblem& p);

// --- chess pieces ----------------------------------------------------------

/// Cells attacked from `cell` by its piece, ignoring blocking.
std::vector<CellRef> threat_cells(const PieceSpec& spec, const Board& board, CellRef cell);

Compiled build_coloured_pieces(const PiecesProblem& p);
/// Minimise -sum(weight * x) + lambda * (threat pairs). lambda must exceed
/// every piece weight (>= 2 for unit weights); defaults to rows * cols.
Compiled build_max_pieces(const PiecesProblem& p, std::optional<long long> lambda = {});

}  // namespace qpz
