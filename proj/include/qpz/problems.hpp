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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qpz/board.hpp"

namespace qpz {

enum class Family { nqueens, lqueens, general_queens, tents, coloured_pieces, max_pieces, takuzu };

std::string_view to_string(Family f);
/// Accepts the puzzle-file spellings ("nqueens", "pieces-max", ...). Throws on unknown names.
Family family_from_string(std::string_view name);

// --- queens ----------------------------------------------------------------

enum class QueensKind { nqueens, lqueens, general };

/// Placement problem over a (possibly irregular, possibly wrapped) board.
///
/// Rows and columns with targets behave as extra regions with t = 0.
/// diag_distance holds d for every cell in row-major order: 0 disables the
/// diagonal rule at that cell, kUnbounded extends it to the board edge.
struct QueensProblem {
    QueensKind kind = QueensKind::general;
    Board board{1, 1};
    std::vector<Region> regions;
    std::vector<int> diag_distance;
    std::vector<CellRef> initial;
    std::optional<std::vector<int>> row_targets;
    std::optional<std::vector<int>> col_targets;

    int distance(CellRef c) const {
        return diag_distance.empty() ? 0 : diag_distance[board.index(c)];
    }
};

/// Classic N x N instance: one queen per row and column, full diagonals.
QueensProblem make_nqueens_problem(int n);
/// N x N instance with a queen in every line and region; only touching diagonals clash.
QueensProblem make_lqueens_problem(int n, std::vector<Region> regions,
                                   std::vector<CellRef> initial = {});

// --- tents & trees ---------------------------------------------------------

struct TentsTreesProblem {
    int rows = 1;
    int cols = 1;
    std::vector<CellRef> trees;
    std::vector<int> row_counts;
    std::vector<int> col_counts;
};

// --- chess pieces ----------------------------------------------------------

struct Offset {
    int dr;
    int dc;
};

/// Sliding move: up to `range` steps in direction (dr, dc).
struct Ray {
    int dr;
    int dc;
    int range = kUnbounded;
};

struct MovePattern {
    std::vector<Ray> rays;
    std::vector<Offset> jumps;
};

struct Piece {
    char symbol = '?';
    MovePattern moves;
    int weight = 1;

    static Piece queen();
    static Piece rook();
    static Piece bishop();
    static Piece knight();
    static Piece king();
    /// Q, R, B, N, K (case-insensitive).
    static std::optional<Piece> from_symbol(char c);
};

/// Piece type allowed at each cell, row-major.
struct PieceSpec {
    std::vector<Piece> cells;

    static PieceSpec uniform(const Board& b, const Piece& p) {
        return PieceSpec{std::vector<Piece>(b.size(), p)};
    }
    const Piece& at(const Board& b, CellRef c) const { return cells[b.index(c)]; }
};

enum class PiecesMode { coloured, max };

struct PiecesProblem {
    PiecesMode mode = PiecesMode::coloured;
    Board board{1, 1};
    PieceSpec pieces;
    /// Coloured mode only: each must hold exactly one piece. Must not overlap.
    std::vector<Region> regions;
    std::vector<CellRef> initial;
    /// Max mode only: threat multiplier; defaults to rows * cols.
    std::optional<long long> lambda;
};

// --- takuzu / tango --------------------------------------------------------

enum class SymbolKind { equal, cross };

/// '=' or 'x' between two cells; adjacency is not required.
struct Symbol {
    SymbolKind kind;
    CellRef a;
    CellRef b;
};

struct TakuzuRegion {
    std::string id;
    std::vector<CellRef> cells;
    int ones = 0;
};

struct TakuzuProblem {
    int rows = 2;
    int cols = 2;
    std::vector<CellRef> zeros;
    std::vector<CellRef> ones;
    std::vector<Symbol> symbols;
    /// Ones required per row / column; half the line length when absent.
    std::optional<std::vector<int>> row_ones;
    std::optional<std::vector<int>> col_ones;
    std::vector<TakuzuRegion> regions;
    bool diagonal_repetition = false;
    bool wrap_rows = false;
    bool wrap_cols = false;
    /// No two identical rows or columns (Takuzu); Tango drops it.
    bool unique_lines = true;

    /// Throws StructuralError for a balanced target on an odd-length line.
    int row_target(int row) const;
    int col_target(int col) const;
};

using Problem = std::variant<QueensProblem, TentsTreesProblem, PiecesProblem, TakuzuProblem>;

Family family(const Problem& p);

}  // namespace qpz
