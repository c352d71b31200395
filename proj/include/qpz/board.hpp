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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "qpz/qubo.hpp"

namespace qpz {

/// 1-based (row, col) coordinate.
struct CellRef {
    int row = 1;
    int col = 1;
    friend constexpr auto operator<=>(const CellRef&, const CellRef&) = default;
};

std::string to_string(CellRef c);

/// Distance value meaning "as far as the board reaches".
inline constexpr int kUnbounded = std::numeric_limits<int>::max();

/// Rectangular grid with an active-cell mask and optional wraparound.
///
/// wrap_rows makes the row index cyclic (leaving the bottom re-enters at the
/// top); wrap_cols makes the column index cyclic. Both set is a torus.
class Board {
 public:
    Board(int rows, int cols, bool wrap_rows = false, bool wrap_cols = false);
    Board(int rows, int cols, std::vector<std::uint8_t> active, bool wrap_rows = false,
          bool wrap_cols = false);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool wrap_rows() const { return wrap_rows_; }
    bool wrap_cols() const { return wrap_cols_; }
    std::size_t size() const { return static_cast<std::size_t>(rows_) * cols_; }

    bool in_bounds(CellRef c) const {
        return c.row >= 1 && c.row <= rows_ && c.col >= 1 && c.col <= cols_;
    }
    bool is_active(CellRef c) const { return in_bounds(c) && active_[index(c)] != 0; }
    std::size_t num_active() const;

    /// Row-major position, 0-based.
    std::size_t index(CellRef c) const {
        return static_cast<std::size_t>(c.row - 1) * cols_ + (c.col - 1);
    }
    CellRef cell(std::size_t index) const {
        return {static_cast<int>(index / cols_) + 1, static_cast<int>(index % cols_) + 1};
    }

    /// Wraps coordinates along cyclic axes; nullopt when the cell leaves a
    /// non-cyclic axis.
    std::optional<CellRef> normalize(int row, int col) const;

    void set_active(CellRef c, bool on);
    std::vector<CellRef> active_cells() const;

 private:
    int rows_;
    int cols_;
    std::vector<std::uint8_t> active_;
    bool wrap_rows_;
    bool wrap_cols_;
};

/// Cell set with a required count. t == 1 relaxes the count to {q, q + 1};
/// p counts pieces already placed inside it.
struct Region {
    std::string id;
    std::vector<CellRef> cells;
    int q = 1;
    int t = 0;
    int p = 0;
};

enum class DiagonalMode {
    full,          ///< all diagonal cells within distance, including the cell itself
    later_only,    ///< only cells later in row-major order; each unordered pair once
    all_but_self,  ///< all diagonal cells within distance except the cell
};

/// Active cells on the four diagonals of `cell` within `distance` steps.
std::vector<CellRef> diagonal_cells(const Board& board, CellRef cell, int distance,
                                    DiagonalMode mode);

/// Active cells visited walking from `cell` in direction (dr, dc) for up to
/// `distance` steps; stops when a cyclic walk returns to its start.
std::vector<CellRef> ray_cells(const Board& board, CellRef cell, int dr, int dc, int distance);

/// 8-neighbourhood (4 diagonal neighbours only when !include_orthogonal).
/// below_only keeps the right neighbour and the three cells of the next row,
/// so summing over all cells counts each unordered adjacent pair once.
std::vector<CellRef> adjacency_cells(const Board& board, CellRef cell, bool include_orthogonal,
                                     bool below_only);

/// Fully valued board, row-major.
struct BinaryGrid {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> cells;

    BinaryGrid() = default;
    BinaryGrid(int r, int c) : rows(r), cols(c), cells(static_cast<std::size_t>(r) * c, 0) {}

    std::uint8_t at(CellRef c) const { return cells[static_cast<std::size_t>(c.row - 1) * cols + (c.col - 1)]; }
    std::uint8_t& at(CellRef c) { return cells[static_cast<std::size_t>(c.row - 1) * cols + (c.col - 1)]; }
    std::uint8_t at(int r, int c) const { return at(CellRef{r, c}); }

    friend auto operator<=>(const BinaryGrid&, const BinaryGrid&) = default;
};

/// Per-cell resolution of board cells onto optimisation variables.
///
/// Cells are joined by equal/opposite parity links in a union-find. The root
/// of a class is its leftmost cell (then topmost); a root is either free or
/// fixed to a constant. Inactive cells are fixed to 0.
class VarMap {
 public:
    enum class State { free, fixed, aliased, inactive };

    struct Conflict {
        std::string rule;
        CellRef a;
        CellRef b;
        std::string describe() const;
    };

    explicit VarMap(const Board& board);

    const Board& board() const { return board_; }

    /// Fixes a cell (and everything aliased to it). Returns false and records a
    /// conflict if the class already holds the opposite value.
    bool fix(CellRef cell, bool value, const std::string& rule = "fixed");
    bool alias_equal(CellRef a, CellRef b, const std::string& rule = "equal-symbol");
    bool alias_cross(CellRef a, CellRef b, const std::string& rule = "cross-symbol");

    bool has_conflict() const { return conflict_.has_value(); }
    const std::optional<Conflict>& conflict() const { return conflict_; }

    /// Throws InfeasibleError when a conflict is recorded.
    Literal resolve(CellRef cell) const;
    State state(CellRef cell) const;
    /// Value if the cell's class is fixed.
    std::optional<bool> fixed_value(CellRef cell) const;
    bool is_fixed(CellRef cell) const { return fixed_value(cell).has_value(); }

    std::size_t num_free() const { return free_cells_.size(); }
    std::size_t count(State s) const;
    /// Cell backing free variable i.
    CellRef free_cell(std::size_t i) const { return free_cells_[i]; }

    /// Expands an assignment over the free variables to the whole board.
    BinaryGrid decode(std::span<const std::uint8_t> x) const;
    /// Inverse of decode on boards consistent with the map; nullopt otherwise.
    std::optional<Assignment> encode(const BinaryGrid& g) const;

 private:
    struct Root {
        std::size_t index;
        bool parity;  // value(cell) == value(root) XOR parity
    };
    static constexpr std::int8_t kUnfixed = -1;

    Root find(std::size_t i) const;
    Root find_compress(std::size_t i);
    bool join(CellRef a, CellRef b, bool opposite, const std::string& rule);
    void renumber();
    bool key_less(std::size_t a, std::size_t b) const;

    Board board_;
    std::vector<std::size_t> parent_;
    std::vector<std::uint8_t> parity_;
    std::vector<std::int8_t> value_;  // only meaningful at roots
    std::vector<std::size_t> var_of_;  // only meaningful at free roots
    std::vector<CellRef> free_cells_;
    std::optional<Conflict> conflict_;
};

}  // namespace qpz
