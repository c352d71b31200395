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

#include "qpz/board.hpp"

#include <algorithm>

#include "qpz/error.hpp"

namespace qpz {

std::string to_string(CellRef c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

Board::Board(int rows, int cols, bool wrap_rows, bool wrap_cols)
    : Board(rows, cols, std::vector<std::uint8_t>(static_cast<std::size_t>(std::max(rows, 0)) *
                                                      static_cast<std::size_t>(std::max(cols, 0)),
                                                  1),
            wrap_rows, wrap_cols) {}

Board::Board(int rows, int cols, std::vector<std::uint8_t> active, bool wrap_rows, bool wrap_cols)
    : rows_(rows), cols_(cols), active_(std::move(active)), wrap_rows_(wrap_rows),
      wrap_cols_(wrap_cols) {
    if (rows < 1 || cols < 1) throw StructuralError("board dimensions must be positive");
    if (active_.size() != size()) throw StructuralError("active mask size does not match board");
    if (num_active() == 0) throw StructuralError("board has no active cell");
}

std::size_t Board::num_active() const {
    return static_cast<std::size_t>(std::count_if(active_.begin(), active_.end(),
                                                  [](std::uint8_t a) { return a != 0; }));
}

std::optional<CellRef> Board::normalize(int row, int col) const {
    auto wrap = [](int v, int n) { return ((v - 1) % n + n) % n + 1; };
    if (row < 1 || row > rows_) {
        if (!wrap_rows_) return std::nullopt;
        row = wrap(row, rows_);
    }
    if (col < 1 || col > cols_) {
        if (!wrap_cols_) return std::nullopt;
        col = wrap(col, cols_);
    }
    return CellRef{row, col};
}

void Board::set_active(CellRef c, bool on) {
    if (!in_bounds(c)) throw StructuralError("cell " + to_string(c) + " outside the board");
    active_[index(c)] = on ? 1 : 0;
}

std::vector<CellRef> Board::active_cells() const {
    std::vector<CellRef> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (active_[i]) out.push_back(cell(i));
    return out;
}

namespace {

void sort_unique(std::vector<CellRef>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<CellRef> ray_cells(const Board& board, CellRef cell, int dr, int dc, int distance) {
    std::vector<CellRef> out;
    // A cyclic walk is back at its start after at most rows*cols steps.
    const long long limit = std::min<long long>(distance, static_cast<long long>(board.size()));
    for (long long s = 1; s <= limit; ++s) {
        auto next = board.normalize(cell.row + static_cast<int>(s * dr),
                                    cell.col + static_cast<int>(s * dc));
        if (!next || *next == cell) break;
        if (board.is_active(*next)) out.push_back(*next);
    }
    return out;
}

std::vector<CellRef> diagonal_cells(const Board& board, CellRef cell, int distance,
                                    DiagonalMode mode) {
    std::vector<CellRef> out;
    if (distance >= 1) {
        for (int dr : {-1, 1})
            for (int dc : {-1, 1}) {
                auto ray = ray_cells(board, cell, dr, dc, distance);
                out.insert(out.end(), ray.begin(), ray.end());
            }
    }
    sort_unique(out);
    std::erase(out, cell);
    if (mode == DiagonalMode::full && board.is_active(cell)) {
        out.insert(std::lower_bound(out.begin(), out.end(), cell), cell);
    } else if (mode == DiagonalMode::later_only) {
        std::erase_if(out, [&](CellRef c) { return board.index(c) < board.index(cell); });
    }
    return out;
}

std::vector<CellRef> adjacency_cells(const Board& board, CellRef cell, bool include_orthogonal,
                                     bool below_only) {
    std::vector<CellRef> out;
    for (int dr = below_only ? 0 : -1; dr <= 1; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
            if (dr == 0 && dc == 0) continue;
            const bool orthogonal = dr == 0 || dc == 0;
            if (orthogonal && !include_orthogonal) continue;
            if (below_only && dr == 0 && dc < 0) continue;
            auto next = board.normalize(cell.row + dr, cell.col + dc);
            if (next && *next != cell && board.is_active(*next)) out.push_back(*next);
        }
    }
    sort_unique(out);
    return out;
}

// ---------------------------------------------------------------------------

std::string VarMap::Conflict::describe() const {
    if (a == b) return rule + " conflict at " + to_string(a);
    return rule + " conflict between " + to_string(a) + " and " + to_string(b);
}

VarMap::VarMap(const Board& board)
    : board_(board), parent_(board.size()), parity_(board.size(), 0),
      value_(board.size(), kUnfixed), var_of_(board.size(), 0) {
    for (std::size_t i = 0; i < parent_.size(); ++i) {
        parent_[i] = i;
        if (!board_.is_active(board_.cell(i))) value_[i] = 0;
    }
    renumber();
}

bool VarMap::key_less(std::size_t a, std::size_t b) const {
    CellRef ca = board_.cell(a), cb = board_.cell(b);
    return std::pair(ca.col, ca.row) < std::pair(cb.col, cb.row);
}

VarMap::Root VarMap::find(std::size_t i) const {
    bool p = false;
    while (parent_[i] != i) {
        p ^= parity_[i] != 0;
        i = parent_[i];
    }
    return {i, p};
}

VarMap::Root VarMap::find_compress(std::size_t i) {
    Root r = find(i);
    // Second pass: point every node on the path at the root with its total parity.
    bool p = r.parity;
    while (parent_[i] != i) {
        std::size_t next = parent_[i];
        bool next_p = p ^ (parity_[i] != 0);
        parent_[i] = r.index;
        parity_[i] = p ? 1 : 0;
        i = next;
        p = next_p;
    }
    return r;
}

bool VarMap::fix(CellRef cell, bool value, const std::string& rule) {
    if (!board_.in_bounds(cell)) throw StructuralError("cell " + to_string(cell) + " outside the board");
    if (conflict_) return false;
    Root r = find_compress(board_.index(cell));
    const std::int8_t root_value = (value ^ r.parity) ? 1 : 0;
    if (value_[r.index] != kUnfixed) {
        if (value_[r.index] != root_value) {
            conflict_ = Conflict{rule, cell, board_.cell(r.index)};
            return false;
        }
        return true;
    }
    value_[r.index] = root_value;
    renumber();
    return true;
}

bool VarMap::join(CellRef a, CellRef b, bool opposite, const std::string& rule) {
    for (CellRef c : {a, b})
        if (!board_.is_active(c))
            throw StructuralError("alias endpoint " + to_string(c) + " is not an active cell");
    if (a == b) throw StructuralError("alias endpoints must differ: " + to_string(a));
    if (conflict_) return false;

    Root ra = find_compress(board_.index(a));
    Root rb = find_compress(board_.index(b));
    const bool rel = opposite ^ ra.parity ^ rb.parity;  // value(ra) XOR value(rb)
    if (ra.index == rb.index) {
        if (rel) {
            conflict_ = Conflict{rule, a, b};
            return false;
        }
        return true;
    }
    const std::int8_t va = value_[ra.index], vb = value_[rb.index];
    if (va != kUnfixed && vb != kUnfixed && ((va ^ vb) != 0) != rel) {
        conflict_ = Conflict{rule, a, b};
        return false;
    }
    std::size_t winner = ra.index, loser = rb.index;
    if (key_less(loser, winner)) std::swap(winner, loser);
    parent_[loser] = winner;
    parity_[loser] = rel ? 1 : 0;
    if (value_[winner] == kUnfixed && value_[loser] != kUnfixed)
        value_[winner] = static_cast<std::int8_t>(value_[loser] ^ (rel ? 1 : 0));
    renumber();
    return true;
}

bool VarMap::alias_equal(CellRef a, CellRef b, const std::string& rule) {
    return join(a, b, false, rule);
}

bool VarMap::alias_cross(CellRef a, CellRef b, const std::string& rule) {
    return join(a, b, true, rule);
}

void VarMap::renumber() {
    free_cells_.clear();
    for (std::size_t i = 0; i < parent_.size(); ++i) {
        if (parent_[i] == i && value_[i] == kUnfixed) {
            var_of_[i] = free_cells_.size();
            free_cells_.push_back(board_.cell(i));
        }
    }
}

Literal VarMap::resolve(CellRef cell) const {
    if (conflict_) throw InfeasibleError(conflict_->rule, conflict_->describe());
    if (!board_.in_bounds(cell)) throw StructuralError("cell " + to_string(cell) + " outside the board");
    Root r = find(board_.index(cell));
    if (value_[r.index] != kUnfixed) return Literal::constant((value_[r.index] != 0) ^ r.parity);
    const std::size_t v = var_of_[r.index];
    return r.parity ? Literal::negated(v) : Literal::var(v);
}

std::optional<bool> VarMap::fixed_value(CellRef cell) const {
    Root r = find(board_.index(cell));
    if (value_[r.index] == kUnfixed) return std::nullopt;
    return (value_[r.index] != 0) ^ r.parity;
}

VarMap::State VarMap::state(CellRef cell) const {
    if (!board_.is_active(cell)) return State::inactive;
    const std::size_t i = board_.index(cell);
    Root r = find(i);
    if (value_[r.index] != kUnfixed) return State::fixed;
    return r.index == i ? State::free : State::aliased;
}

std::size_t VarMap::count(State s) const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i)
        if (state(board_.cell(i)) == s) ++n;
    return n;
}

BinaryGrid VarMap::decode(std::span<const std::uint8_t> x) const {
    if (x.size() != num_free())
        throw StructuralError("assignment has " + std::to_string(x.size()) + " bits, map has " +
                              std::to_string(num_free()) + " free variables");
    BinaryGrid g(board_.rows(), board_.cols());
    for (std::size_t i = 0; i < board_.size(); ++i)
        g.cells[i] = static_cast<std::uint8_t>(resolve(board_.cell(i)).value(x));
    return g;
}

std::optional<Assignment> VarMap::encode(const BinaryGrid& g) const {
    if (g.rows != board_.rows() || g.cols != board_.cols()) return std::nullopt;
    Assignment x(num_free());
    for (std::size_t v = 0; v < num_free(); ++v) x[v] = g.at(free_cells_[v]);
    if (decode(x) != g) return std::nullopt;
    return x;
}

}  // namespace qpz
