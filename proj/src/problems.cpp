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

#include "qpz/problems.hpp"

#include <cctype>
#include <stdexcept>

#include "qpz/error.hpp"

namespace qpz {

namespace {

constexpr std::pair<Family, std::string_view> kFamilyNames[] = {
    {Family::nqueens, "nqueens"},
    {Family::lqueens, "lqueens"},
    {Family::general_queens, "general-queens"},
    {Family::tents, "tents"},
    {Family::coloured_pieces, "pieces-coloured"},
    {Family::max_pieces, "pieces-max"},
    {Family::takuzu, "takuzu"},
};

}  // namespace

std::string_view to_string(Family f) {
    for (const auto& [fam, name] : kFamilyNames)
        if (fam == f) return name;
    return "unknown";
}

Family family_from_string(std::string_view name) {
    for (const auto& [fam, n] : kFamilyNames)
        if (n == name) return fam;
    throw std::invalid_argument("unknown puzzle family '" + std::string(name) + "'");
}

QueensProblem make_nqueens_problem(int n) {
    QueensProblem p;
    p.kind = QueensKind::nqueens;
    p.board = Board(n, n);
    p.diag_distance.assign(p.board.size(), kUnbounded);
    p.row_targets = std::vector<int>(n, 1);
    p.col_targets = std::vector<int>(n, 1);
    return p;
}

QueensProblem make_lqueens_problem(int n, std::vector<Region> regions, std::vector<CellRef> initial) {
    QueensProblem p;
    p.kind = QueensKind::lqueens;
    p.board = Board(n, n);
    p.regions = std::move(regions);
    p.diag_distance.assign(p.board.size(), 1);
    p.initial = std::move(initial);
    p.row_targets = std::vector<int>(n, 1);
    p.col_targets = std::vector<int>(n, 1);
    return p;
}

Piece Piece::queen() {
    Piece p{'Q', {}, 1};
    for (int dr = -1; dr <= 1; ++dr)
        for (int dc = -1; dc <= 1; ++dc)
            if (dr != 0 || dc != 0) p.moves.rays.push_back({dr, dc, kUnbounded});
    return p;
}

Piece Piece::rook() {
    return Piece{'R', {{{-1, 0}, {1, 0}, {0, -1}, {0, 1}}, {}}, 1};
}

Piece Piece::bishop() {
    return Piece{'B', {{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}}, {}}, 1};
}

Piece Piece::knight() {
    return Piece{'N',
                 {{}, {{-2, -1}, {-2, 1}, {-1, -2}, {-1, 2}, {1, -2}, {1, 2}, {2, -1}, {2, 1}}},
                 1};
}

Piece Piece::king() {
    Piece p{'K', {}, 1};
    for (int dr = -1; dr <= 1; ++dr)
        for (int dc = -1; dc <= 1; ++dc)
            if (dr != 0 || dc != 0) p.moves.jumps.push_back({dr, dc});
    return p;
}

std::optional<Piece> Piece::from_symbol(char c) {
    switch (std::toupper(static_cast<unsigned char>(c))) {
        case 'Q': return queen();
        case 'R': return rook();
        case 'B': return bishop();
        case 'N': return knight();
        case 'K': return king();
        default: return std::nullopt;
    }
}

int TakuzuProblem::row_target(int row) const {
    if (row_ones) return (*row_ones).at(static_cast<std::size_t>(row - 1));
    if (cols % 2 != 0)
        throw StructuralError("balanced row target needs an even number of columns, got " +
                              std::to_string(cols));
    return cols / 2;
}

int TakuzuProblem::col_target(int col) const {
    if (col_ones) return (*col_ones).at(static_cast<std::size_t>(col - 1));
    if (rows % 2 != 0)
        throw StructuralError("balanced column target needs an even number of rows, got " +
                              std::to_string(rows));
    return rows / 2;
}

Family family(const Problem& p) {
    struct Visitor {
        Family operator()(const QueensProblem& q) const {
            switch (q.kind) {
                case QueensKind::nqueens: return Family::nqueens;
                case QueensKind::lqueens: return Family::lqueens;
                case QueensKind::general: return Family::general_queens;
            }
            return Family::general_queens;
        }
        Family operator()(const TentsTreesProblem&) const { return Family::tents; }
        Family operator()(const PiecesProblem& q) const {
            return q.mode == PiecesMode::max ? Family::max_pieces : Family::coloured_pieces;
        }
        Family operator()(const TakuzuProblem&) const { return Family::takuzu; }
    };
    return std::visit(Visitor{}, p);
}

}  // namespace qpz
