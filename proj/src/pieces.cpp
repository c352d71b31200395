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
#include <set>

#include "penalty.hpp"
#include "qpz/error.hpp"
#include "qpz/queens.hpp"

namespace qpz {

std::vector<CellRef> threat_cells(const PieceSpec& spec, const Board& board, CellRef cell) {
    const Piece& piece = spec.at(board, cell);
    std::vector<CellRef> out;
    for (const Ray& r : piece.moves.rays) {
        auto ray = ray_cells(board, cell, r.dr, r.dc, r.range);
        out.insert(out.end(), ray.begin(), ray.end());
    }
    for (const Offset& o : piece.moves.jumps) {
        auto n = board.normalize(cell.row + o.dr, cell.col + o.dc);
        if (n && *n != cell && board.is_active(*n)) out.push_back(*n);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// Placed pieces are fixed to 1; their regions and every cell in a threat
// relation with them (either direction) are fixed to 0.
VarMap propagate_pieces(const PiecesProblem& p, bool use_regions) {
    const Board& b = p.board;
    if (p.pieces.cells.size() != b.size())
        throw StructuralError("piece table must have one entry per cell");
    VarMap vm(b);
    const std::set<CellRef> placed(p.initial.begin(), p.initial.end());
    for (CellRef c : placed) {
        if (!b.is_active(c)) throw StructuralError("initial piece on inactive cell " + to_string(c));
        vm.fix(c, true, "initial");
    }
    if (use_regions) {
        for (const Region& r : p.regions) {
            if (std::none_of(r.cells.begin(), r.cells.end(),
                             [&](CellRef c) { return placed.contains(c); }))
                continue;
            for (CellRef c : r.cells)
                if (!placed.contains(c)) vm.fix(c, false, "region");
        }
    }
    const auto active = b.active_cells();
    for (CellRef c : placed) {
        for (CellRef k : threat_cells(p.pieces, b, c)) vm.fix(k, false, "threat");
        for (CellRef k : active) {
            if (k == c) continue;
            auto t = threat_cells(p.pieces, b, k);
            if (std::binary_search(t.begin(), t.end(), c)) vm.fix(k, false, "threat");
        }
    }
    if (vm.has_conflict())
        throw InfeasibleError(vm.conflict()->rule, vm.conflict()->describe());
    return vm;
}

void add_threat_terms(Qubo& q, const PiecesProblem& p, const VarMap& vm, QuarterInt weight) {
    for (CellRef c : p.board.active_cells())
        for (CellRef k : threat_cells(p.pieces, p.board, c))
            q.add_pair_interaction(vm.resolve(c), vm.resolve(k), weight);
}

}  // namespace

Compiled build_coloured_pieces(const PiecesProblem& p) {
    const Board& b = p.board;
    std::vector<std::uint8_t> seen(b.size(), 0);
    for (const Region& r : p.regions) {
        for (CellRef c : r.cells) {
            if (!b.is_active(c))
                throw StructuralError("region " + r.id + " contains inactive cell " + to_string(c));
            if (seen[b.index(c)]++)
                throw StructuralError("regions overlap at " + to_string(c));
        }
    }
    VarMap vm = propagate_pieces(p, /*use_regions=*/true);
    const std::set<CellRef> placed(p.initial.begin(), p.initial.end());

    Qubo q(vm.num_free());
    for (const Region& r : p.regions) {
        if (std::any_of(r.cells.begin(), r.cells.end(), [&](CellRef c) { return placed.contains(c); }))
            continue;
        std::vector<Literal> lits;
        for (CellRef c : r.cells) lits.push_back(vm.resolve(c));
        detail::add_count_penalty(q, QuarterInt::from_int(1), lits);
    }
    add_threat_terms(q, p, vm, QuarterInt::from_int(1));
    return Compiled{std::move(q), std::move(vm), FloorDescriptor{Family::coloured_pieces, 0, std::nullopt}};
}

Compiled build_max_pieces(const PiecesProblem& p, std::optional<long long> lambda) {
    const Board& b = p.board;
    if (p.pieces.cells.size() != b.size())
        throw StructuralError("piece table must have one entry per cell");
    int max_weight = 1;
    for (CellRef c : b.active_cells()) {
        const int w = p.pieces.at(b, c).weight;
        if (w < 1) throw StructuralError("piece weights must be positive");
        max_weight = std::max(max_weight, w);
    }
    // The board size is large enough for unit weights; tiny boards still need lambda > weight.
    const long long fallback = std::max<long long>(static_cast<long long>(b.size()), max_weight + 1);
    const long long lam = lambda.value_or(p.lambda.value_or(std::max<long long>(fallback, 2)));
    if (lam < 2 || lam <= max_weight)
        throw std::invalid_argument("lambda must be >= 2 and exceed every piece weight, got " +
                                    std::to_string(lam));

    VarMap vm = propagate_pieces(p, /*use_regions=*/false);
    Qubo q(vm.num_free());
    for (CellRef c : b.active_cells())
        q.add_linear_term(vm.resolve(c), QuarterInt::from_int(-p.pieces.at(b, c).weight));
    add_threat_terms(q, p, vm, QuarterInt::from_int(lam));
    return Compiled{std::move(q), std::move(vm), FloorDescriptor{Family::max_pieces, 0, std::nullopt}};
}

}  // namespace qpz
