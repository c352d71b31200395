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

#include "qpz/compile.hpp"

#include "qpz/queens.hpp"
#include "qpz/takuzu.hpp"

namespace qpz {

namespace {

// A bare square board with no givens, which the dedicated builder handles.
bool plain(const QueensProblem& p) {
    const Board& b = p.board;
    return p.initial.empty() && !b.wrap_rows() && !b.wrap_cols() && b.rows() == b.cols() &&
           b.num_active() == b.size();
}

struct Dispatch {
    Compiled operator()(const QueensProblem& p) const {
        switch (p.kind) {
            case QueensKind::nqueens:
                if (plain(p)) return build_nqueens(p.board.rows());
                return build_general_queens(p);
            case QueensKind::lqueens:
                return build_lqueens(p);
            case QueensKind::general:
                break;
        }
        return build_general_queens(p);
    }
    Compiled operator()(const TentsTreesProblem& p) const { return build_tents_trees(p); }
    Compiled operator()(const PiecesProblem& p) const {
        return p.mode == PiecesMode::max ? build_max_pieces(p) : build_coloured_pieces(p);
    }
    Compiled operator()(const TakuzuProblem& p) const { return compile_takuzu(p); }
};

}  // namespace

Compiled compile(const Problem& p) { return std::visit(Dispatch{}, p); }

}  // namespace qpz
