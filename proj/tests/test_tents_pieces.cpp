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

#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "qpz/error.hpp"
#include "qpz/oracle.hpp"
#include "qpz/queens.hpp"
#include "support.hpp"

namespace qpz {

using testing::boards_at;
using testing::oracle_set;

TEST_CASE("Tents and Trees model") {
    SECTION("one tree in the centre") {
        const TentsTreesProblem p{3, 3, {{2, 2}}, {0, 1, 0}, {1, 0, 0}};
        const Compiled c = build_tents_trees(p);
        const QuarterInt floor = predicted_min_energy(c.floor);
        CHECK(floor == QuarterInt::from_quarters(1));
        CHECK(solve_exhaustive(c.qubo).best_energy == floor);
        CHECK(boards_at(c, floor) == oracle_set(p));
    }

    SECTION("two trees") {
        const TentsTreesProblem p{3, 3, {{1, 1}, {2, 3}}, {0, 1, 1}, {1, 0, 1}};
        const Compiled c = build_tents_trees(p);
        CHECK(predicted_min_energy(c.floor) == QuarterInt::from_halves(1));
        CHECK(qubo_oracle_agreement(p));
    }

    SECTION("touching tents cost at least one more") {
        const TentsTreesProblem p{3, 3, {{1, 1}, {2, 3}}, {0, 1, 1}, {1, 0, 1}};
        const Compiled c = build_tents_trees(p);
        BinaryGrid g(3, 3);
        g.at(CellRef{1, 2}) = 1;
        g.at(CellRef{2, 1}) = 1;
        const auto x = c.vars.encode(g);
        REQUIRE(x);
        CHECK(c.qubo.energy(*x) >= predicted_min_energy(c.floor) + QuarterInt::from_int(1));
    }

    SECTION("trees and far cells are not variables") {
        const TentsTreesProblem p{3, 3, {{1, 1}}, {1, 0, 0}, {0, 1, 0}};
        const Compiled c = build_tents_trees(p);
        CHECK(c.qubo.num_vars() == 2);
    }

    SECTION("bad input") {
        CHECK_THROWS_AS(build_tents_trees({2, 2, {{1, 1}}, {1, 0}, {0, 0}}), StructuralError);
        CHECK_THROWS_AS(build_tents_trees({2, 2, {{1, 1}, {1, 1}}, {1, 1}, {1, 1}}), StructuralError);
        CHECK_THROWS_AS(build_tents_trees({2, 2, {{3, 1}}, {1, 0}, {1, 0}}), StructuralError);
        CHECK_THROWS_AS(build_tents_trees({2, 2, {{1, 1}}, {1}, {1, 0}}), StructuralError);
    }
}

TEST_CASE("piece threats") {
    const Board b(3, 3);
    auto threats = [&](const Piece& piece, CellRef c) {
        const auto v = threat_cells(PieceSpec::uniform(b, piece), b, c);
        return std::set<CellRef>(v.begin(), v.end());
    };
    CHECK(threats(Piece::knight(), {1, 1}) == std::set<CellRef>{{2, 3}, {3, 2}});
    CHECK(threats(Piece::rook(), {2, 2}) == std::set<CellRef>{{1, 2}, {3, 2}, {2, 1}, {2, 3}});
    CHECK(threats(Piece::king(), {2, 2}).size() == 8);
    CHECK(threats(Piece::knight(), {2, 2}).empty());
    CHECK(threats(Piece::bishop(), {1, 1}) == std::set<CellRef>{{2, 2}, {3, 3}});
    CHECK(threats(Piece::queen(), {1, 1}).size() == 6);
}

TEST_CASE("coloured pieces") {
    SECTION("two regions of rooks") {
        PiecesProblem p;
        p.board = Board(2, 2);
        p.pieces = PieceSpec::uniform(p.board, Piece::rook());
        p.regions = {Region{"a", {{1, 1}, {1, 2}}, 1, 0, 0}, Region{"b", {{2, 1}, {2, 2}}, 1, 0, 0}};
        const Compiled c = build_coloured_pieces(p);
        const auto zero = boards_at(c, QuarterInt{});
        CHECK(zero.size() == 2);
        CHECK(zero == oracle_set(p));
    }

    SECTION("a pre-filled region drops out") {
        PiecesProblem p;
        p.board = Board(2, 2);
        p.pieces = PieceSpec::uniform(p.board, Piece::rook());
        p.regions = {Region{"a", {{1, 1}, {1, 2}}, 1, 0, 0}, Region{"b", {{2, 1}, {2, 2}}, 1, 0, 0}};
        p.initial = {{1, 1}};
        const Compiled c = build_coloured_pieces(p);
        CHECK(c.qubo.num_vars() == 1);
        CHECK(c.vars.resolve({2, 2}) == Literal::var(0));
        CHECK(qubo_oracle_agreement(p));
    }

    SECTION("mixed knights and rooks with a unique answer") {
        PiecesProblem p;
        p.board = Board(3, 3);
        p.pieces = PieceSpec::uniform(p.board, Piece::knight());
        p.pieces.cells[p.board.index({2, 2})] = Piece::rook();
        p.pieces.cells[p.board.index({1, 1})] = Piece::rook();
        p.regions = {Region{"a", {{1, 1}, {1, 2}, {2, 1}}, 1, 0, 0},
                     Region{"b", {{1, 3}, {2, 2}, {2, 3}}, 1, 0, 0},
                     Region{"c", {{3, 1}, {3, 2}, {3, 3}}, 1, 0, 0}};
        const Enumeration e = enumerate_solutions(p, 100);
        CHECK(qubo_oracle_agreement(p));
        for (const BinaryGrid& g : e.solutions) {
            const Compiled c = build_coloured_pieces(p);
            const auto x = c.vars.encode(g);
            REQUIRE(x);
            CHECK(c.qubo.energy(*x) == QuarterInt{});
        }
    }
}

TEST_CASE("max pieces") {
    auto uniform = [](int rows, int cols, const Piece& piece) {
        PiecesProblem p;
        p.mode = PiecesMode::max;
        p.board = Board(rows, cols);
        p.pieces = PieceSpec::uniform(p.board, piece);
        return p;
    };

    CHECK(solve_exhaustive(build_max_pieces(uniform(2, 2, Piece::rook()), 4).qubo).best_energy ==
          QuarterInt::from_int(-2));
    CHECK(solve_exhaustive(build_max_pieces(uniform(1, 1, Piece::queen())).qubo).best_energy ==
          QuarterInt::from_int(-1));
    CHECK(solve_exhaustive(build_max_pieces(uniform(3, 3, Piece::knight()), 9).qubo).best_energy ==
          QuarterInt::from_int(-5));

    CHECK(enumerate_solutions(uniform(3, 3, Piece::knight()), 10).best_weight == 5);
    CHECK(enumerate_solutions(uniform(2, 2, Piece::rook()), 10).count == 2);
    CHECK(qubo_oracle_agreement(uniform(2, 2, Piece::rook())));
    CHECK(qubo_oracle_agreement(uniform(3, 3, Piece::king())));
    CHECK(qubo_oracle_agreement(uniform(4, 4, Piece::queen())));

    CHECK_THROWS_AS(build_max_pieces(uniform(2, 2, Piece::rook()), 1), std::invalid_argument);
}

}  // namespace qpz
