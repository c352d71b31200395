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

#include "qpz/error.hpp"
#include "qpz/oracle.hpp"

namespace qpz {

namespace {

BinaryGrid queens_at(int n, std::initializer_list<CellRef> cells) {
    BinaryGrid g(n, n);
    for (CellRef c : cells) g.at(c) = 1;
    return g;
}

bool mentions(const VerifyReport& r, const std::string& rule) {
    return std::any_of(r.violations.begin(), r.violations.end(),
                       [&](const Violation& v) { return v.constraint == rule; });
}

}  // namespace

TEST_CASE("verifier") {
    const Problem four = make_nqueens_problem(4);

    SECTION("a classic placement") {
        CHECK(verify(four, queens_at(4, {{1, 2}, {2, 4}, {3, 1}, {4, 3}})).satisfied);
    }

    SECTION("two queens on one diagonal") {
        const VerifyReport r = verify(four, queens_at(4, {{1, 1}, {2, 3}, {3, 4}, {4, 2}}));
        CHECK_FALSE(r.satisfied);
        REQUIRE(mentions(r, "diagonal"));
        const auto& v = *std::find_if(r.violations.begin(), r.violations.end(),
                                      [](const Violation& v) { return v.constraint == "diagonal"; });
        CHECK(v.cells == std::vector<CellRef>{{2, 3}, {3, 4}});
    }

    SECTION("row and column counts") {
        const VerifyReport r = verify(four, queens_at(4, {{1, 2}, {1, 4}}));
        CHECK(mentions(r, "row"));
        CHECK(mentions(r, "column"));
    }

    SECTION("wrong size") { CHECK_THROWS_AS(verify(four, BinaryGrid(3, 4)), StructuralError); }

    SECTION("tents need a tree each") {
        const TentsTreesProblem t{3, 3, {{1, 1}, {3, 3}}, {1, 0, 1}, {1, 0, 1}};
        BinaryGrid g(3, 3);
        g.at(CellRef{1, 3}) = 1;
        g.at(CellRef{3, 1}) = 1;
        const VerifyReport r = verify(t, g);
        CHECK_FALSE(r.satisfied);
        CHECK(mentions(r, "region"));
        BinaryGrid ok(3, 3);
        ok.at(CellRef{1, 2}) = 1;
        ok.at(CellRef{3, 2}) = 1;
        CHECK(mentions(verify(t, ok), "column"));
    }

    SECTION("piece threats") {
        PiecesProblem p;
        p.mode = PiecesMode::max;
        p.board = Board(3, 3);
        p.pieces = PieceSpec::uniform(p.board, Piece::knight());
        BinaryGrid g(3, 3);
        g.at(CellRef{1, 1}) = 1;
        g.at(CellRef{2, 3}) = 1;
        CHECK(mentions(verify(p, g), "threat"));
    }

    SECTION("takuzu symbols") {
        TakuzuProblem p;
        p.symbols = {{SymbolKind::equal, {1, 1}, {1, 2}}};
        BinaryGrid g(2, 2);
        g.at(CellRef{1, 1}) = 1;
        g.at(CellRef{2, 2}) = 1;
        CHECK(mentions(verify(p, g), "equal-symbol"));
    }
}

TEST_CASE("solution counts") {
    CHECK(enumerate_solutions(make_nqueens_problem(4), 100).count == 2);
    CHECK(enumerate_solutions(make_nqueens_problem(6), 100).count == 4);
    CHECK(enumerate_solutions(make_nqueens_problem(8), 1000).count == 92);

    const Enumeration capped = enumerate_solutions(make_nqueens_problem(8), 10);
    CHECK(capped.count == 10);
    CHECK(capped.truncated);
    CHECK(capped.solutions.size() == 10);

    TakuzuProblem two;
    CHECK(enumerate_solutions(two, 10).count == 2);
    TakuzuProblem six;
    six.rows = six.cols = 6;
    CHECK(enumerate_solutions(six, 1u << 20).count == 4140);
    six.unique_lines = false;
    CHECK(enumerate_solutions(six, 1u << 20).count == 11222);
}

}  // namespace qpz
