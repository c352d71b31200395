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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qpz/cli.hpp"
#include "qpz/error.hpp"
#include "qpz/puzzle_file.hpp"
#include "qpz/qubo.hpp"

namespace qpz {

namespace {

namespace fs = std::filesystem;

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    const fs::path dir = fs::temp_directory_path() / "qpz-cli-tests";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    std::ofstream(p) << text;
    return p.string();
}

const char* kFour = "type: nqueens\nrows: 4\ncols: 4\ngrid:\n....\n....\n....\n....\n";

}  // namespace

TEST_CASE("puzzle parsing") {
    SECTION("four queens") {
        const PuzzleFile f = parse_puzzle(kFour);
        const auto& q = std::get<QueensProblem>(f.problem);
        CHECK(q.kind == QueensKind::nqueens);
        CHECK(q.board.rows() == 4);
        CHECK(q.board.num_active() == 16);
    }

    SECTION("one takuzu symbol") {
        const PuzzleFile f = parse_puzzle(
            "type: takuzu\nrows: 2\ncols: 2\ngrid:\n. .\n. .\nsymbols:\n= 1 1 1 2\n");
        const auto& t = std::get<TakuzuProblem>(f.problem);
        REQUIRE(t.symbols.size() == 1);
        CHECK(t.symbols[0].kind == SymbolKind::equal);
        CHECK(t.symbols[0].b == CellRef{1, 2});
    }

    SECTION("a short grid row names its line") {
        try {
            parse_puzzle("type: nqueens\nrows: 2\ncols: 2\ngrid:\n. .\n.\n");
            FAIL("no error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 6);
            CHECK(std::string(e.what()).find("line 6") != std::string::npos);
        }
    }

    SECTION("unknown keys and tokens") {
        CHECK_THROWS_AS(parse_puzzle("type: nqueens\nsize: 4\n"), ParseError);
        CHECK_THROWS_AS(parse_puzzle("type: chess\nrows: 1\ncols: 1\ngrid:\n.\n"), ParseError);
        CHECK_THROWS_AS(parse_puzzle("type: takuzu\nrows: 2\ncols: 2\ngrid:\n2 .\n. .\n"), ParseError);
        CHECK_THROWS_AS(parse_puzzle("type: nqueens\nrows: 2\ncols: 2\n"), ParseError);
        CHECK_THROWS_AS(parse_puzzle("type: tents\nrows: 1\ncols: 2\ngrid:\nT .\nlambda: 3\n"), ParseError);
        CHECK_THROWS_AS(parse_puzzle("type: nqueens\nrows: 2\ncols: 2\ngrid:\n..\n..\ninitial:\nQ 3 1\n"), ParseError);
    }

    SECTION("regions, counts and wrapping") {
        const PuzzleFile f = parse_puzzle(
            "type: general-queens\nrows: 3\ncols: 3\ngrid:\nA A B\nA . B\n# B B\n"
            "counts-rows: 1 1 0\ncounts-cols: 1 0 1\nregions:\nRB 1 1\nRz 0 1 2 2 3 2\n"
            "toroidal: rows\ndiagonal: 1\n");
        const auto& q = std::get<QueensProblem>(f.problem);
        REQUIRE(q.regions.size() == 3);
        CHECK(q.regions[1].id == "B");
        CHECK(q.regions[1].t == 1);
        CHECK(q.regions[2].cells == std::vector<CellRef>{{2, 2}, {3, 2}});
        CHECK_FALSE(q.board.is_active({3, 1}));
        CHECK(q.board.wrap_rows());
        CHECK(q.distance({1, 1}) == 1);
        CHECK(*q.row_targets == std::vector<int>{1, 1, 0});
    }

    SECTION("torus warning") {
        const PuzzleFile f = parse_puzzle(std::string(kFour) + "toroidal: both\n");
        CHECK(f.warnings.size() == 1);
    }

    SECTION("coloured pieces with region tags") {
        const PuzzleFile f = parse_puzzle("type: pieces-coloured\nrows: 2\ncols: 2\ngrid:\nRa Ra\nRb Rb\n");
        const auto& p = std::get<PiecesProblem>(f.problem);
        CHECK(p.regions.size() == 2);
        CHECK(p.pieces.at(p.board, {2, 2}).symbol == 'R');
    }

    SECTION("solution grids") {
        const Problem p = parse_puzzle(kFour).problem;
        const BinaryGrid g = parse_solution(p, ". Q . .\n. . . Q\nQ . . .\n. . Q .\n");
        CHECK(g.at(1, 2) == 1);
        CHECK(format_grid(p, g) == ". Q . .\n. . . Q\nQ . . .\n. . Q .\n");
        CHECK_THROWS_AS(parse_solution(p, "Q...\n"), ParseError);
    }
}

TEST_CASE("command line") {
    const std::string four = write_temp("four.txt", kFour);
    const std::string two = write_temp("two.txt", "type: nqueens\nrows: 2\ncols: 2\ngrid:\n..\n..\n");

    SECTION("solve four queens") {
        const Outcome o = run({"solve", four});
        CHECK(o.status == 0);
        CHECK(std::count(o.out.begin(), o.out.end(), 'Q') == 4);
        CHECK(o.out.find("energy: 0") != std::string::npos);
        CHECK(o.out.find("verifier: satisfied") != std::string::npos);
    }

    SECTION("machine output") {
        const Outcome o = run({"solve", four, "--machine", "--exhaustive-limit", "0", "--seed", "3"});
        CHECK(o.status == 0);
        CHECK(o.out.rfind("status: solved\nfamily: nqueens\nmethod: anneal\n", 0) == 0);
    }

    SECTION("two queens is infeasible") {
        const Outcome o = run({"solve", two});
        CHECK(o.status == 1);
        CHECK(o.err.find("infeasible: exhaustive minimum 1 > floor 0") != std::string::npos);
    }

    SECTION("reduce reports the bound") {
        const std::string tango = write_temp(
            "tango.txt",
            "type: takuzu\nrows: 6\ncols: 6\nunique-lines: off\ngrid:\n"
            "1 . . . . 0\n. . 1 . . .\n. . . . 0 .\n. 1 . . . .\n. . . 0 . .\n0 . . . . 1\n"
            "symbols:\nx 1 2 1 3\nx 2 4 2 5\nx 3 1 4 1\nx 4 5 5 5\n= 6 3 6 4\nx 3 6 4 6\n");
        const Outcome o = run({"reduce", tango});
        CHECK(o.status == 0);
        CHECK(o.out.find("bound: 22") != std::string::npos);
        const auto at = o.out.find("free: ");
        REQUIRE(at != std::string::npos);
        CHECK(std::stoi(o.out.substr(at + 6)) <= 36 - 8 - 6);
    }

    SECTION("verify, count and export") {
        const std::string good = write_temp("good.txt", ". Q . .\n. . . Q\nQ . . .\n. . Q .\n");
        const std::string bad = write_temp("bad.txt", "Q . . .\n. Q . .\n. . Q .\n. . . Q\n");
        CHECK(run({"verify", four, good}).status == 0);
        const Outcome b = run({"verify", four, bad});
        CHECK(b.status == 1);
        CHECK(b.out.find("diagonal") != std::string::npos);

        CHECK(run({"count", four}).out == "solutions: 2\n");

        const Outcome e = run({"export", four});
        CHECK(e.status == 0);
        CHECK(import_qubo(e.out).num_vars() == 16);
        const std::string path = (fs::temp_directory_path() / "qpz-cli-tests" / "four.qubo").string();
        CHECK(run({"export", four, "-o", path}).status == 0);
        std::ifstream in(path);
        std::stringstream ss;
        ss << in.rdbuf();
        CHECK(ss.str() == e.out);
    }

    SECTION("bad input gives status 2") {
        const std::string broken = write_temp("broken.txt", "type: nqueens\nrows: 2\ncols: 2\ngrid:\n. .\n.\n");
        const Outcome o = run({"build", broken});
        CHECK(o.status == 2);
        CHECK(o.err.find("line 6") != std::string::npos);
        CHECK(run({"frobnicate"}).status == 2);
        CHECK(run({"solve", "/nonexistent/puzzle.txt"}).status == 2);
    }
}

}  // namespace qpz
