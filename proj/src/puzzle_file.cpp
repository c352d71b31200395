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

#include "qpz/puzzle_file.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "qpz/error.hpp"

namespace qpz {

namespace {

struct Token {
    std::string text;
    int column;
};

struct Line {
    int number;
    std::vector<Token> tokens;
};

struct Section {
    Line header;
    std::vector<Token> values;  // tokens after the key on the same line
    std::vector<Line> body;
};

const std::set<std::string> kKeys{"type",   "rows",         "cols",         "grid",
                                  "initial", "symbols",     "counts-rows",  "counts-cols",
                                  "regions", "toroidal",    "lambda",       "diagonal",
                                  "unique-lines"};
const std::set<std::string> kBlockKeys{"grid", "initial", "symbols", "regions"};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        Line line{number, {}};
        for (std::size_t i = 0; i < raw.size();) {
            if (std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
                continue;
            }
            if (raw[i] == ';') break;
            std::size_t j = i;
            while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j])) && raw[j] != ';') ++j;
            line.tokens.push_back({std::string(raw.substr(i, j - i)), static_cast<int>(i) + 1});
            i = j;
        }
        if (!line.tokens.empty()) out.push_back(std::move(line));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

bool looks_like_key(const std::string& t) {
    if (t.size() < 2 || t.back() != ':') return false;
    return std::all_of(t.begin(), t.end() - 1,
                       [](char c) { return std::islower(static_cast<unsigned char>(c)) || c == '-'; });
}

std::map<std::string, Section> sectionize(const std::vector<Line>& lines) {
    std::map<std::string, Section> out;
    Section* current = nullptr;
    std::string current_key;
    for (const Line& line : lines) {
        const Token& first = line.tokens.front();
        if (looks_like_key(first.text)) {
            std::string key = first.text.substr(0, first.text.size() - 1);
            if (!kKeys.contains(key)) throw ParseError(line.number, first.column, "unknown key '" + key + "'");
            if (out.contains(key)) throw ParseError(line.number, first.column, "duplicate key '" + key + "'");
            Section s{line, {line.tokens.begin() + 1, line.tokens.end()}, {}};
            if (kBlockKeys.contains(key) && !s.values.empty())
                throw ParseError(line.number, s.values.front().column,
                                 "'" + key + ":' takes its entries on the following lines");
            current = &out.emplace(key, std::move(s)).first->second;
            current_key = key;
            continue;
        }
        if (!current) throw ParseError(line.number, first.column, "expected a 'key:' line");
        if (!kBlockKeys.contains(current_key))
            throw ParseError(line.number, first.column, "unexpected line after '" + current_key + ":'");
        current->body.push_back(line);
    }
    return out;
}

int to_int(const Token& t, int line) {
    int v = 0;
    const char* b = t.text.data();
    const char* e = b + t.text.size();
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc{} || ptr != e) throw ParseError(line, t.column, "expected an integer, found '" + t.text + "'");
    return v;
}

const Token& single_value(const Section& s, const std::string& key) {
    if (s.values.size() != 1) {
        const int col = s.values.empty() ? s.header.tokens.front().column : s.values[1].column;
        throw ParseError(s.header.number, col, "'" + key + ":' takes exactly one value");
    }
    return s.values.front();
}

class Reader {
 public:
    explicit Reader(std::map<std::string, Section> sections) : s_(std::move(sections)) {}

    bool has(const std::string& key) const { return s_.contains(key); }
    const Section& at(const std::string& key) const { return s_.at(key); }

    const Section& require(const std::string& key) const {
        auto it = s_.find(key);
        if (it == s_.end()) throw ParseError(0, 0, "missing required key '" + key + ":'");
        return it->second;
    }

    void reject(const std::string& key, std::string_view type) const {
        if (has(key)) {
            const Token& t = at(key).header.tokens.front();
            throw ParseError(at(key).header.number, t.column,
                             "key '" + key + "' does not apply to " + std::string(type));
        }
    }

    int positive(const std::string& key) const {
        const Section& s = require(key);
        const Token& t = single_value(s, key);
        const int v = to_int(t, s.header.number);
        if (v < 1) throw ParseError(s.header.number, t.column, "'" + key + ":' must be positive");
        return v;
    }

 private:
    std::map<std::string, Section> s_;
};

struct Grid {
    std::vector<std::vector<Token>> cells;  // row-major, rows x cols
    std::vector<int> line_of_row;
};

std::vector<Token> row_tokens(const Line& line, int cols) {
    if (line.tokens.size() == 1 && cols > 1 && static_cast<int>(line.tokens[0].text.size()) == cols) {
        std::vector<Token> out;
        const Token& t = line.tokens[0];
        for (int k = 0; k < cols; ++k) out.push_back({std::string(1, t.text[k]), t.column + k});
        return out;
    }
    if (static_cast<int>(line.tokens.size()) != cols) {
        const int col = static_cast<int>(line.tokens.size()) > cols ? line.tokens[cols].column
                                                                    : line.tokens.back().column;
        throw ParseError(line.number, col,
                         "expected " + std::to_string(cols) + " tokens, found " +
                             std::to_string(line.tokens.size()));
    }
    return line.tokens;
}

Grid read_grid(const Section& s, int rows, int cols) {
    if (static_cast<int>(s.body.size()) != rows) {
        const int line = s.body.size() > static_cast<std::size_t>(rows) ? s.body[rows].number : s.header.number;
        throw ParseError(line, 1,
                         "grid has " + std::to_string(s.body.size()) + " rows, expected " + std::to_string(rows));
    }
    Grid g;
    for (const Line& l : s.body) {
        g.cells.push_back(row_tokens(l, cols));
        g.line_of_row.push_back(l.number);
    }
    return g;
}

CellRef read_cell(const Line& l, std::size_t k, int rows, int cols) {
    if (k + 1 >= l.tokens.size()) {
        throw ParseError(l.number, l.tokens.back().column, "expected a row and a column");
    }
    const int r = to_int(l.tokens[k], l.number);
    const int c = to_int(l.tokens[k + 1], l.number);
    if (r < 1 || r > rows) throw ParseError(l.number, l.tokens[k].column, "row " + std::to_string(r) + " is off the board");
    if (c < 1 || c > cols) throw ParseError(l.number, l.tokens[k + 1].column, "column " + std::to_string(c) + " is off the board");
    return {r, c};
}

std::vector<int> read_counts(const Reader& rd, const std::string& key, int n) {
    const Section& s = rd.at(key);
    if (static_cast<int>(s.values.size()) != n)
        throw ParseError(s.header.number, s.header.tokens.front().column,
                         "'" + key + ":' needs " + std::to_string(n) + " values");
    std::vector<int> out;
    for (const Token& t : s.values) {
        const int v = to_int(t, s.header.number);
        if (v < 0) throw ParseError(s.header.number, t.column, "counts must be nonnegative");
        out.push_back(v);
    }
    return out;
}

std::pair<bool, bool> read_toroidal(const Reader& rd) {
    if (!rd.has("toroidal")) return {false, false};
    const Section& s = rd.at("toroidal");
    const Token& t = single_value(s, "toroidal");
    if (t.text == "none") return {false, false};
    if (t.text == "rows") return {true, false};
    if (t.text == "cols") return {false, true};
    if (t.text == "both") return {true, true};
    throw ParseError(s.header.number, t.column, "toroidal must be none, rows, cols or both");
}

bool read_switch(const Reader& rd, const std::string& key, bool fallback) {
    if (!rd.has(key)) return fallback;
    const Section& s = rd.at(key);
    const Token& t = single_value(s, key);
    if (t.text == "on" || t.text == "yes" || t.text == "true") return true;
    if (t.text == "off" || t.text == "no" || t.text == "false") return false;
    throw ParseError(s.header.number, t.column, "'" + key + ":' must be on or off");
}

int smallest_prime_factor(int n) {
    for (int f = 2; f * f <= n; ++f)
        if (n % f == 0) return f;
    return n;
}

// Region letters in first-seen order; '.' and '#' belong to none.
std::vector<Region> letter_regions(const Grid& g, const std::function<std::optional<std::string>(const Token&)>& id_of) {
    std::vector<Region> out;
    std::map<std::string, std::size_t> index;
    for (std::size_t r = 0; r < g.cells.size(); ++r)
        for (std::size_t c = 0; c < g.cells[r].size(); ++c) {
            auto id = id_of(g.cells[r][c]);
            if (!id) continue;
            auto [it, fresh] = index.emplace(*id, out.size());
            if (fresh) out.push_back(Region{*id, {}, 1, 0, 0});
            out[it->second].cells.push_back({static_cast<int>(r) + 1, static_cast<int>(c) + 1});
        }
    return out;
}

[[noreturn]] void bad_token(const Grid& g, std::size_t r, std::size_t c, const std::string& allowed) {
    const Token& t = g.cells[r][c];
    throw ParseError(g.line_of_row[r], t.column, "unexpected grid token '" + t.text + "', expected " + allowed);
}

std::vector<std::uint8_t> read_mask(const Grid& g) {
    std::vector<std::uint8_t> active;
    for (const auto& row : g.cells)
        for (const Token& t : row) active.push_back(t.text != "#");
    return active;
}

void apply_region_lines(const Reader& rd, std::vector<Region>& regions, int rows, int cols, bool allow_t) {
    if (!rd.has("regions")) return;
    for (const Line& l : rd.at("regions").body) {
        const Token& head = l.tokens.front();
        if (head.text.size() < 2 || head.text[0] != 'R')
            throw ParseError(l.number, head.column, "region lines start with R<id>");
        if (l.tokens.size() < 3) throw ParseError(l.number, head.column, "expected R<id> q t");
        const std::string id = head.text.substr(1);
        const int q = to_int(l.tokens[1], l.number);
        const int t = to_int(l.tokens[2], l.number);
        if (q < 0) throw ParseError(l.number, l.tokens[1].column, "q must be nonnegative");
        if (t != 0 && t != 1) throw ParseError(l.number, l.tokens[2].column, "t must be 0 or 1");
        if (t == 1 && !allow_t) throw ParseError(l.number, l.tokens[2].column, "t must be 0 here");
        if ((l.tokens.size() - 3) % 2 != 0)
            throw ParseError(l.number, l.tokens.back().column, "cells come in row/column pairs");
        std::vector<CellRef> cells;
        for (std::size_t k = 3; k < l.tokens.size(); k += 2) cells.push_back(read_cell(l, k, rows, cols));
        auto it = std::find_if(regions.begin(), regions.end(), [&](const Region& r) { return r.id == id; });
        if (cells.empty()) {
            if (it == regions.end())
                throw ParseError(l.number, head.column, "region '" + id + "' has no cells in the grid");
            it->q = q;
            it->t = t;
        } else {
            if (it != regions.end()) throw ParseError(l.number, head.column, "region '" + id + "' defined twice");
            regions.push_back(Region{id, std::move(cells), q, t, 0});
        }
    }
}

std::vector<int> read_distances(const Reader& rd, const Board& b, int fallback) {
    int d = fallback;
    if (rd.has("diagonal")) {
        const Section& s = rd.at("diagonal");
        const Token& t = single_value(s, "diagonal");
        if (t.text == "full") d = kUnbounded;
        else if (t.text == "none") d = 0;
        else {
            d = to_int(t, s.header.number);
            if (d < 0) throw ParseError(s.header.number, t.column, "diagonal distance must be nonnegative");
        }
    }
    return std::vector<int>(b.size(), d);
}

std::vector<CellRef> read_initial(const Reader& rd, const std::string& letters, int rows, int cols,
                                  std::vector<char>* kinds = nullptr) {
    std::vector<CellRef> out;
    if (!rd.has("initial")) return out;
    for (const Line& l : rd.at("initial").body) {
        const Token& head = l.tokens.front();
        if (head.text.size() != 1 || letters.find(head.text[0]) == std::string::npos)
            throw ParseError(l.number, head.column, "initial entries start with one of '" + letters + "'");
        if (l.tokens.size() != 3) throw ParseError(l.number, head.column, "expected <token> <row> <col>");
        out.push_back(read_cell(l, 1, rows, cols));
        if (kinds) kinds->push_back(head.text[0]);
    }
    return out;
}

Problem build_queens(const Reader& rd, Family fam, int rows, int cols, const Grid& g, std::vector<std::string>& warn) {
    const auto [wr, wc] = read_toroidal(rd);
    rd.reject("symbols", "queens");
    rd.reject("lambda", "queens");
    rd.reject("unique-lines", "queens");
    const std::string name(to_string(fam));
    if (fam != Family::general_queens) {
        if (rows != cols) throw ParseError(rd.at("cols").header.number, 1, name + " boards must be square");
        rd.reject("counts-rows", name);
        rd.reject("counts-cols", name);
        rd.reject("diagonal", name);
    }
    QueensProblem p;
    std::vector<Region> regions;
    for (std::size_t r = 0; r < g.cells.size(); ++r)
        for (std::size_t c = 0; c < g.cells[r].size(); ++c) {
            const std::string& t = g.cells[r][c].text;
            const bool letter = t.size() == 1 && std::isalpha(static_cast<unsigned char>(t[0]));
            if (fam == Family::nqueens && t != "." && t != "#") bad_token(g, r, c, "'.' or '#'");
            if (fam == Family::lqueens && !letter && t != "#") bad_token(g, r, c, "a region letter or '#'");
            if (fam == Family::general_queens && !letter && t != "." && t != "#")
                bad_token(g, r, c, "a region letter, '.' or '#'");
        }
    auto id_of = [](const Token& t) -> std::optional<std::string> {
        if (t.text == "." || t.text == "#") return std::nullopt;
        return t.text;
    };
    const auto initial = read_initial(rd, "Q", rows, cols);
    if (fam == Family::nqueens) {
        rd.reject("regions", name);
        p = make_nqueens_problem(rows);
    } else if (fam == Family::lqueens) {
        rd.reject("regions", name);
        p = make_lqueens_problem(rows, letter_regions(g, id_of));
    } else {
        p.kind = QueensKind::general;
        p.regions = letter_regions(g, id_of);
        apply_region_lines(rd, p.regions, rows, cols, true);
        p.row_targets = rd.has("counts-rows") ? read_counts(rd, "counts-rows", rows) : std::vector<int>(rows, 1);
        p.col_targets = rd.has("counts-cols") ? read_counts(rd, "counts-cols", cols) : std::vector<int>(cols, 1);
    }
    p.board = Board(rows, cols, read_mask(g), wr, wc);
    if (fam == Family::general_queens) p.diag_distance = read_distances(rd, p.board, kUnbounded);
    p.initial = initial;
    if (wr && wc && rows == cols && rows > 1 && smallest_prime_factor(rows) < 5 &&
        p.distance({1, 1}) == kUnbounded)
        warn.push_back("toroidal queens board of size " + std::to_string(rows) +
                       " has a prime factor below 5; it is expected to have no solution");
    return p;
}

Problem build_tents(const Reader& rd, int rows, int cols, const Grid& g) {
    for (const std::string k : {"initial", "symbols", "regions", "toroidal", "lambda", "diagonal", "unique-lines"})
        rd.reject(k, "tents");
    TentsTreesProblem p;
    p.rows = rows;
    p.cols = cols;
    for (std::size_t r = 0; r < g.cells.size(); ++r)
        for (std::size_t c = 0; c < g.cells[r].size(); ++c) {
            const std::string& t = g.cells[r][c].text;
            if (t == "T") p.trees.push_back({static_cast<int>(r) + 1, static_cast<int>(c) + 1});
            else if (t != ".") bad_token(g, r, c, "'T' or '.'");
        }
    rd.require("counts-rows");
    rd.require("counts-cols");
    p.row_counts = read_counts(rd, "counts-rows", rows);
    p.col_counts = read_counts(rd, "counts-cols", cols);
    return p;
}

Problem build_pieces(const Reader& rd, Family fam, int rows, int cols, const Grid& g) {
    const std::string name(to_string(fam));
    for (const std::string k : {"symbols", "counts-rows", "counts-cols", "diagonal", "unique-lines"}) rd.reject(k, name);
    const bool coloured = fam == Family::coloured_pieces;
    if (coloured) rd.reject("lambda", name);
    else rd.reject("regions", name);
    const auto [wr, wc] = read_toroidal(rd);
    PiecesProblem p;
    p.mode = coloured ? PiecesMode::coloured : PiecesMode::max;
    p.board = Board(rows, cols, read_mask(g), wr, wc);
    p.pieces.cells.assign(p.board.size(), Piece::queen());
    for (std::size_t r = 0; r < g.cells.size(); ++r)
        for (std::size_t c = 0; c < g.cells[r].size(); ++c) {
            const std::string& t = g.cells[r][c].text;
            if (t == "#") continue;
            const std::size_t width = coloured ? 2 : 1;
            auto piece = t.empty() ? std::nullopt : Piece::from_symbol(t[0]);
            if (!piece || t.size() > width || (coloured && t.size() == 2 && !std::isalnum(static_cast<unsigned char>(t[1]))))
                bad_token(g, r, c, coloured ? "a piece letter with an optional region tag, or '#'" : "a piece letter or '#'");
            p.pieces.cells[r * cols + c] = *piece;
        }
    if (coloured) {
        p.regions = letter_regions(g, [](const Token& t) -> std::optional<std::string> {
            if (t.text.size() != 2) return std::nullopt;
            return t.text.substr(1);
        });
        apply_region_lines(rd, p.regions, rows, cols, false);
        for (const Region& r : p.regions)
            if (r.q != 1) throw ParseError(rd.has("regions") ? rd.at("regions").header.number : 0, 0,
                                           "coloured regions hold exactly one piece");
    }
    std::vector<char> kinds;
    p.initial = read_initial(rd, "QRBNK", rows, cols, &kinds);
    for (std::size_t k = 0; k < p.initial.size(); ++k) {
        const CellRef c = p.initial[k];
        if (p.board.is_active(c) && p.pieces.at(p.board, c).symbol != kinds[k])
            throw ParseError(rd.at("initial").body[k].number, 1,
                             "initial piece does not match the grid at " + to_string(c));
    }
    if (rd.has("lambda")) {
        const Section& s = rd.at("lambda");
        const Token& t = single_value(s, "lambda");
        p.lambda = to_int(t, s.header.number);
    }
    return p;
}

Problem build_takuzu(const Reader& rd, int rows, int cols, const Grid& g) {
    rd.reject("lambda", "takuzu");
    TakuzuProblem p;
    p.rows = rows;
    p.cols = cols;
    for (std::size_t r = 0; r < g.cells.size(); ++r)
        for (std::size_t c = 0; c < g.cells[r].size(); ++c) {
            const std::string& t = g.cells[r][c].text;
            const CellRef cell{static_cast<int>(r) + 1, static_cast<int>(c) + 1};
            if (t == "0") p.zeros.push_back(cell);
            else if (t == "1") p.ones.push_back(cell);
            else if (t != ".") bad_token(g, r, c, "'0', '1' or '.'");
        }
    std::vector<char> kinds;
    const auto extra = read_initial(rd, "01", rows, cols, &kinds);
    for (std::size_t k = 0; k < extra.size(); ++k) (kinds[k] == '1' ? p.ones : p.zeros).push_back(extra[k]);
    if (rd.has("symbols"))
        for (const Line& l : rd.at("symbols").body) {
            const Token& head = l.tokens.front();
            if (head.text != "=" && head.text != "x")
                throw ParseError(l.number, head.column, "symbols start with '=' or 'x'");
            if (l.tokens.size() != 5) throw ParseError(l.number, head.column, "expected <sym> r1 c1 r2 c2");
            Symbol s{head.text == "=" ? SymbolKind::equal : SymbolKind::cross, read_cell(l, 1, rows, cols),
                     read_cell(l, 3, rows, cols)};
            if (s.a == s.b) throw ParseError(l.number, l.tokens[3].column, "a symbol needs two distinct cells");
            p.symbols.push_back(s);
        }
    if (rd.has("counts-rows")) p.row_ones = read_counts(rd, "counts-rows", rows);
    if (rd.has("counts-cols")) p.col_ones = read_counts(rd, "counts-cols", cols);
    std::vector<Region> regions;
    apply_region_lines(rd, regions, rows, cols, false);
    for (Region& r : regions) p.regions.push_back({r.id, std::move(r.cells), r.q});
    std::tie(p.wrap_rows, p.wrap_cols) = read_toroidal(rd);
    p.diagonal_repetition = read_switch(rd, "diagonal", false);
    p.unique_lines = read_switch(rd, "unique-lines", true);
    return p;
}

int dim_rows(const Problem& p) {
    return std::visit([](const auto& q) {
        using T = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<T, QueensProblem> || std::is_same_v<T, PiecesProblem>) return q.board.rows();
        else return q.rows;
    }, p);
}

int dim_cols(const Problem& p) {
    return std::visit([](const auto& q) {
        using T = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<T, QueensProblem> || std::is_same_v<T, PiecesProblem>) return q.board.cols();
        else return q.cols;
    }, p);
}

}  // namespace

PuzzleFile parse_puzzle(std::string_view text) {
    Reader rd(sectionize(split_lines(text)));
    const Section& ts = rd.require("type");
    const Token& tt = single_value(ts, "type");
    Family fam;
    try {
        fam = family_from_string(tt.text);
    } catch (const std::invalid_argument&) {
        throw ParseError(ts.header.number, tt.column, "unknown puzzle type '" + tt.text + "'");
    }
    const int rows = rd.positive("rows");
    const int cols = rd.positive("cols");
    const Grid g = read_grid(rd.require("grid"), rows, cols);
    PuzzleFile out{QueensProblem{}, {}};
    switch (fam) {
        case Family::nqueens:
        case Family::lqueens:
        case Family::general_queens:
            out.problem = build_queens(rd, fam, rows, cols, g, out.warnings);
            break;
        case Family::tents:
            out.problem = build_tents(rd, rows, cols, g);
            break;
        case Family::coloured_pieces:
        case Family::max_pieces:
            out.problem = build_pieces(rd, fam, rows, cols, g);
            break;
        case Family::takuzu:
            out.problem = build_takuzu(rd, rows, cols, g);
            break;
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, 0, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

PuzzleFile load_puzzle(const std::string& path) { return parse_puzzle(read_text_file(path)); }

BinaryGrid parse_solution(const Problem& p, std::string_view text) {
    const int rows = dim_rows(p), cols = dim_cols(p);
    const auto lines = split_lines(text);
    if (static_cast<int>(lines.size()) != rows)
        throw ParseError(lines.size() > static_cast<std::size_t>(rows) ? lines[rows].number : 0, 0,
                         "solution has " + std::to_string(lines.size()) + " rows, expected " + std::to_string(rows));
    const Family fam = family(p);
    BinaryGrid g(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const auto toks = row_tokens(lines[r], cols);
        for (int c = 0; c < cols; ++c) {
            const std::string& t = toks[c].text;
            std::optional<bool> v;
            if (t == "." || t == "#") v = false;
            switch (fam) {
                case Family::nqueens:
                case Family::lqueens:
                case Family::general_queens:
                    if (t == "Q") v = true;
                    break;
                case Family::tents:
                    if (t == "A") v = true;
                    if (t == "T") v = false;
                    break;
                case Family::coloured_pieces:
                case Family::max_pieces:
                    if (t.size() == 1 && Piece::from_symbol(t[0])) v = true;
                    break;
                case Family::takuzu:
                    v.reset();
                    if (t == "0") v = false;
                    if (t == "1") v = true;
                    break;
            }
            if (!v) throw ParseError(lines[r].number, toks[c].column, "unexpected solution token '" + t + "'");
            g.at(CellRef{r + 1, c + 1}) = *v;
        }
    }
    return g;
}

std::string format_grid(const Problem& p, const BinaryGrid& g) {
    std::string out;
    const Family fam = family(p);
    std::set<CellRef> trees;
    if (const auto* t = std::get_if<TentsTreesProblem>(&p)) trees.insert(t->trees.begin(), t->trees.end());
    const Board* board = nullptr;
    if (const auto* q = std::get_if<QueensProblem>(&p)) board = &q->board;
    if (const auto* q = std::get_if<PiecesProblem>(&p)) board = &q->board;
    for (int r = 1; r <= g.rows; ++r) {
        for (int c = 1; c <= g.cols; ++c) {
            const CellRef cell{r, c};
            char ch = '.';
            if (fam == Family::takuzu) ch = g.at(cell) ? '1' : '0';
            else if (g.at(cell)) {
                if (fam == Family::tents) ch = 'A';
                else if (const auto* q = std::get_if<PiecesProblem>(&p)) ch = q->pieces.at(q->board, cell).symbol;
                else ch = 'Q';
            } else if (trees.contains(cell)) ch = 'T';
            else if (board && !board->is_active(cell)) ch = '#';
            if (c > 1) out += ' ';
            out += ch;
        }
        out += '\n';
    }
    return out;
}

}  // namespace qpz
