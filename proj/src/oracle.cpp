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

#include "qpz/oracle.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

#include "qpz/error.hpp"

namespace qpz {

namespace {

// --- geometry, independent of the board-model helpers ----------------------

std::optional<CellRef> step(const Board& b, CellRef from, int dr, int dc) {
    int r = from.row + dr, c = from.col + dc;
    if (r < 1 || r > b.rows()) {
        if (!b.wrap_rows()) return std::nullopt;
        r = ((r - 1) % b.rows() + b.rows()) % b.rows() + 1;
    }
    if (c < 1 || c > b.cols()) {
        if (!b.wrap_cols()) return std::nullopt;
        c = ((c - 1) % b.cols() + b.cols()) % b.cols() + 1;
    }
    return CellRef{r, c};
}

bool slides_to(const Board& b, CellRef from, CellRef to, int dr, int dc, int range) {
    const long long limit = std::min<long long>(range, static_cast<long long>(b.rows()) * b.cols());
    for (long long s = 1; s <= limit; ++s) {
        auto p = step(b, from, static_cast<int>(s * dr), static_cast<int>(s * dc));
        if (!p || *p == from) return false;
        if (*p == to) return true;
    }
    return false;
}

bool diagonal_reaches(const Board& b, CellRef from, CellRef to, int distance) {
    if (distance <= 0) return false;
    for (int dr : {-1, 1})
        for (int dc : {-1, 1})
            if (slides_to(b, from, to, dr, dc, distance)) return true;
    return false;
}

bool piece_reaches(const Board& b, const Piece& piece, CellRef from, CellRef to) {
    for (const Ray& r : piece.moves.rays)
        if (slides_to(b, from, to, r.dr, r.dc, r.range)) return true;
    for (const Offset& o : piece.moves.jumps) {
        auto p = step(b, from, o.dr, o.dc);
        if (p && *p == to && *p != from) return true;
    }
    return false;
}

bool touching(CellRef a, CellRef b) {
    return a != b && std::abs(a.row - b.row) <= 1 && std::abs(a.col - b.col) <= 1;
}

bool orthogonal_neighbours(CellRef a, CellRef b) {
    return std::abs(a.row - b.row) + std::abs(a.col - b.col) == 1;
}

std::vector<CellRef> ones(const BinaryGrid& g) {
    std::vector<CellRef> out;
    for (int r = 1; r <= g.rows; ++r)
        for (int c = 1; c <= g.cols; ++c)
            if (g.at(r, c)) out.push_back({r, c});
    return out;
}

void check_dims(const BinaryGrid& g, int rows, int cols) {
    if (g.rows != rows || g.cols != cols || g.cells.size() != static_cast<std::size_t>(rows) * cols)
        throw StructuralError("incomplete assignment: expected a " + std::to_string(rows) + "x" +
                              std::to_string(cols) + " board");
}

// --- per-family rule checks ------------------------------------------------

struct Checker {
    VerifyReport report;
    void fail(std::string name, std::vector<CellRef> cells) {
        report.satisfied = false;
        report.violations.push_back({std::move(name), std::move(cells)});
    }
    void count(const std::string& name, const BinaryGrid& g, const std::vector<CellRef>& cells,
               int lo, int hi) {
        int n = 0;
        std::vector<CellRef> hit;
        for (CellRef c : cells)
            if (g.at(c)) {
                ++n;
                hit.push_back(c);
            }
        if (n < lo || n > hi) fail(name, hit.empty() ? cells : hit);
    }
};

std::vector<CellRef> row_of(const Board& b, int i) {
    std::vector<CellRef> out;
    for (int j = 1; j <= b.cols(); ++j)
        if (b.is_active({i, j})) out.push_back({i, j});
    return out;
}

std::vector<CellRef> col_of(const Board& b, int j) {
    std::vector<CellRef> out;
    for (int i = 1; i <= b.rows(); ++i)
        if (b.is_active({i, j})) out.push_back({i, j});
    return out;
}

void off_board(Checker& ck, const Board& b, const BinaryGrid& g) {
    for (CellRef c : ones(g))
        if (!b.is_active(c)) ck.fail("region", {c});
}

VerifyReport verify_queens(const QueensProblem& p, const BinaryGrid& g) {
    const Board& b = p.board;
    check_dims(g, b.rows(), b.cols());
    Checker ck;
    off_board(ck, b, g);
    for (CellRef c : p.initial)
        if (!g.at(c)) ck.fail("initial", {c});
    if (p.row_targets)
        for (int i = 1; i <= b.rows(); ++i) {
            const int t = (*p.row_targets)[i - 1];
            ck.count("row", g, row_of(b, i), t, t);
        }
    if (p.col_targets)
        for (int j = 1; j <= b.cols(); ++j) {
            const int t = (*p.col_targets)[j - 1];
            ck.count("column", g, col_of(b, j), t, t);
        }
    for (const Region& r : p.regions) ck.count("region", g, r.cells, r.q, r.q + r.t);
    auto queens = ones(g);
    for (std::size_t a = 0; a < queens.size(); ++a)
        for (std::size_t c = a + 1; c < queens.size(); ++c) {
            CellRef x = queens[a], y = queens[c];
            if (!b.is_active(x) || !b.is_active(y)) continue;
            if (diagonal_reaches(b, x, y, p.distance(x)) || diagonal_reaches(b, y, x, p.distance(y)))
                ck.fail("diagonal", {x, y});
        }
    return ck.report;
}

// Kuhn's augmenting paths: every tree gets its own orthogonally adjacent tent.
bool trees_matched(const std::vector<CellRef>& trees, const std::vector<CellRef>& tents) {
    std::vector<int> tent_owner(tents.size(), -1);
    std::function<bool(std::size_t, std::vector<char>&)> augment = [&](std::size_t t,
                                                                       std::vector<char>& seen) {
        for (std::size_t k = 0; k < tents.size(); ++k) {
            if (seen[k] || !orthogonal_neighbours(trees[t], tents[k])) continue;
            seen[k] = 1;
            if (tent_owner[k] < 0 || augment(static_cast<std::size_t>(tent_owner[k]), seen)) {
                tent_owner[k] = static_cast<int>(t);
                return true;
            }
        }
        return false;
    };
    for (std::size_t t = 0; t < trees.size(); ++t) {
        std::vector<char> seen(tents.size(), 0);
        if (!augment(t, seen)) return false;
    }
    return true;
}

VerifyReport verify_tents(const TentsTreesProblem& p, const BinaryGrid& g) {
    check_dims(g, p.rows, p.cols);
    Board b(p.rows, p.cols);
    Checker ck;
    const std::set<CellRef> trees(p.trees.begin(), p.trees.end());
    for (CellRef t : trees)
        if (g.at(t)) ck.fail("region", {t});
    for (int i = 1; i <= p.rows; ++i) ck.count("row", g, row_of(b, i), p.row_counts[i - 1], p.row_counts[i - 1]);
    for (int j = 1; j <= p.cols; ++j) ck.count("column", g, col_of(b, j), p.col_counts[j - 1], p.col_counts[j - 1]);
    auto tents = ones(g);
    for (std::size_t a = 0; a < tents.size(); ++a)
        for (std::size_t c = a + 1; c < tents.size(); ++c)
            if (touching(tents[a], tents[c])) ck.fail("adjacency", {tents[a], tents[c]});
    std::erase_if(tents, [&](CellRef c) { return trees.contains(c); });
    const std::vector<CellRef> tree_list(trees.begin(), trees.end());
    if (tents.size() != tree_list.size() || !trees_matched(tree_list, tents))
        ck.fail("region", tree_list);
    return ck.report;
}

VerifyReport verify_pieces(const PiecesProblem& p, const BinaryGrid& g) {
    const Board& b = p.board;
    check_dims(g, b.rows(), b.cols());
    Checker ck;
    off_board(ck, b, g);
    for (CellRef c : p.initial)
        if (!g.at(c)) ck.fail("initial", {c});
    if (p.mode == PiecesMode::coloured)
        for (const Region& r : p.regions) ck.count("region", g, r.cells, 1, 1);
    auto placed = ones(g);
    for (CellRef a : placed)
        for (CellRef c : placed)
            if (a != c && b.is_active(a) && b.is_active(c) && piece_reaches(b, p.pieces.at(b, a), a, c))
                ck.fail("threat", {a, c});
    return ck.report;
}

using Window = std::array<CellRef, 3>;

std::vector<Window> takuzu_windows(const TakuzuProblem& p) {
    Board b(p.rows, p.cols, p.wrap_rows, p.wrap_cols);
    std::vector<std::pair<int, int>> dirs{{0, 1}, {1, 0}};
    if (p.diagonal_repetition) {
        dirs.push_back({1, 1});
        dirs.push_back({1, -1});
    }
    std::vector<Window> out;
    for (auto [dr, dc] : dirs)
        for (int i = 1; i <= p.rows; ++i)
            for (int j = 1; j <= p.cols; ++j) {
                auto m = step(b, {i, j}, dr, dc);
                auto e = step(b, {i, j}, 2 * dr, 2 * dc);
                if (m && e) out.push_back({CellRef{i, j}, *m, *e});
            }
    return out;
}

VerifyReport verify_takuzu(const TakuzuProblem& p, const BinaryGrid& g) {
    check_dims(g, p.rows, p.cols);
    Board b(p.rows, p.cols);
    Checker ck;
    for (CellRef c : p.zeros)
        if (g.at(c)) ck.fail("initial", {c});
    for (CellRef c : p.ones)
        if (!g.at(c)) ck.fail("initial", {c});
    for (int i = 1; i <= p.rows; ++i) {
        const int t = p.row_target(i);
        ck.count("regularity", g, row_of(b, i), t, t);
    }
    for (int j = 1; j <= p.cols; ++j) {
        const int t = p.col_target(j);
        ck.count("regularity", g, col_of(b, j), t, t);
    }
    for (const Window& w : takuzu_windows(p))
        if (g.at(w[0]) == g.at(w[1]) && g.at(w[1]) == g.at(w[2]))
            ck.fail("repetition", {w.begin(), w.end()});
    for (const Symbol& s : p.symbols) {
        const bool same = g.at(s.a) == g.at(s.b);
        if (s.kind == SymbolKind::equal && !same) ck.fail("equal-symbol", {s.a, s.b});
        if (s.kind == SymbolKind::cross && same) ck.fail("cross-symbol", {s.a, s.b});
    }
    for (const TakuzuRegion& r : p.regions) ck.count("region", g, r.cells, r.ones, r.ones);
    if (p.unique_lines) {
        for (int a = 1; a <= p.rows; ++a)
            for (int c = a + 1; c <= p.rows; ++c) {
                bool same = true;
                for (int j = 1; j <= p.cols && same; ++j) same = g.at(a, j) == g.at(c, j);
                if (same) ck.fail("non-repetition", {CellRef{a, 1}, CellRef{c, 1}});
            }
        for (int a = 1; a <= p.cols; ++a)
            for (int c = a + 1; c <= p.cols; ++c) {
                bool same = true;
                for (int i = 1; i <= p.rows && same; ++i) same = g.at(i, a) == g.at(i, c);
                if (same) ck.fail("non-repetition", {CellRef{1, a}, CellRef{1, c}});
            }
    }
    return ck.report;
}

// --- backtracking ----------------------------------------------------------

// Cell-by-cell search with partial checks; leaves are confirmed by verify().
class Search {
 public:
    struct Group {
        std::vector<std::size_t> cells;
        int lo;
        int hi;
    };

    Search(const Problem& p, int rows, int cols) : problem_(p), rows_(rows), cols_(cols) {
        const std::size_t n = static_cast<std::size_t>(rows) * cols;
        forced_.assign(n, -1);
        excl_.resize(n);
        groups_of_.resize(n);
        windows_of_.resize(n);
        symbols_of_.resize(n);
        value_.assign(n, -1);
    }

    std::size_t idx(CellRef c) const { return static_cast<std::size_t>(c.row - 1) * cols_ + (c.col - 1); }

    void force(CellRef c, int v) {
        auto& f = forced_[idx(c)];
        if (f != -1 && f != v) contradiction_ = true;
        f = v;
    }
    void exclude(CellRef a, CellRef b) {
        excl_[idx(a)].push_back(idx(b));
        excl_[idx(b)].push_back(idx(a));
    }
    void group(const std::vector<CellRef>& cells, int lo, int hi) {
        Group g{{}, lo, hi};
        for (CellRef c : cells) g.cells.push_back(idx(c));
        for (std::size_t c : g.cells) groups_of_[c].push_back(groups_.size());
        groups_.push_back(std::move(g));
    }
    void window(const Window& w) {
        std::array<std::size_t, 3> k{idx(w[0]), idx(w[1]), idx(w[2])};
        for (std::size_t c : k) windows_of_[c].push_back(windows_.size());
        windows_.push_back(k);
    }
    void symbol(const Symbol& s) {
        symbols_of_[idx(s.a)].push_back(symbols_.size());
        symbols_of_[idx(s.b)].push_back(symbols_.size());
        symbols_.push_back({idx(s.a), idx(s.b), s.kind == SymbolKind::cross});
    }

    Enumeration run(std::size_t cap) {
        cap_ = cap;
        placed_.assign(groups_.size(), 0);
        undecided_.resize(groups_.size());
        for (std::size_t k = 0; k < groups_.size(); ++k)
            undecided_[k] = static_cast<int>(groups_[k].cells.size());
        if (!contradiction_) dfs(0);
        return std::move(result_);
    }

 private:
    struct Sym {
        std::size_t a, b;
        bool opposite;
    };

    bool allowed(std::size_t c, int v) const {
        if (forced_[c] != -1 && forced_[c] != v) return false;
        for (std::size_t g : groups_of_[c]) {
            const int placed = placed_[g] + v;
            if (placed > groups_[g].hi || placed + undecided_[g] - 1 < groups_[g].lo) return false;
        }
        if (v == 1)
            for (std::size_t o : excl_[c])
                if (value_[o] == 1) return false;
        for (std::size_t w : windows_of_[c]) {
            int same = 0, decided = 0;
            for (std::size_t k : windows_[w]) {
                const int val = k == c ? v : value_[k];
                if (val != -1) {
                    ++decided;
                    same += val == v;
                }
            }
            if (decided == 3 && same == 3) return false;
        }
        for (std::size_t s : symbols_of_[c]) {
            const Sym& y = symbols_[s];
            const std::size_t other = y.a == c ? y.b : y.a;
            if (value_[other] != -1 && ((value_[other] != v) != y.opposite)) return false;
        }
        return true;
    }

    void set(std::size_t c, int v) {
        value_[c] = v;
        for (std::size_t g : groups_of_[c]) {
            placed_[g] += v;
            --undecided_[g];
        }
    }
    void unset(std::size_t c) {
        for (std::size_t g : groups_of_[c]) {
            placed_[g] -= value_[c];
            ++undecided_[g];
        }
        value_[c] = -1;
    }

    bool dfs(std::size_t c) {
        if (c == value_.size()) {
            BinaryGrid g(rows_, cols_);
            for (std::size_t k = 0; k < value_.size(); ++k) g.cells[k] = static_cast<std::uint8_t>(value_[k]);
            if (!verify(problem_, g).satisfied) return true;
            if (result_.count == cap_) {
                result_.truncated = true;
                return false;
            }
            ++result_.count;
            result_.solutions.push_back(std::move(g));
            return true;
        }
        for (int v : {1, 0}) {
            if (!allowed(c, v)) continue;
            set(c, v);
            const bool go_on = dfs(c + 1);
            unset(c);
            if (!go_on) return false;
        }
        return true;
    }

    const Problem& problem_;
    int rows_, cols_;
    std::vector<int> forced_;
    std::vector<std::vector<std::size_t>> excl_;
    std::vector<Group> groups_;
    std::vector<std::vector<std::size_t>> groups_of_;
    std::vector<std::array<std::size_t, 3>> windows_;
    std::vector<std::vector<std::size_t>> windows_of_;
    std::vector<Sym> symbols_;
    std::vector<std::vector<std::size_t>> symbols_of_;
    std::vector<int> placed_, undecided_, value_;
    bool contradiction_ = false;
    std::size_t cap_ = 0;
    Enumeration result_;
};

void force_inactive(Search& s, const Board& b) {
    for (std::size_t i = 0; i < b.size(); ++i)
        if (!b.is_active(b.cell(i))) s.force(b.cell(i), 0);
}

Enumeration enumerate_queens(const Problem& prob, const QueensProblem& p, std::size_t cap) {
    const Board& b = p.board;
    Search s(prob, b.rows(), b.cols());
    force_inactive(s, b);
    for (CellRef c : p.initial) s.force(c, 1);
    if (p.row_targets)
        for (int i = 1; i <= b.rows(); ++i) s.group(row_of(b, i), (*p.row_targets)[i - 1], (*p.row_targets)[i - 1]);
    if (p.col_targets)
        for (int j = 1; j <= b.cols(); ++j) s.group(col_of(b, j), (*p.col_targets)[j - 1], (*p.col_targets)[j - 1]);
    for (const Region& r : p.regions) s.group(r.cells, r.q, r.q + r.t);
    const auto cells = b.active_cells();
    for (std::size_t a = 0; a < cells.size(); ++a)
        for (std::size_t c = a + 1; c < cells.size(); ++c)
            if (diagonal_reaches(b, cells[a], cells[c], p.distance(cells[a])) ||
                diagonal_reaches(b, cells[c], cells[a], p.distance(cells[c])))
                s.exclude(cells[a], cells[c]);
    return s.run(cap);
}

Enumeration enumerate_tents(const Problem& prob, const TentsTreesProblem& p, std::size_t cap) {
    Board b(p.rows, p.cols);
    Search s(prob, p.rows, p.cols);
    for (CellRef t : p.trees) s.force(t, 0);
    for (int i = 1; i <= p.rows; ++i) s.group(row_of(b, i), p.row_counts[i - 1], p.row_counts[i - 1]);
    for (int j = 1; j <= p.cols; ++j) s.group(col_of(b, j), p.col_counts[j - 1], p.col_counts[j - 1]);
    const auto cells = b.active_cells();
    for (std::size_t a = 0; a < cells.size(); ++a)
        for (std::size_t c = a + 1; c < cells.size(); ++c)
            if (touching(cells[a], cells[c])) s.exclude(cells[a], cells[c]);
    return s.run(cap);
}

Enumeration enumerate_coloured(const Problem& prob, const PiecesProblem& p, std::size_t cap) {
    const Board& b = p.board;
    Search s(prob, b.rows(), b.cols());
    force_inactive(s, b);
    for (CellRef c : p.initial) s.force(c, 1);
    for (const Region& r : p.regions) s.group(r.cells, 1, 1);
    const auto cells = b.active_cells();
    for (CellRef a : cells)
        for (CellRef c : cells)
            if (a != c && piece_reaches(b, p.pieces.at(b, a), a, c)) s.exclude(a, c);
    return s.run(cap);
}

Enumeration enumerate_takuzu(const Problem& prob, const TakuzuProblem& p, std::size_t cap) {
    Board b(p.rows, p.cols);
    Search s(prob, p.rows, p.cols);
    for (CellRef c : p.zeros) s.force(c, 0);
    for (CellRef c : p.ones) s.force(c, 1);
    for (int i = 1; i <= p.rows; ++i) s.group(row_of(b, i), p.row_target(i), p.row_target(i));
    for (int j = 1; j <= p.cols; ++j) s.group(col_of(b, j), p.col_target(j), p.col_target(j));
    for (const TakuzuRegion& r : p.regions) s.group(r.cells, r.ones, r.ones);
    for (const Window& w : takuzu_windows(p)) s.window(w);
    for (const Symbol& y : p.symbols) s.symbol(y);
    return s.run(cap);
}

// Branch and bound over threat-free placements, keeping every maximum-weight board.
Enumeration enumerate_max_pieces(const PiecesProblem& p, std::size_t cap) {
    const Board& b = p.board;
    const std::size_t n = b.size();
    std::vector<std::vector<std::size_t>> excl(n);
    std::vector<long long> weight(n, 0);
    std::vector<int> forced(n, -1);
    const auto cells = b.active_cells();
    for (CellRef a : cells) {
        weight[b.index(a)] = p.pieces.at(b, a).weight;
        for (CellRef c : cells)
            if (a != c && piece_reaches(b, p.pieces.at(b, a), a, c)) {
                excl[b.index(a)].push_back(b.index(c));
                excl[b.index(c)].push_back(b.index(a));
            }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!b.is_active(b.cell(i))) forced[i] = 0;
    for (CellRef c : p.initial) forced[b.index(c)] = 1;

    std::vector<long long> suffix(n + 1, 0);
    for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + weight[i];

    Enumeration out;
    long long best = std::numeric_limits<long long>::min();
    std::vector<int> value(n, -1);
    std::function<void(std::size_t, long long)> dfs = [&](std::size_t c, long long w) {
        if (w + suffix[c] < best) return;
        if (c == n) {
            if (w > best) {
                best = w;
                out.count = 0;
                out.solutions.clear();
                out.truncated = false;
            }
            ++out.count;
            if (out.solutions.size() < cap) {
                BinaryGrid g(b.rows(), b.cols());
                for (std::size_t k = 0; k < n; ++k) g.cells[k] = static_cast<std::uint8_t>(value[k]);
                out.solutions.push_back(std::move(g));
            } else {
                out.truncated = true;
            }
            return;
        }
        for (int v : {1, 0}) {
            if (forced[c] != -1 && forced[c] != v) continue;
            if (v == 1 && std::any_of(excl[c].begin(), excl[c].end(),
                                      [&](std::size_t o) { return value[o] == 1; }))
                continue;
            value[c] = v;
            dfs(c + 1, w + (v ? weight[c] : 0));
            value[c] = -1;
        }
    };
    dfs(0, 0);
    if (out.count > 0) out.best_weight = best;
    return out;
}

}  // namespace

VerifyReport verify(const Problem& p, const BinaryGrid& g) {
    struct Visitor {
        const BinaryGrid& g;
        VerifyReport operator()(const QueensProblem& q) const { return verify_queens(q, g); }
        VerifyReport operator()(const TentsTreesProblem& q) const { return verify_tents(q, g); }
        VerifyReport operator()(const PiecesProblem& q) const { return verify_pieces(q, g); }
        VerifyReport operator()(const TakuzuProblem& q) const { return verify_takuzu(q, g); }
    };
    return std::visit(Visitor{g}, p);
}

Enumeration enumerate_solutions(const Problem& p, std::size_t cap) {
    struct Visitor {
        const Problem& whole;
        std::size_t cap;
        Enumeration operator()(const QueensProblem& q) const { return enumerate_queens(whole, q, cap); }
        Enumeration operator()(const TentsTreesProblem& q) const { return enumerate_tents(whole, q, cap); }
        Enumeration operator()(const PiecesProblem& q) const {
            return q.mode == PiecesMode::max ? enumerate_max_pieces(q, cap)
                                             : enumerate_coloured(whole, q, cap);
        }
        Enumeration operator()(const TakuzuProblem& q) const { return enumerate_takuzu(whole, q, cap); }
    };
    return std::visit(Visitor{p, cap}, p);
}

}  // namespace qpz
