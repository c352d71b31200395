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

#include "qpz/takuzu.hpp"

#include <array>
#include <functional>

#include "qpz/error.hpp"

namespace qpz {

namespace {

using Window = std::array<CellRef, 3>;

void validate(const TakuzuProblem& p) {
    if (p.rows < 1 || p.cols < 1) throw StructuralError("board dimensions must be positive");
    if (p.wrap_rows && p.rows < 3) throw StructuralError("row wraparound needs at least 3 rows");
    if (p.wrap_cols && p.cols < 3) throw StructuralError("column wraparound needs at least 3 columns");
    auto in_board = [&](CellRef c) {
        return c.row >= 1 && c.row <= p.rows && c.col >= 1 && c.col <= p.cols;
    };
    for (const auto* set : {&p.zeros, &p.ones})
        for (CellRef c : *set)
            if (!in_board(c)) throw StructuralError("given " + to_string(c) + " outside the board");
    for (const Symbol& s : p.symbols) {
        if (!in_board(s.a) || !in_board(s.b))
            throw StructuralError("symbol endpoint outside the board");
        if (s.a == s.b) throw StructuralError("symbol endpoints must differ: " + to_string(s.a));
    }
    if (p.row_ones && p.row_ones->size() != static_cast<std::size_t>(p.rows))
        throw StructuralError("row targets must have one entry per row");
    if (p.col_ones && p.col_ones->size() != static_cast<std::size_t>(p.cols))
        throw StructuralError("column targets must have one entry per column");
    for (int i = 1; i <= p.rows; ++i) {
        const int t = p.row_target(i);
        if (t < 0 || t > p.cols) throw StructuralError("row target out of range");
    }
    for (int j = 1; j <= p.cols; ++j) {
        const int t = p.col_target(j);
        if (t < 0 || t > p.rows) throw StructuralError("column target out of range");
    }
    for (const TakuzuRegion& r : p.regions)
        for (CellRef c : r.cells)
            if (!in_board(c)) throw StructuralError("region " + r.id + " cell outside the board");
}

Board board_of(const TakuzuProblem& p) { return Board(p.rows, p.cols, p.wrap_rows, p.wrap_cols); }

void for_each_window(const TakuzuProblem& p, const std::function<void(const Window&)>& fn) {
    const Board b = board_of(p);
    const int n = p.rows, m = p.cols;
    auto emit = [&](int i, int j, int dr, int dc) {
        Window w;
        for (int k = 0; k < 3; ++k) w[k] = *b.normalize(i + k * dr, j + k * dc);
        fn(w);
    };
    const int last_row_start = p.wrap_rows ? n : n - 2;
    const int last_col_start = p.wrap_cols ? m : m - 2;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= last_col_start; ++j) emit(i, j, 0, 1);
    for (int i = 1; i <= last_row_start; ++i)
        for (int j = 1; j <= m; ++j) emit(i, j, 1, 0);
    if (p.diagonal_repetition) {
        for (int i = 1; i <= last_row_start; ++i)
            for (int j = 1; j <= last_col_start; ++j) emit(i, j, 1, 1);
        for (int i = 1; i <= last_row_start; ++i)
            for (int j = p.wrap_cols ? 1 : 3; j <= m; ++j) emit(i, j, 1, -1);
    }
}

std::vector<CellRef> line(const TakuzuProblem& p, bool is_row, int index) {
    std::vector<CellRef> out;
    const int len = is_row ? p.cols : p.rows;
    for (int k = 1; k <= len; ++k) out.push_back(is_row ? CellRef{index, k} : CellRef{k, index});
    return out;
}

// A line already holding all its ones (or all its zeros) takes the opposite
// value everywhere else.
void saturate_line(VarMap& vm, const std::vector<CellRef>& cells, int target, const char* axis,
                   int index) {
    int ones = 0, zeros = 0;
    for (CellRef c : cells) {
        if (auto v = vm.fixed_value(c)) (*v ? ones : zeros)++;
    }
    const int len = static_cast<int>(cells.size());
    if (ones > target || zeros > len - target)
        throw InfeasibleError("regularity", std::string(axis) + " " +
                                                std::to_string(index) +
                                                " cannot reach its count of ones");
    if (ones == target || zeros == len - target) {
        const bool fill = ones != target;  // ones done -> zeros, zeros done -> ones
        for (CellRef c : cells)
            if (!vm.is_fixed(c)) vm.fix(c, fill, "regularity");
    }
}

// Two equal fixed neighbours force both flanking cells of the pair.
void flank_pairs(VarMap& vm, const Board& b, int rows, int cols, bool along_row) {
    const int outer = along_row ? rows : cols;
    const int len = along_row ? cols : rows;
    const bool wraps = along_row ? b.wrap_cols() : b.wrap_rows();
    auto at = [&](int o, int k) -> std::optional<CellRef> {
        return along_row ? b.normalize(o, k) : b.normalize(k, o);
    };
    for (int o = 1; o <= outer; ++o) {
        for (int k = 1; k <= len; ++k) {
            if (k + 1 > len && !wraps) break;
            CellRef a = *at(o, k), c = *at(o, k + 1);
            auto va = vm.fixed_value(a), vc = vm.fixed_value(c);
            if (!va || !vc || *va != *vc) continue;
            for (int f : {k - 1, k + 2}) {
                auto flank = at(o, f);
                if (flank && *flank != a && *flank != c) vm.fix(*flank, !*va, "repetition");
            }
        }
    }
}

void throw_if_conflict(const VarMap& vm) {
    if (vm.has_conflict())
        throw InfeasibleError(vm.conflict()->rule, vm.conflict()->describe());
}

}  // namespace

VarMap preprocess_takuzu(const TakuzuProblem& p, const TakuzuOptions& opts) {
    validate(p);
    const Board b = board_of(p);
    VarMap vm(b);
    for (CellRef c : p.zeros) vm.fix(c, false, "initial");
    for (CellRef c : p.ones) vm.fix(c, true, "initial");
    if (opts.alias_symbols) {
        for (const Symbol& s : p.symbols) {
            if (s.kind == SymbolKind::equal)
                vm.alias_equal(s.a, s.b, "equal-symbol");
            else
                vm.alias_cross(s.a, s.b, "cross-symbol");
        }
    }
    throw_if_conflict(vm);

    std::size_t before;
    do {
        before = vm.num_free();
        if (!opts.alias_symbols) {
            for (const Symbol& s : p.symbols) {
                const bool opposite = s.kind == SymbolKind::cross;
                const char* rule = opposite ? "cross-symbol" : "equal-symbol";
                if (auto v = vm.fixed_value(s.a)) vm.fix(s.b, *v ^ opposite, rule);
                if (auto v = vm.fixed_value(s.b)) vm.fix(s.a, *v ^ opposite, rule);
            }
        }
        for (int i = 1; i <= p.rows; ++i) saturate_line(vm, line(p, true, i), p.row_target(i), "row", i);
        for (int j = 1; j <= p.cols; ++j)
            saturate_line(vm, line(p, false, j), p.col_target(j), "column", j);
        flank_pairs(vm, b, p.rows, p.cols, true);
        flank_pairs(vm, b, p.rows, p.cols, false);
        throw_if_conflict(vm);
    } while (vm.num_free() < before);
    return vm;
}

long long takuzu_variable_bound(const TakuzuProblem& p) {
    return static_cast<long long>(p.rows) * p.cols - static_cast<long long>(p.zeros.size()) -
           static_cast<long long>(p.ones.size()) - static_cast<long long>(p.symbols.size());
}

std::size_t takuzu_window_count(const TakuzuProblem& p) {
    std::size_t n = 0;
    for_each_window(p, [&](const Window&) { ++n; });
    return n;
}

Qubo build_ttp_generalized(const TakuzuProblem& p, const VarMap& vm, const TakuzuBuildOptions& opts) {
    validate(p);
    if (vm.board().rows() != p.rows || vm.board().cols() != p.cols)
        throw StructuralError("variable map does not match the board");
    Qubo q(vm.num_free());

    for_each_window(p, [&](const Window& w) {
        const std::array<Literal, 3> lits{vm.resolve(w[0]), vm.resolve(w[1]), vm.resolve(w[2])};
        q.add_square_penalty(QuarterInt::from_halves(3), lits);
    });
    for (int is_row : {1, 0}) {
        const int count = is_row ? p.rows : p.cols;
        for (int k = 1; k <= count; ++k) {
            std::vector<Literal> lits;
            for (CellRef c : line(p, is_row, k)) lits.push_back(vm.resolve(c));
            q.add_square_penalty(QuarterInt::from_int(is_row ? p.row_target(k) : p.col_target(k)),
                                 lits);
        }
    }
    for (const TakuzuRegion& r : p.regions) {
        if (r.cells.empty()) continue;
        std::vector<Literal> lits;
        for (CellRef c : r.cells) lits.push_back(vm.resolve(c));
        q.add_square_penalty(QuarterInt::from_int(r.ones), lits);
    }
    if (opts.explicit_symbols) {
        const auto one = QuarterInt::from_int(1);
        for (const Symbol& s : p.symbols) {
            Literal a = vm.resolve(s.a), b = vm.resolve(s.b);
            if (s.kind == SymbolKind::equal) {
                // x(1-y) + (1-x)y: zero iff x == y
                q.add_pair_interaction(a, !b, one);
                q.add_pair_interaction(!a, b, one);
            } else {
                // xy + (1-x)(1-y): zero iff x != y
                q.add_pair_interaction(a, b, one);
                q.add_pair_interaction(!a, !b, one);
            }
        }
    }
    return q;
}

Qubo build_ttp(const TakuzuProblem& p, const VarMap& vm) {
    TakuzuProblem plain = p;
    plain.row_ones.reset();
    plain.col_ones.reset();
    plain.regions.clear();
    plain.diagonal_repetition = false;
    plain.wrap_rows = false;
    plain.wrap_cols = false;
    return build_ttp_generalized(plain, vm);
}

Compiled compile_takuzu(const TakuzuProblem& p, const TakuzuOptions& opts) {
    VarMap vm = preprocess_takuzu(p, opts);
    Qubo q = build_ttp_generalized(p, vm, {.explicit_symbols = !opts.alias_symbols});
    return Compiled{std::move(q), std::move(vm), FloorDescriptor{Family::takuzu, takuzu_window_count(p), std::nullopt}};
}

NonRepetitionReport check_global_nonrepetition(const TakuzuProblem& p, const BinaryGrid& g) {
    if (g.rows != p.rows || g.cols != p.cols ||
        g.cells.size() != static_cast<std::size_t>(p.rows) * p.cols)
        throw StructuralError("incomplete board: expected " + std::to_string(p.rows) + "x" +
                              std::to_string(p.cols) + " values");
    // Two lines with equal ones-counts s coincide iff their dot product is s.
    auto scan = [&](bool rows) -> std::optional<NonRepetitionReport::Offending> {
        const int count = rows ? g.rows : g.cols, len = rows ? g.cols : g.rows;
        auto v = [&](int line, int k) { return rows ? g.at(line, k) : g.at(k, line); };
        for (int a = 1; a <= count; ++a) {
            for (int b = a + 1; b <= count; ++b) {
                int sa = 0, sb = 0, dot = 0;
                for (int k = 1; k <= len; ++k) {
                    sa += v(a, k);
                    sb += v(b, k);
                    dot += v(a, k) * v(b, k);
                }
                if (sa == sb && dot == sa)
                    return NonRepetitionReport::Offending{
                        rows ? NonRepetitionReport::Axis::row : NonRepetitionReport::Axis::column, a, b};
            }
        }
        return std::nullopt;
    };
    NonRepetitionReport r;
    r.offending = scan(true);
    if (!r.offending) r.offending = scan(false);
    r.ok = !r.offending.has_value();
    return r;
}

}  // namespace qpz
