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

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "qpz/board.hpp"
#include "qpz/model.hpp"
#include "qpz/oracle.hpp"
#include "qpz/problems.hpp"
#include "qpz/qubo.hpp"
#include "qpz/solvers.hpp"

namespace qpz::testing {

inline Assignment bits(std::uint64_t mask, std::size_t n) {
    Assignment x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = (mask >> i) & 1U;
    return x;
}

/// Every assignment of the model's free variables at the given energy, decoded.
inline std::set<BinaryGrid> boards_at(const Compiled& c, QuarterInt e) {
    std::set<BinaryGrid> out;
    const std::size_t n = c.qubo.num_vars();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        const Assignment x = bits(m, n);
        if (c.qubo.energy(x) == e) out.insert(c.decode(x));
    }
    return out;
}

inline std::set<BinaryGrid> oracle_set(const Problem& p, std::size_t cap = 1u << 20) {
    const Enumeration e = enumerate_solutions(p, cap);
    return {e.solutions.begin(), e.solutions.end()};
}

/// A penalty weight*(target - sum)^2 kept in symbolic form for direct evaluation.
struct SymbolicPenalty {
    QuarterInt target;
    std::vector<Literal> literals;
    std::int64_t weight = 1;

    QuarterInt value(const Assignment& x) const {
        QuarterInt s = target;
        for (const Literal& l : literals) s = s - QuarterInt::from_int(l.value(x));
        // s is a half-integer, so s*s in quarters is (2s)^2.
        const std::int64_t h = s.numerator() / 2;
        return QuarterInt::from_quarters(h * h * weight);
    }
};

inline Literal random_literal(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> kind(0, 9);
    std::uniform_int_distribution<std::size_t> var(0, n - 1);
    const int k = kind(rng);
    if (k == 0) return Literal::constant(false);
    if (k == 1) return Literal::constant(true);
    return k % 2 ? Literal::var(var(rng)) : Literal::negated(var(rng));
}

inline SymbolicPenalty random_penalty(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> len(1, 4), halves(-2, 8), w(1, 3);
    SymbolicPenalty p{QuarterInt::from_halves(halves(rng)), {}, w(rng)};
    const int k = len(rng);
    for (int i = 0; i < k; ++i) p.literals.push_back(random_literal(rng, n));
    return p;
}

inline Qubo random_qubo(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> size(1, 12);
    std::uniform_int_distribution<std::int64_t> coef(-4000, 4000);
    const std::size_t n = size(rng);
    Qubo q(n);
    q.add_offset(QuarterInt::from_quarters(coef(rng)));
    std::uniform_int_distribution<std::size_t> var(0, n - 1);
    for (std::size_t k = 0; k < 2 * n; ++k) {
        q.add_linear(var(rng), QuarterInt::from_quarters(coef(rng)));
        const std::size_t i = var(rng), j = var(rng);
        if (i != j) q.add_quadratic(i, j, QuarterInt::from_quarters(coef(rng)));
    }
    return q;
}

/// Uniformly chosen complete Takuzu/Tango board of the given size.
inline BinaryGrid random_board(std::mt19937_64& rng, int rows, int cols, bool unique_lines) {
    TakuzuProblem empty;
    empty.rows = rows;
    empty.cols = cols;
    empty.unique_lines = unique_lines;
    static std::vector<std::pair<std::pair<int, bool>, std::vector<BinaryGrid>>> cache;
    const auto key = std::make_pair(rows * 100 + cols, unique_lines);
    auto it = std::find_if(cache.begin(), cache.end(), [&](const auto& e) { return e.first == key; });
    if (it == cache.end()) {
        cache.push_back({key, enumerate_solutions(Problem{empty}, 1u << 20).solutions});
        it = cache.end() - 1;
    }
    std::uniform_int_distribution<std::size_t> pick(0, it->second.size() - 1);
    return it->second[pick(rng)];
}

/// Givens and symbols read off a solution. Symbols join orthogonal neighbours
/// that are not givens and never close a cycle, so each one removes a
/// distinct free variable.
inline TakuzuProblem carve(std::mt19937_64& rng, const BinaryGrid& solution, int givens, int symbols,
                           bool unique_lines) {
    TakuzuProblem p;
    p.rows = solution.rows;
    p.cols = solution.cols;
    p.unique_lines = unique_lines;
    const int n = p.rows * p.cols;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<char> given(n, 0);
    for (int k = 0; k < givens; ++k) {
        const int i = order[k];
        given[i] = 1;
        const CellRef c{i / p.cols + 1, i % p.cols + 1};
        (solution.at(c) ? p.ones : p.zeros).push_back(c);
    }
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        if (i % p.cols + 1 < p.cols) edges.push_back({i, i + 1});
        if (i + p.cols < n) edges.push_back({i, i + p.cols});
    }
    std::shuffle(edges.begin(), edges.end(), rng);
    for (auto [a, b] : edges) {
        if (static_cast<int>(p.symbols.size()) == symbols) break;
        if (given[a] || given[b] || find(a) == find(b)) continue;
        parent[find(a)] = find(b);
        const CellRef ca{a / p.cols + 1, a % p.cols + 1}, cb{b / p.cols + 1, b % p.cols + 1};
        p.symbols.push_back({solution.at(ca) == solution.at(cb) ? SymbolKind::equal : SymbolKind::cross, ca, cb});
    }
    return p;
}

}  // namespace qpz::testing
