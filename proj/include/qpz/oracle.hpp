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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qpz/board.hpp"
#include "qpz/problems.hpp"

namespace qpz {

// Ground truth for every puzzle family, written directly from the puzzle
// rules. Nothing here goes through a Qubo.

struct Violation {
    /// row, column, diagonal, region, adjacency, threat, regularity,
    /// repetition, equal-symbol, cross-symbol, non-repetition, initial
    std::string constraint;
    std::vector<CellRef> cells;
};

struct VerifyReport {
    bool satisfied = true;
    std::vector<Violation> violations;
};

/// Checks every rule of the puzzle on a complete board. Throws
/// StructuralError if the grid does not match the board dimensions.
VerifyReport verify(const Problem& p, const BinaryGrid& g);

struct Enumeration {
    /// Solutions found; exact unless `truncated`.
    std::size_t count = 0;
    /// The first `cap` solutions in search order.
    std::vector<BinaryGrid> solutions;
    bool truncated = false;
    /// Max-pieces only: the optimal total weight.
    std::optional<long long> best_weight;
};

/// Depth-first search over cells in row-major order, trying 1 before 0, with
/// count/pair/window pruning; every leaf is confirmed with verify().
/// For max-pieces the solutions are the maximum-weight threat-free boards.
/// The search stops once more than `cap` solutions are found.
Enumeration enumerate_solutions(const Problem& p, std::size_t cap);

/// Compiles the problem, collects every assignment at the predicted floor
/// energy by exhaustive search, and compares the decoded boards with the
/// oracle's solutions as sets. Takuzu boards are also filtered through the
/// non-repetition check when the puzzle requires unique lines.
/// Throws StructuralError above `max_free_vars` free variables.
bool qubo_oracle_agreement(const Problem& p, std::size_t max_free_vars = 20);

}  // namespace qpz
