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

#include <optional>

#include "qpz/model.hpp"
#include "qpz/problems.hpp"

namespace qpz {

struct TakuzuOptions {
    /// Eliminate symbol endpoints by aliasing. When false the symbols are kept
    /// as explicit pair penalties instead (used to cross-check the aliasing).
    bool alias_symbols = true;
};

/// Runs the elimination rules until nothing changes. Givens and symbols are
/// applied first; saturated lines and equal pairs then force further cells.
/// Throws InfeasibleError naming the rule that produced a contradiction.
VarMap preprocess_takuzu(const TakuzuProblem& p, const TakuzuOptions& opts = {});

/// rows*cols minus givens minus symbols: the free-variable count when every
/// symbol links two previously free cells.
long long takuzu_variable_bound(const TakuzuProblem& p);

/// Balanced TTP: 3-windows with target 3/2 and rows/columns with target half
/// the line length. Generalisation fields of `p` are ignored.
Qubo build_ttp(const TakuzuProblem& p, const VarMap& vm);

struct TakuzuBuildOptions {
    bool explicit_symbols = false;
};

/// build_ttp plus every generalisation present in `p`: per-line targets,
/// diagonal windows, ones-count regions and wraparound windows.
Qubo build_ttp_generalized(const TakuzuProblem& p, const VarMap& vm,
                           const TakuzuBuildOptions& opts = {});

/// Number of 3-window penalties build_ttp_generalized emits.
std::size_t takuzu_window_count(const TakuzuProblem& p);

/// Preprocess and build in one step.
Compiled compile_takuzu(const TakuzuProblem& p, const TakuzuOptions& opts = {});

struct NonRepetitionReport {
    enum class Axis { row, column };
    struct Offending {
        Axis axis;
        int a;
        int b;
    };
    bool ok = true;
    std::optional<Offending> offending;
};

/// No two identical rows and no two identical columns. Throws
/// StructuralError when the grid does not match the board.
NonRepetitionReport check_global_nonrepetition(const TakuzuProblem& p, const BinaryGrid& g);

}  // namespace qpz
