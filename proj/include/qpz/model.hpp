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

#include "qpz/board.hpp"
#include "qpz/qubo.hpp"
#include "qpz/solvers.hpp"

namespace qpz {

/// A compiled puzzle: the model over the reduced variables, the map that
/// expands those variables back onto the board, and its energy floor.
struct Compiled {
    Qubo qubo;
    VarMap vars;
    FloorDescriptor floor;

    BinaryGrid decode(std::span<const std::uint8_t> x) const { return vars.decode(x); }
};

}  // namespace qpz
