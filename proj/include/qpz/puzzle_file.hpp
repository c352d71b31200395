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

#include <string>
#include <string_view>
#include <vector>

#include "qpz/board.hpp"
#include "qpz/problems.hpp"

namespace qpz {

struct PuzzleFile {
    Problem problem;
    /// Non-fatal remarks about the instance.
    std::vector<std::string> warnings;
};

/// Reads the keyed puzzle text format. Throws ParseError with the offending
/// line and column.
PuzzleFile parse_puzzle(std::string_view text);
PuzzleFile load_puzzle(const std::string& path);

/// Reads a solution grid written in the family's token alphabet.
BinaryGrid parse_solution(const Problem& p, std::string_view text);

/// Prints a grid in the same alphabet parse_solution accepts.
std::string format_grid(const Problem& p, const BinaryGrid& g);

std::string read_text_file(const std::string& path);

}  // namespace qpz
