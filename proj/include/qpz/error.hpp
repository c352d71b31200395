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

#include <stdexcept>
#include <string>

namespace qpz {

/// A model was assembled inconsistently (bad index, diagonal key, size mismatch).
class StructuralError : public std::invalid_argument {
 public:
    using std::invalid_argument::invalid_argument;
};

/// The instance provably has no solution; `rule` names the constraint that failed.
class InfeasibleError : public std::runtime_error {
 public:
    InfeasibleError(std::string rule, const std::string& what)
        : std::runtime_error(what), rule_(std::move(rule)) {}
    const std::string& rule() const { return rule_; }

 private:
    std::string rule_;
};

/// Text input could not be parsed. Line and column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
 public:
    ParseError(int line, int column, const std::string& what)
        : std::runtime_error(format(line, column, what)), line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

 private:
    static std::string format(int line, int column, const std::string& what) {
        std::string s;
        if (line > 0) {
            s = "line " + std::to_string(line);
            if (column > 0) s += ", column " + std::to_string(column);
            s += ": ";
        }
        return s + what;
    }
    int line_;
    int column_;
};

}  // namespace qpz
