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
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qpz/quarter.hpp"

namespace qpz {

/// One bit per variable, 0 or 1.
using Assignment = std::vector<std::uint8_t>;

/// A plain or negated variable, or a constant bit.
class Literal {
 public:
    enum class Kind : std::uint8_t { positive, negated, zero, one };

    static constexpr Literal var(std::size_t index) { return {Kind::positive, index}; }
    static constexpr Literal negated(std::size_t index) { return {Kind::negated, index}; }
    static constexpr Literal constant(bool value) { return {value ? Kind::one : Kind::zero, 0}; }

    constexpr Kind kind() const { return kind_; }
    constexpr bool is_constant() const { return kind_ == Kind::zero || kind_ == Kind::one; }
    /// Only meaningful for non-constant literals.
    constexpr std::size_t index() const { return index_; }

    constexpr Literal operator!() const {
        switch (kind_) {
            case Kind::positive: return {Kind::negated, index_};
            case Kind::negated: return {Kind::positive, index_};
            case Kind::zero: return {Kind::one, 0};
            case Kind::one: return {Kind::zero, 0};
        }
        return *this;
    }

    /// Evaluates against a full assignment; no bounds check.
    constexpr int value(std::span<const std::uint8_t> x) const {
        switch (kind_) {
            case Kind::positive: return x[index_] ? 1 : 0;
            case Kind::negated: return x[index_] ? 0 : 1;
            case Kind::zero: return 0;
            case Kind::one: return 1;
        }
        return 0;
    }

    friend constexpr bool operator==(Literal, Literal) = default;

 private:
    constexpr Literal(Kind k, std::size_t i) : kind_(k), index_(i) {}
    Kind kind_;
    std::size_t index_;
};

std::string to_string(Literal lit);

/// Binary quadratic model  offset + sum_i a_i x_i + sum_{i<j} b_ij x_i x_j
/// with exact quarter-integer coefficients.
///
/// Canonical form: zero coefficients are never stored, quadratic keys satisfy
/// i < j, and x_i^2 is folded into the linear part.
class Qubo {
 public:
    using Pair = std::pair<std::size_t, std::size_t>;

    Qubo() = default;
    explicit Qubo(std::size_t num_vars) : num_vars_(num_vars) {}

    std::size_t num_vars() const { return num_vars_; }
    QuarterInt offset() const { return offset_; }
    const std::map<std::size_t, QuarterInt>& linear() const { return linear_; }
    const std::map<Pair, QuarterInt>& quadratic() const { return quadratic_; }

    QuarterInt linear(std::size_t i) const;
    QuarterInt quadratic(std::size_t i, std::size_t j) const;

    void add_offset(QuarterInt w) { offset_ += w; }
    void add_linear(std::size_t i, QuarterInt w);
    /// i == j folds into the linear coefficient.
    void add_quadratic(std::size_t i, std::size_t j, QuarterInt w);

    /// Adds weight * (target - sum(literals))^2. `target` must be a half-integer.
    void add_square_penalty(QuarterInt target, std::span<const Literal> literals,
                            std::int64_t weight = 1);
    /// Adds weight * a * b.
    void add_pair_interaction(Literal a, Literal b, QuarterInt weight);
    /// Adds weight * a.
    void add_linear_term(Literal a, QuarterInt weight);

    QuarterInt energy(std::span<const std::uint8_t> x) const;

    friend bool operator==(const Qubo&, const Qubo&) = default;

 private:
    void check_index(std::size_t i) const;
    void check_literal(Literal l) const;

    std::size_t num_vars_ = 0;
    QuarterInt offset_;
    std::map<std::size_t, QuarterInt> linear_;
    std::map<Pair, QuarterInt> quadratic_;
};

/// Free-function forms, convenient when building from literal lists.
inline void add_square_penalty(Qubo& q, QuarterInt target, std::span<const Literal> lits,
                               std::int64_t weight = 1) {
    q.add_square_penalty(target, lits, weight);
}
inline void add_pair_interaction(Qubo& q, Literal a, Literal b, QuarterInt weight) {
    q.add_pair_interaction(a, b, weight);
}
inline void add_linear_term(Qubo& q, Literal a, QuarterInt weight) { q.add_linear_term(a, weight); }
inline QuarterInt energy(const Qubo& q, std::span<const std::uint8_t> x) { return q.energy(x); }

/// Line-oriented text format, coefficients as quarter-unit numerators:
///
///     QUBO <num_vars>
///     C <n>
///     L <i> <n>
///     Q <i> <j> <n>
///
/// Export writes indices ascending. Import ignores blank lines and lines
/// starting with '#'.
std::string export_qubo(const Qubo& q);
Qubo import_qubo(std::string_view text);

}  // namespace qpz
