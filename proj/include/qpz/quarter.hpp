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

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace qpz {

/// Exact energy value on the quarter-integer grid: value == numerator / 4.
///
/// Every constant that appears in the penalty constructions is an integer or
/// a half-integer, so squared terms land exactly on multiples of 1/4.
class QuarterInt {
 public:
    constexpr QuarterInt() = default;

    static constexpr QuarterInt from_quarters(std::int64_t n) { return QuarterInt(n); }
    static constexpr QuarterInt from_halves(std::int64_t n) { return QuarterInt(2 * n); }
    static constexpr QuarterInt from_int(std::int64_t n) { return QuarterInt(4 * n); }

    constexpr std::int64_t numerator() const { return num_; }
    constexpr bool is_integer() const { return num_ % 4 == 0; }
    constexpr bool is_half_integer() const { return num_ % 2 == 0; }
    constexpr bool is_zero() const { return num_ == 0; }
    double to_double() const { return static_cast<double>(num_) / 4.0; }

    /// "9/4", "-1", "1/2", "0".
    std::string to_string() const;

    constexpr QuarterInt operator-() const { return QuarterInt(-num_); }
    constexpr QuarterInt& operator+=(QuarterInt o) {
        num_ += o.num_;
        return *this;
    }
    constexpr QuarterInt& operator-=(QuarterInt o) {
        num_ -= o.num_;
        return *this;
    }
    constexpr QuarterInt& operator*=(std::int64_t k) {
        num_ *= k;
        return *this;
    }

    friend constexpr QuarterInt operator+(QuarterInt a, QuarterInt b) { return a += b; }
    friend constexpr QuarterInt operator-(QuarterInt a, QuarterInt b) { return a -= b; }
    friend constexpr QuarterInt operator*(QuarterInt a, std::int64_t k) { return a *= k; }
    friend constexpr QuarterInt operator*(std::int64_t k, QuarterInt a) { return a *= k; }

    friend constexpr auto operator<=>(QuarterInt, QuarterInt) = default;
    friend constexpr bool operator==(QuarterInt, QuarterInt) = default;

 private:
    constexpr explicit QuarterInt(std::int64_t n) : num_(n) {}
    std::int64_t num_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, QuarterInt q) { return os << q.to_string(); }

}  // namespace qpz
