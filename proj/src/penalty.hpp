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

#include <vector>

#include "qpz/qubo.hpp"

namespace qpz::detail {

/// (target - sum(lits))^2, also when every cell of the group is already fixed
/// and the term degenerates to a constant.
inline void add_count_penalty(Qubo& q, QuarterInt target, const std::vector<Literal>& lits) {
    if (lits.empty()) {
        const auto t = target.numerator();
        q.add_offset(QuarterInt::from_quarters(t * t / 4));
        return;
    }
    q.add_square_penalty(target, lits);
}

}  // namespace qpz::detail
