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

#include <set>
#include <stdexcept>

#include "qpz/compile.hpp"
#include "qpz/error.hpp"
#include "qpz/oracle.hpp"
#include "qpz/solvers.hpp"
#include "qpz/takuzu.hpp"

namespace qpz {

bool qubo_oracle_agreement(const Problem& p, std::size_t max_free_vars) {
    constexpr std::size_t kCap = std::size_t{1} << 20;
    const Enumeration truth = enumerate_solutions(p, kCap);
    if (truth.truncated) throw std::invalid_argument("oracle enumeration exceeded its cap");
    const std::set<BinaryGrid> expected(truth.solutions.begin(), truth.solutions.end());

    std::optional<Compiled> c;
    try {
        c.emplace(compile(p));
    } catch (const InfeasibleError&) {
        return expected.empty();
    }
    if (c->qubo.num_vars() > max_free_vars)
        throw std::invalid_argument("too many free variables for exhaustive agreement");
    if (c->floor.family == Family::max_pieces) {
        if (!truth.best_weight) return false;
        c->floor.max_independent_weight = truth.best_weight;
    }
    const QuarterInt floor = predicted_min_energy(c->floor);

    std::set<BinaryGrid> found;
    if (c->qubo.num_vars() == 0) {
        if (c->qubo.offset() == floor) found.insert(c->decode({}));
    } else {
        const SolveResult r = solve_exhaustive(c->qubo, kCap);
        if (r.optima_truncated) throw std::invalid_argument("too many optima");
        if (r.best_energy == floor)
            for (const Assignment& x : r.optima) found.insert(c->decode(x));
    }
    if (const auto* t = std::get_if<TakuzuProblem>(&p); t && t->unique_lines)
        std::erase_if(found, [&](const BinaryGrid& g) { return !check_global_nonrepetition(*t, g).ok; });
    return found == expected;
}

}  // namespace qpz
