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
#include <optional>
#include <string_view>
#include <vector>

#include "qpz/problems.hpp"
#include "qpz/qubo.hpp"

namespace qpz {

struct SolveStats {
    std::uint64_t flips = 0;
    int restarts = 0;
    double elapsed_seconds = 0.0;
};

struct SolveResult {
    Assignment best;
    QuarterInt best_energy;
    /// Exhaustive search only: every minimiser, in Gray-code visiting order, up to the cap.
    std::vector<Assignment> optima;
    bool optima_truncated = false;
    SolveStats stats;
};

inline constexpr std::size_t kMaxExhaustiveVars = 24;

/// Exact minimum by Gray-code enumeration of all 2^n assignments.
SolveResult solve_exhaustive(const Qubo& q, std::size_t cap = 1024);

struct AnnealParams {
    int restarts = 20;
    int sweeps = 2000;
    /// <= 0 picks the largest |flip delta| at the random start of each restart.
    double initial_temperature = 0.0;
    /// Geometric factor applied once per sweep.
    double cooling = 0.97;
    std::uint64_t seed = 0;
    /// Stop as soon as a restart reaches this energy.
    std::optional<QuarterInt> stop_at;
    bool parallel = false;
};

/// Metropolis single-flip annealing with incrementally maintained flip deltas.
/// Deterministic for a fixed seed, also when restarts run in parallel.
SolveResult solve_anneal(const Qubo& q, const AnnealParams& params = {});

/// Flip-delta bookkeeping shared by the annealer and the exhaustive search.
///
/// field(i) = a_i + sum_j b_ij x_j, so flipping x_i changes the energy by
/// (1 - 2 x_i) * field(i). All values are quarter-unit numerators.
class FlipState {
 public:
    FlipState(const Qubo& q, Assignment start);

    const Assignment& assignment() const { return x_; }
    std::int64_t energy() const { return energy_; }
    std::int64_t delta(std::size_t i) const { return x_[i] ? -field_[i] : field_[i]; }
    void flip(std::size_t i);

 private:
    struct Edge {
        std::size_t to;
        std::int64_t w;
    };
    std::vector<std::vector<Edge>> adj_;
    std::vector<std::int64_t> field_;
    Assignment x_;
    std::int64_t energy_;
};

/// What the analytic energy floor of a compiled model depends on.
struct FloorDescriptor {
    Family family = Family::nqueens;
    /// Number of penalties with a half-integer target; each has minimum 1/4.
    std::size_t half_target_terms = 0;
    /// Max-pieces only: the best achievable total piece weight.
    std::optional<long long> max_independent_weight;
};

/// Theoretical minimum energy. Throws std::invalid_argument for max-pieces
/// without a known independent-set weight.
QuarterInt predicted_min_energy(const FloorDescriptor& d);
/// Same, with the family given by name; throws on unknown names.
QuarterInt predicted_min_energy(std::string_view family, std::size_t half_target_terms,
                                std::optional<long long> max_independent_weight = {});

}  // namespace qpz
