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

#include "qpz/solvers.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <future>
#include <random>
#include <stdexcept>

#include "qpz/error.hpp"

namespace qpz {

FlipState::FlipState(const Qubo& q, Assignment start)
    : adj_(q.num_vars()), field_(q.num_vars(), 0), x_(std::move(start)) {
    if (x_.size() != q.num_vars()) throw StructuralError("start assignment has the wrong length");
    for (const auto& [i, w] : q.linear()) field_[i] = w.numerator();
    for (const auto& [ij, w] : q.quadratic()) {
        adj_[ij.first].push_back({ij.second, w.numerator()});
        adj_[ij.second].push_back({ij.first, w.numerator()});
        if (x_[ij.second]) field_[ij.first] += w.numerator();
        if (x_[ij.first]) field_[ij.second] += w.numerator();
    }
    energy_ = q.energy(x_).numerator();
}

void FlipState::flip(std::size_t i) {
    energy_ += delta(i);
    x_[i] ^= 1;
    const std::int64_t sign = x_[i] ? 1 : -1;
    for (const Edge& e : adj_[i]) field_[e.to] += sign * e.w;
}

SolveResult solve_exhaustive(const Qubo& q, std::size_t cap) {
    const std::size_t n = q.num_vars();
    if (n > kMaxExhaustiveVars)
        throw StructuralError("exhaustive search limited to " + std::to_string(kMaxExhaustiveVars) +
                              " variables, model has " + std::to_string(n));
    const auto t0 = std::chrono::steady_clock::now();
    FlipState s(q, Assignment(n, 0));
    std::int64_t best = s.energy();
    SolveResult r;
    r.optima.push_back(s.assignment());
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < total; ++k) {
        s.flip(static_cast<std::size_t>(std::countr_zero(k)));
        const std::int64_t e = s.energy();
        if (e < best) {
            best = e;
            r.optima.clear();
            r.optima_truncated = false;
            r.optima.push_back(s.assignment());
        } else if (e == best) {
            if (r.optima.size() < cap)
                r.optima.push_back(s.assignment());
            else
                r.optima_truncated = true;
        }
    }
    r.best = r.optima.front();
    r.best_energy = QuarterInt::from_quarters(best);
    r.stats.flips = total - 1;
    r.stats.restarts = 1;
    r.stats.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

namespace {

struct RestartOutcome {
    Assignment best;
    std::int64_t energy;
    std::uint64_t flips;
};

RestartOutcome anneal_once(const Qubo& q, const AnnealParams& params, int restart) {
    const std::size_t n = q.num_vars();
    std::seed_seq seq{static_cast<std::uint32_t>(params.seed), static_cast<std::uint32_t>(params.seed >> 32),
                      static_cast<std::uint32_t>(restart)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    Assignment start(n);
    for (auto& b : start) b = static_cast<std::uint8_t>(rng() & 1);
    FlipState s(q, std::move(start));

    double temperature = params.initial_temperature;
    if (temperature <= 0.0) {
        std::int64_t widest = 0;
        for (std::size_t i = 0; i < n; ++i) widest = std::max(widest, std::abs(s.delta(i)));
        temperature = widest > 0 ? static_cast<double>(widest) / 4.0 : 1.0;
    }

    const std::int64_t target =
        params.stop_at ? params.stop_at->numerator() : std::numeric_limits<std::int64_t>::min();
    RestartOutcome out{s.assignment(), s.energy(), 0};
    for (int sweep = 0; sweep < params.sweeps && out.energy > target; ++sweep) {
        for (std::size_t i = 0; i < n; ++i) {
            const std::int64_t d = s.delta(i);
            if (d > 0 && unit(rng) >= std::exp(-static_cast<double>(d) / 4.0 / temperature)) continue;
            s.flip(i);
            ++out.flips;
            if (s.energy() < out.energy) {
                out.energy = s.energy();
                out.best = s.assignment();
                if (out.energy <= target) break;
            }
        }
        temperature *= params.cooling;
    }
    return out;
}

}  // namespace

SolveResult solve_anneal(const Qubo& q, const AnnealParams& params) {
    if (q.num_vars() == 0) throw StructuralError("annealing needs at least one variable");
    if (params.restarts < 1 || params.sweeps < 1)
        throw std::invalid_argument("restarts and sweeps must be positive");
    if (!(params.cooling > 0.0 && params.cooling < 1.0))
        throw std::invalid_argument("cooling factor must lie in (0, 1)");

    const auto t0 = std::chrono::steady_clock::now();
    std::vector<RestartOutcome> outcomes;
    if (params.parallel) {
        std::vector<std::future<RestartOutcome>> jobs;
        for (int r = 0; r < params.restarts; ++r)
            jobs.push_back(std::async(std::launch::async, anneal_once, std::cref(q), std::cref(params), r));
        for (auto& j : jobs) outcomes.push_back(j.get());
    } else {
        for (int r = 0; r < params.restarts; ++r) {
            outcomes.push_back(anneal_once(q, params, r));
            if (params.stop_at && outcomes.back().energy <= params.stop_at->numerator()) break;
        }
    }

    SolveResult res;
    const RestartOutcome* best = &outcomes.front();
    for (const auto& o : outcomes) {
        res.stats.flips += o.flips;
        if (o.energy < best->energy) best = &o;
    }
    res.best = best->best;
    res.best_energy = QuarterInt::from_quarters(best->energy);
    res.stats.restarts = static_cast<int>(outcomes.size());
    res.stats.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

QuarterInt predicted_min_energy(const FloorDescriptor& d) {
    if (d.family == Family::max_pieces) {
        if (!d.max_independent_weight)
            throw std::invalid_argument("max-pieces floor needs the maximum independent weight");
        return QuarterInt::from_int(-*d.max_independent_weight);
    }
    return QuarterInt::from_quarters(static_cast<std::int64_t>(d.half_target_terms));
}

QuarterInt predicted_min_energy(std::string_view family, std::size_t half_target_terms,
                                std::optional<long long> max_independent_weight) {
    return predicted_min_energy(
        FloorDescriptor{family_from_string(family), half_target_terms, max_independent_weight});
}

}  // namespace qpz
