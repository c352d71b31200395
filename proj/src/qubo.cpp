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

#include "qpz/qubo.hpp"

#include <charconv>
#include <sstream>

#include "qpz/error.hpp"

namespace qpz {

std::string QuarterInt::to_string() const {
    if (num_ % 4 == 0) return std::to_string(num_ / 4);
    if (num_ % 2 == 0) return std::to_string(num_ / 2) + "/2";
    return std::to_string(num_) + "/4";
}

std::string to_string(Literal lit) {
    switch (lit.kind()) {
        case Literal::Kind::positive: return "x" + std::to_string(lit.index());
        case Literal::Kind::negated: return "!x" + std::to_string(lit.index());
        case Literal::Kind::zero: return "0";
        case Literal::Kind::one: return "1";
    }
    return "?";
}

namespace {

// A literal as the affine form  constant + sign * x_index.
struct Affine {
    int constant;
    int sign;  // 0 for constants
    std::size_t index;
};

Affine affine(Literal l) {
    switch (l.kind()) {
        case Literal::Kind::positive: return {0, 1, l.index()};
        case Literal::Kind::negated: return {1, -1, l.index()};
        case Literal::Kind::zero: return {0, 0, 0};
        case Literal::Kind::one: return {1, 0, 0};
    }
    return {0, 0, 0};
}

template <typename Map, typename Key>
void accumulate(Map& m, const Key& k, QuarterInt w) {
    if (w.is_zero()) return;
    auto [it, inserted] = m.try_emplace(k, w);
    if (!inserted) {
        it->second += w;
        if (it->second.is_zero()) m.erase(it);
    }
}

}  // namespace

void Qubo::check_index(std::size_t i) const {
    if (i >= num_vars_)
        throw StructuralError("variable index " + std::to_string(i) + " out of range (num_vars " +
                              std::to_string(num_vars_) + ")");
}

void Qubo::check_literal(Literal l) const {
    if (!l.is_constant()) check_index(l.index());
}

QuarterInt Qubo::linear(std::size_t i) const {
    auto it = linear_.find(i);
    return it == linear_.end() ? QuarterInt{} : it->second;
}

QuarterInt Qubo::quadratic(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    auto it = quadratic_.find({i, j});
    return it == quadratic_.end() ? QuarterInt{} : it->second;
}

void Qubo::add_linear(std::size_t i, QuarterInt w) {
    check_index(i);
    accumulate(linear_, i, w);
}

void Qubo::add_quadratic(std::size_t i, std::size_t j, QuarterInt w) {
    check_index(i);
    check_index(j);
    if (i == j) {
        accumulate(linear_, i, w);
        return;
    }
    if (i > j) std::swap(i, j);
    accumulate(quadratic_, Pair{i, j}, w);
}

void Qubo::add_square_penalty(QuarterInt target, std::span<const Literal> literals,
                              std::int64_t weight) {
    if (literals.empty()) throw StructuralError("square penalty needs at least one literal");
    if (weight < 1) throw StructuralError("square penalty weight must be >= 1");
    if (!target.is_half_integer())
        throw StructuralError("square penalty target must be a half-integer, got " +
                              target.to_string());
    for (Literal l : literals) check_literal(l);

    // (c - S - sum_k b_k x_k)^2 with S the constant part; d = c - S in quarters.
    std::vector<Affine> terms;
    terms.reserve(literals.size());
    std::int64_t d = target.numerator();
    for (Literal l : literals) {
        Affine a = affine(l);
        d -= 4 * a.constant;
        if (a.sign != 0) terms.push_back(a);
    }

    offset_ += QuarterInt::from_quarters(weight * d * d / 4);
    for (std::size_t k = 0; k < terms.size(); ++k) {
        // -2 d b_k + b_k^2, the latter folded from x^2 = x.
        add_linear(terms[k].index, QuarterInt::from_quarters(weight * (-2 * d * terms[k].sign + 4)));
        for (std::size_t l = k + 1; l < terms.size(); ++l) {
            add_quadratic(terms[k].index, terms[l].index,
                          QuarterInt::from_quarters(weight * 8 * terms[k].sign * terms[l].sign));
        }
    }
}

void Qubo::add_pair_interaction(Literal a, Literal b, QuarterInt weight) {
    check_literal(a);
    check_literal(b);
    Affine p = affine(a), r = affine(b);
    offset_ += weight * (p.constant * r.constant);
    if (p.sign != 0) add_linear(p.index, weight * (p.sign * r.constant));
    if (r.sign != 0) add_linear(r.index, weight * (r.sign * p.constant));
    if (p.sign != 0 && r.sign != 0) add_quadratic(p.index, r.index, weight * (p.sign * r.sign));
}

void Qubo::add_linear_term(Literal a, QuarterInt weight) {
    check_literal(a);
    Affine p = affine(a);
    offset_ += weight * p.constant;
    if (p.sign != 0) add_linear(p.index, weight * p.sign);
}

QuarterInt Qubo::energy(std::span<const std::uint8_t> x) const {
    if (x.size() != num_vars_)
        throw StructuralError("assignment has " + std::to_string(x.size()) + " bits, model has " +
                              std::to_string(num_vars_) + " variables");
    QuarterInt e = offset_;
    for (const auto& [i, w] : linear_)
        if (x[i]) e += w;
    for (const auto& [ij, w] : quadratic_)
        if (x[ij.first] && x[ij.second]) e += w;
    return e;
}

std::string export_qubo(const Qubo& q) {
    std::ostringstream os;
    os << "QUBO " << q.num_vars() << '\n';
    os << "C " << q.offset().numerator() << '\n';
    for (const auto& [i, w] : q.linear()) os << "L " << i << ' ' << w.numerator() << '\n';
    for (const auto& [ij, w] : q.quadratic())
        os << "Q " << ij.first << ' ' << ij.second << ' ' << w.numerator() << '\n';
    return os.str();
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

template <typename T>
T parse_number(std::string_view tok, int line) {
    T v{};
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size())
        throw ParseError(line, 0, "malformed number '" + std::string(tok) + "'");
    return v;
}

}  // namespace

Qubo import_qubo(std::string_view text) {
    Qubo q;
    bool have_header = false, have_offset = false;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;

        auto toks = split_ws(line);
        if (toks.empty() || toks[0].front() == '#') continue;

        const std::string_view tag = toks[0];
        auto expect = [&](std::size_t n) {
            if (toks.size() != n)
                throw ParseError(line_no, 0, "'" + std::string(tag) + "' record expects " +
                                                 std::to_string(n - 1) + " fields");
        };
        auto index = [&](std::string_view tok) {
            auto i = parse_number<std::size_t>(tok, line_no);
            if (i >= q.num_vars())
                throw ParseError(line_no, 0, "variable index " + std::to_string(i) + " out of range");
            return i;
        };

        if (tag == "QUBO") {
            expect(2);
            if (have_header) throw ParseError(line_no, 0, "duplicate QUBO header");
            q = Qubo(parse_number<std::size_t>(toks[1], line_no));
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError(line_no, 0, "expected 'QUBO <num_vars>' header");

        if (tag == "C") {
            expect(2);
            if (have_offset) throw ParseError(line_no, 0, "duplicate offset record");
            have_offset = true;
            q.add_offset(QuarterInt::from_quarters(parse_number<std::int64_t>(toks[1], line_no)));
        } else if (tag == "L") {
            expect(3);
            auto i = index(toks[1]);
            if (q.linear().contains(i))
                throw ParseError(line_no, 0, "duplicate linear key " + std::to_string(i));
            q.add_linear(i, QuarterInt::from_quarters(parse_number<std::int64_t>(toks[2], line_no)));
        } else if (tag == "Q") {
            expect(4);
            auto i = index(toks[1]);
            auto j = index(toks[2]);
            if (i == j) throw ParseError(line_no, 0, "diagonal quadratic key " + std::to_string(i));
            if (i > j) throw ParseError(line_no, 0, "quadratic key must satisfy i < j");
            if (q.quadratic().contains({i, j}))
                throw ParseError(line_no, 0, "duplicate quadratic key " + std::to_string(i) + " " +
                                                 std::to_string(j));
            q.add_quadratic(i, j,
                            QuarterInt::from_quarters(parse_number<std::int64_t>(toks[3], line_no)));
        } else {
            throw ParseError(line_no, 0, "unknown record '" + std::string(tag) + "'");
        }
    }
    if (!have_header) throw ParseError(0, 0, "missing QUBO header");
    return q;
}

}  // namespace qpz
