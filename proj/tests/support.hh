/*
 * Copyright 2026 The coalg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Independent reference computations used as oracles by the unit tests.
// They follow the textbook definitions directly and share no code with the
// library beyond the data types.

#include <set>
#include <string>
#include <vector>

#include "coalg/bisim.hh"
#include "coalg/transition.hh"

namespace oracle {

inline std::set<coalg::StateId> succ_set(const coalg::TransitionSystem& ts, coalg::StateId s) {
    const auto& v = ts.successors(s);
    return {v.begin(), v.end()};
}

/// Φ(R) straight from the definition, pair by pair.
inline coalg::Relation phi(const coalg::TransitionSystem& ts, const coalg::Relation& r) {
    const auto n = static_cast<coalg::StateId>(ts.size());
    coalg::Relation out(n);
    for (coalg::StateId a = 0; a < n; ++a) {
        for (coalg::StateId b = 0; b < n; ++b) {
            bool forth = true;
            for (auto x : succ_set(ts, a)) {
                bool found = false;
                for (auto y : succ_set(ts, b)) {
                    found = found || r.contains(x, y);
                }
                forth = forth && found;
            }
            bool back = true;
            for (auto y : succ_set(ts, b)) {
                bool found = false;
                for (auto x : succ_set(ts, a)) {
                    found = found || r.contains(x, y);
                }
                back = back && found;
            }
            if (forth && back) {
                out.insert(a, b);
            }
        }
    }
    return out;
}

/// Largest bisimulation as the union of every relation R with R ⊆ Φ(R).
/// Only usable for systems with at most 3 states (2^9 relations).
inline coalg::Relation largest_bisimulation(const coalg::TransitionSystem& ts) {
    const std::size_t n = ts.size();
    const std::size_t cells = n * n;
    coalg::Relation acc(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
        coalg::Relation r(n);
        for (std::size_t k = 0; k < cells; ++k) {
            if (mask >> k & 1U) {
                r.insert(static_cast<coalg::StateId>(k / n), static_cast<coalg::StateId>(k % n));
            }
        }
        if (r.subset_of(phi(ts, r))) {
            for (const auto& [a, b] : r.pairs()) {
                acc.insert(a, b);
            }
        }
    }
    return acc;
}

/// Canonical code of the extensional quotient of the depth-n behaviour tree,
/// computed by direct recursion on the system.
inline std::string cut_code(const coalg::TransitionSystem& ts, coalg::StateId q, std::size_t n) {
    if (n == 0) {
        return "()";
    }
    std::set<std::string> kids;
    for (auto s : ts.successors(q)) {
        kids.insert(cut_code(ts, s, n - 1));
    }
    std::string out = "(";
    for (const auto& k : kids) {
        out += k;
    }
    return out + ")";
}

} // namespace oracle
