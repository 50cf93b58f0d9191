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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coalg/transition.hh"

namespace coalg {

/// Outcome of a bounded Barr-equivalence check.
struct BarrVerdict {
    enum class Outcome { EquivalentUpToBound, Distinguished };

    Outcome outcome = Outcome::EquivalentUpToBound;
    std::optional<std::size_t> witness_level; ///< least distinguishing cut level
    std::size_t bound = 0;

    bool distinguished() const { return outcome == Outcome::Distinguished; }
    bool operator==(const BarrVerdict&) const = default;
};

/// Compares E(unfold(a, n)) and E(unfold(b, n)) for n = 1..bound.
/// Throws InvalidArgument for unknown states or bound == 0.
BarrVerdict barr_equiv(const TransitionSystem& ts, StateId a, StateId b, std::size_t bound);

/// |reach(a)| * |reach(b)|: agreement on all cuts up to this level implies bisimilarity.
std::size_t complete_bound(const TransitionSystem& ts, StateId a, StateId b);

struct HarnessInstance {
    std::size_t id = 0;
    std::size_t states = 0;
    std::size_t pairs = 0;
    std::size_t disagreements = 0;
};

struct HarnessReport {
    std::vector<HarnessInstance> instances;

    std::size_t total() const { return instances.size(); }
    std::size_t agreements() const;
    std::size_t disagreements() const;
    /// `id verdict` lines, then `agreements/total disagreements`.
    std::string text() const;
};

/// Decides every state pair of one system both ways (Barr at the complete
/// bound, partition refinement) and counts disagreements.
HarnessInstance compare_barr_bisim(const TransitionSystem& ts, std::size_t id);

/// `count` random systems with at most `max_states` (<= 10) states, evaluated in parallel.
HarnessReport barr_vs_bisim_harness(std::uint64_t seed, std::size_t count, std::size_t max_states);
/// Same instances evaluated on one thread; kept as the reference for the parallel path.
HarnessReport barr_vs_bisim_harness_serial(std::uint64_t seed, std::size_t count,
                                           std::size_t max_states);
/// Every system with at most `max_states` (<= 4) states.
HarnessReport barr_vs_bisim_exhaustive(std::size_t max_states);

} // namespace coalg
