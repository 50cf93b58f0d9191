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

#include "coalg/barr.hh"

#include "coalg/bisim.hh"
#include "coalg/error.hh"
#include "coalg/random_instances.hh"

namespace coalg {

BarrVerdict barr_equiv(const TransitionSystem& ts, StateId a, StateId b, std::size_t bound) {
    if (a >= ts.size() || b >= ts.size()) {
        throw InvalidArgument("barr_equiv: unknown state");
    }
    if (bound == 0) {
        throw InvalidArgument("barr_equiv: bound must be at least 1");
    }
    BarrVerdict v;
    v.bound = bound;
    ExtensionalStore store;
    std::vector<ExtensionalStore::Id> cut(ts.size(), store.leaf());
    for (std::size_t n = 1; n <= bound; ++n) {
        cut = quotient_cut_step(ts, cut, store);
        if (cut[a] != cut[b]) {
            v.outcome = BarrVerdict::Outcome::Distinguished;
            v.witness_level = n;
            return v;
        }
    }
    return v;
}

std::size_t complete_bound(const TransitionSystem& ts, StateId a, StateId b) {
    return ts.reachable(a).size() * ts.reachable(b).size();
}

std::size_t HarnessReport::agreements() const {
    std::size_t n = 0;
    for (const auto& i : instances) {
        n += i.disagreements == 0 ? 1 : 0;
    }
    return n;
}

std::size_t HarnessReport::disagreements() const {
    std::size_t n = 0;
    for (const auto& i : instances) {
        n += i.disagreements;
    }
    return n;
}

std::string HarnessReport::text() const {
    std::string out;
    for (const auto& i : instances) {
        out += std::to_string(i.id) + " "
               + (i.disagreements == 0 ? "agree" : "disagree(" + std::to_string(i.disagreements) + ")")
               + "\n";
    }
    out += std::to_string(agreements()) + "/" + std::to_string(total()) + " systems, "
           + std::to_string(disagreements()) + " disagreements\n";
    return out;
}

HarnessInstance compare_barr_bisim(const TransitionSystem& ts, std::size_t id) {
    HarnessInstance inst{id, ts.size(), 0, 0};
    const Partition p = bisimilarity(ts);
    for (StateId a = 0; a < ts.size(); ++a) {
        for (StateId b = a; b < ts.size(); ++b) {
            const BarrVerdict v = barr_equiv(ts, a, b, std::max<std::size_t>(1, complete_bound(ts, a, b)));
            ++inst.pairs;
            if (v.distinguished() == p.same_block(a, b)) {
                ++inst.disagreements;
            }
        }
    }
    return inst;
}

namespace {

void check_harness_args(std::size_t max_states) {
    if (max_states == 0 || max_states > 10) {
        throw InvalidArgument("harness: max_states must be in 1..10");
    }
}

std::vector<TransitionSystem> harness_systems(std::uint64_t seed, std::size_t count,
                                              std::size_t max_states) {
    InstanceRng rng(seed);
    std::vector<TransitionSystem> systems;
    systems.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        systems.push_back(random_system(rng, max_states));
    }
    return systems;
}

HarnessReport evaluate_parallel(const std::vector<TransitionSystem>& systems) {
    HarnessReport report;
    report.instances.resize(systems.size());
    const auto count = static_cast<std::int64_t>(systems.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto k = static_cast<std::size_t>(i);
        report.instances[k] = compare_barr_bisim(systems[k], k);
    }
    return report;
}

} // namespace

HarnessReport barr_vs_bisim_harness(std::uint64_t seed, std::size_t count, std::size_t max_states) {
    check_harness_args(max_states);
    return evaluate_parallel(harness_systems(seed, count, max_states));
}

HarnessReport barr_vs_bisim_harness_serial(std::uint64_t seed, std::size_t count,
                                           std::size_t max_states) {
    check_harness_args(max_states);
    const auto systems = harness_systems(seed, count, max_states);
    HarnessReport report;
    for (std::size_t i = 0; i < systems.size(); ++i) {
        report.instances.push_back(compare_barr_bisim(systems[i], i));
    }
    return report;
}

HarnessReport barr_vs_bisim_exhaustive(std::size_t max_states) {
    if (max_states > 4) {
        throw LimitExceeded("exhaustive harness is limited to 4 states");
    }
    return evaluate_parallel(all_systems_up_to(max_states));
}

} // namespace coalg
