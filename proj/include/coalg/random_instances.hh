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
#include <set>
#include <string>
#include <random>
#include <vector>

#include "coalg/bisim.hh"
#include "coalg/citm.hh"
#include "coalg/signatures.hh"
#include "coalg/transition.hh"

namespace coalg {

/// Reproducible instance generator. Only raw mt19937_64 output is consumed,
/// so the streams do not depend on the standard library's distributions.
class InstanceRng {
public:
    explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    bool coin() { return (engine_() >> 63) != 0; }
    /// True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::mt19937_64 engine_;
};

/// System with a uniform size in [1, max_states] and every edge present
/// independently with probability 1/2.
TransitionSystem random_system(InstanceRng& rng, std::size_t max_states);

/// Every system on exactly n states (2^(n*n) of them), in bitmask order.
std::vector<TransitionSystem> all_systems(std::size_t n);
/// Every system with 1..max_states states.
std::vector<TransitionSystem> all_systems_up_to(std::size_t max_states);

/// Relation with each pair present with probability num/den.
Relation random_relation(InstanceRng& rng, std::size_t n, std::uint64_t num = 1,
                         std::uint64_t den = 2);

/// Guarded flat system with 1..max_vars variables `x0`, `x1`, ... Each right-hand
/// side is a parameter with probability 1/8 (when there are parameters), otherwise
/// a uniformly chosen symbol applied to uniformly chosen variables and parameters.
EquationSystem random_equation_system(InstanceRng& rng, const Signature& sig, std::size_t max_vars,
                                      const std::set<std::string>& params);

/// Regular tree with 1..max_states states `q0`, `q1`, ... over `sig`; leaves may be
/// any of `params`. The root is a parameter with probability 1/8.
RegularTree random_regular_tree(InstanceRng& rng, const Signature& sig, std::size_t max_states,
                                const std::set<std::string>& params);

} // namespace coalg
