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

#include "coalg/random_instances.hh"

#include <limits>

#include "coalg/error.hh"

namespace coalg {

std::uint64_t InstanceRng::below(std::uint64_t bound) {
    if (bound == 0) {
        throw InvalidArgument("InstanceRng::below: empty range");
    }
    // Rejection sampling keeps the draw exactly uniform.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max()
                                - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

TransitionSystem random_system(InstanceRng& rng, std::size_t max_states) {
    if (max_states == 0) {
        throw InvalidArgument("random_system: max_states must be positive");
    }
    const std::size_t n = 1 + rng.below(max_states);
    std::vector<std::vector<StateId>> succ(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (rng.coin()) {
                succ[a].push_back(static_cast<StateId>(b));
            }
        }
    }
    return make_system(succ);
}

std::vector<TransitionSystem> all_systems(std::size_t n) {
    if (n * n >= 24) {
        throw LimitExceeded("all_systems: more than 2^24 systems requested");
    }
    std::vector<TransitionSystem> out;
    const std::uint64_t count = std::uint64_t{1} << (n * n);
    out.reserve(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        std::vector<std::vector<StateId>> succ(n);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                if (mask >> (a * n + b) & 1U) {
                    succ[a].push_back(static_cast<StateId>(b));
                }
            }
        }
        out.push_back(make_system(succ));
    }
    return out;
}

std::vector<TransitionSystem> all_systems_up_to(std::size_t max_states) {
    std::vector<TransitionSystem> out;
    for (std::size_t n = 1; n <= max_states; ++n) {
        auto batch = all_systems(n);
        out.insert(out.end(), std::make_move_iterator(batch.begin()),
                   std::make_move_iterator(batch.end()));
    }
    return out;
}

Relation random_relation(InstanceRng& rng, std::size_t n, std::uint64_t num, std::uint64_t den) {
    Relation r(n);
    for (StateId a = 0; a < n; ++a) {
        for (StateId b = 0; b < n; ++b) {
            if (rng.chance(num, den)) {
                r.insert(a, b);
            }
        }
    }
    return r;
}

namespace {

template <typename T>
const T& pick(InstanceRng& rng, const std::vector<T>& v) {
    return v[rng.below(v.size())];
}

std::vector<std::pair<std::string, std::size_t>> symbol_list(const Signature& sig) {
    if (sig.size() == 0) {
        throw InvalidArgument("random instance: empty signature");
    }
    return {sig.symbols().begin(), sig.symbols().end()};
}

} // namespace

EquationSystem random_equation_system(InstanceRng& rng, const Signature& sig, std::size_t max_vars,
                                      const std::set<std::string>& params) {
    if (max_vars == 0) {
        throw InvalidArgument("random_equation_system: max_vars must be positive");
    }
    const auto symbols = symbol_list(sig);
    const std::vector<std::string> ys(params.begin(), params.end());
    const std::size_t n = 1 + rng.below(max_vars);
    std::vector<Equation> eqs;
    for (std::size_t i = 0; i < n; ++i) {
        Equation e;
        e.variable = "x" + std::to_string(i);
        if (!ys.empty() && rng.chance(1, 8)) {
            e.rhs = Rhs::parameter(pick(rng, ys));
        } else {
            const auto& [name, arity] = pick(rng, symbols);
            std::vector<TreeArg> args;
            for (std::size_t k = 0; k < arity; ++k) {
                if (!ys.empty() && rng.chance(1, 4)) {
                    args.push_back(TreeArg::parameter(pick(rng, ys)));
                } else {
                    args.push_back(TreeArg::state("x" + std::to_string(rng.below(n))));
                }
            }
            e.rhs = Rhs::apply(name, std::move(args));
        }
        eqs.push_back(std::move(e));
    }
    return EquationSystem(sig, std::move(eqs), params);
}

RegularTree random_regular_tree(InstanceRng& rng, const Signature& sig, std::size_t max_states,
                                const std::set<std::string>& params) {
    if (max_states == 0) {
        throw InvalidArgument("random_regular_tree: max_states must be positive");
    }
    const auto symbols = symbol_list(sig);
    const std::vector<std::string> ys(params.begin(), params.end());
    const std::size_t n = 1 + rng.below(max_states);
    auto arg = [&]() {
        if (!ys.empty() && rng.chance(1, 4)) {
            return TreeArg::parameter(pick(rng, ys));
        }
        return TreeArg::state("q" + std::to_string(rng.below(n)));
    };
    RegularTree::Definitions defs;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& [name, arity] = pick(rng, symbols);
        TreeDefinition d{name, {}};
        for (std::size_t k = 0; k < arity; ++k) {
            d.args.push_back(arg());
        }
        defs.emplace("q" + std::to_string(i), std::move(d));
    }
    TreeArg root = TreeArg::state("q0");
    if (!ys.empty() && rng.chance(1, 8)) {
        root = TreeArg::parameter(pick(rng, ys));
    }
    return RegularTree(sig, std::move(defs), std::move(root));
}

} // namespace coalg
