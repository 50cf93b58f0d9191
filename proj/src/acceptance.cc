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

#include "coalg/acceptance.hh"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>

#include "coalg/barr.hh"
#include "coalg/bisim.hh"
#include "coalg/chains.hh"
#include "coalg/citm.hh"
#include "coalg/error.hh"
#include "coalg/gallery.hh"
#include "coalg/random_instances.hh"
#include "coalg/transition.hh"

namespace coalg {

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

constexpr const char* kOmega = "q: q\nroot q\n";
constexpr const char* kStaircase = "c: w c\nw: w\nroot c\n";

Outcome omega_bisimilarity(const AcceptanceOptions&) {
    const auto omega = parse_transition_system(kOmega);
    const auto stair = parse_transition_system(kStaircase);
    const auto both = disjoint_union(omega, stair);
    const Partition p = bisimilarity(both);
    const StateId a = *omega.root();
    const StateId b = static_cast<StateId>(omega.size()) + *stair.root();
    if (!p.same_block(a, b)) {
        return {false, "Omega and Omega' are not bisimilar"};
    }
    const Minimized m = minimize(stair, *stair.root());
    const bool loop = m.system.size() == 1 && m.system.successors(0) == std::vector<StateId>{0};
    if (!loop) {
        return {false, "minimising Omega' gave " + std::to_string(m.system.size()) + " states"};
    }
    return {true, "bisimilar; Omega' minimises to a 1-state self-loop"};
}

Outcome level_zero_separation(const AcceptanceOptions& o) {
    using namespace gallery;
    const auto t0 = build(Generator::T, 0);
    const auto s0 = build(Generator::S, 0);
    StratifiedChecker checker(o.depth, o.family_bound);
    const auto v0 = checker.check(t0, s0, 0);
    const auto v1 = checker.check(t0, s0, 1);
    if (!v0.equivalent) {
        return {false, "t_0 and s_0 differ under ≈_0: " + v0.witness->to_string()};
    }
    if (v1.equivalent) {
        return {false, "t_0 and s_0 agree under ≈_1"};
    }
    const bool omega_witness = v1.witness->kind == Witness::Kind::LeftChild
                               && v1.witness->child == build(Generator::OmegaPath)->key();
    if (!omega_witness) {
        return {false, "unexpected witness: " + v1.witness->to_string()};
    }
    return {true, "t_0 ≈_0 s_0; t_0 ≉_1 s_0 (" + v1.witness->to_string() + ")"};
}

Outcome cut_tables(const AcceptanceOptions& o) {
    std::size_t checked = 0;
    for (const auto& claim : gallery::cut_table_claims(8)) {
        const ETree expected = parse_etree(claim.expected);
        for (const auto& t : claim.trees) {
            const ETree got = gallery::cut_schematic(t, claim.depth, o.family_bound);
            if (!tree_iso(got, expected)) {
                return {false, t->key() + " cut at " + std::to_string(claim.depth) + " is "
                                   + canonical_code(got) + ", expected " + claim.expected};
            }
            ++checked;
        }
    }
    return {true, std::to_string(checked) + " displayed cuts reproduced"};
}

Outcome theorem_instances(const AcceptanceOptions& o) {
    using namespace gallery;
    StratifiedChecker checker(o.depth, o.family_bound);
    for (std::uint64_t i = 0; i <= 3; ++i) {
        const auto t = build(Generator::T, i);
        const auto s = build(Generator::S, i);
        const std::string n = std::to_string(i);
        if (!checker.check(t, s, i).equivalent) {
            return {false, "t_" + n + " ≉_" + n + " s_" + n};
        }
        if (checker.check(t, s, i + 1).equivalent) {
            return {false, "t_" + n + " ≈_" + std::to_string(i + 1) + " s_" + n};
        }
    }
    return {true, "t_i ≈_i s_i and t_i ≉_{i+1} s_i for i = 0..3"};
}

Outcome barr_agreement(const AcceptanceOptions& o) {
    const auto exhaustive = barr_vs_bisim_exhaustive(3);
    const auto random = barr_vs_bisim_harness(o.seed, o.count, o.max_states);
    const std::size_t d = exhaustive.disagreements() + random.disagreements();
    return {d == 0, std::to_string(exhaustive.total()) + " exhaustive + "
                        + std::to_string(random.total()) + " random systems, "
                        + std::to_string(d) + " disagreements"};
}

Outcome oracle_equivalence(const AcceptanceOptions& o) {
    std::vector<TransitionSystem> suite = all_systems_up_to(3);
    InstanceRng rng(o.seed);
    for (std::size_t k = 0; k < o.count; ++k) {
        suite.push_back(random_system(rng, o.max_states));
    }
    for (std::size_t k = 0; k < suite.size(); ++k) {
        if (!(bisimilarity(suite[k]) == bisimilarity_naive(suite[k]))) {
            return {false, "partitions differ on system " + std::to_string(k)};
        }
    }
    constexpr std::size_t kSamples = 1000;
    for (std::size_t k = 0; k < kSamples; ++k) {
        const TransitionSystem ts = random_system(rng, o.max_states);
        const std::size_t n = ts.size();
        const Relation r = random_relation(rng, n);
        Relation s = r;
        for (const auto& [a, b] : random_relation(rng, n).pairs()) {
            s.insert(a, b);
        }
        if (!phi_step(ts, r).subset_of(phi_step(ts, s))) {
            return {false, "Φ is not monotone on sample " + std::to_string(k)};
        }
        std::vector<std::uint32_t> labels(n);
        for (auto& l : labels) {
            l = static_cast<std::uint32_t>(rng.below(n));
        }
        if (!phi_step(ts, Partition(labels).as_relation()).is_equivalence()) {
            return {false, "Φ breaks an equivalence on sample " + std::to_string(k)};
        }
    }
    return {true, std::to_string(suite.size()) + " systems agree; "
                      + std::to_string(kSamples) + " Φ samples monotone and equivalence-preserving"};
}

Outcome chain_sizes(const AcceptanceOptions& o) {
    std::array<std::size_t, 6> initial_expected{0, 1, 2, 4, 16, 65536};
    const std::array<std::size_t, 5> terminal_expected{1, 2, 4, 16, 65536};
    if (o.corrupt_chain_table) {
        initial_expected[5] = 65535;
    }
    const auto initial = initial_chain_powerset(5);
    for (std::size_t i = 0; i < initial.size(); ++i) {
        if (initial[i].carrier.size() != initial_expected.at(i)) {
            return {false, "|W_" + std::to_string(i) + "| = " + std::to_string(initial[i].carrier.size())
                               + ", table says " + std::to_string(initial_expected.at(i))};
        }
    }
    const auto terminal = terminal_chain_powerset(4);
    for (std::size_t i = 0; i < terminal.size(); ++i) {
        if (terminal[i].carrier.size() != terminal_expected.at(i)) {
            return {false, "|V_" + std::to_string(i) + "| = " + std::to_string(terminal[i].carrier.size())
                               + ", table says " + std::to_string(terminal_expected.at(i))};
        }
    }
    // The 16 sets of rank <= 3 are exactly the extensional trees of height <= 3.
    std::set<std::string> codes;
    for (const HFSet& x : initial[4].carrier) {
        const ETree t = hf_to_tree(x);
        if (!is_extensional(t) || t.height() > 3) {
            return {false, x.code() + " does not give an extensional tree of height <= 3"};
        }
        if (!(tree_to_hf(t) == x) || !tree_iso(hf_to_tree(tree_to_hf(t)), t)) {
            return {false, "round trip fails at " + x.code()};
        }
        codes.insert(canonical_code(t));
    }
    if (codes.size() != 16) {
        return {false, std::to_string(codes.size()) + " distinct trees instead of 16"};
    }
    return {true, "initial 0,1,2,4,16,65536; terminal 1,2,4,16,65536; 16 trees round-trip"};
}

Outcome monad_laws(const AcceptanceOptions& o) {
    const Signature sig{{"a", 0}, {"b", 1}, {"c", 2}};
    const std::set<std::string> params{"y1", "y2"};
    constexpr std::size_t kInstances = 500;
    InstanceRng rng(o.seed);

    for (std::size_t k = 0; k < kInstances; ++k) {
        const EquationSystem sys = random_equation_system(rng, sig, 6, params);
        if (!verify_solution(sys, solve(sys), 32)) {
            return {false, "solution fails verification on system " + std::to_string(k)};
        }
    }

    auto random_map = [&] {
        std::map<std::string, RegularTree> m;
        for (const auto& y : params) {
            m.emplace(y, random_regular_tree(rng, sig, 4, params));
        }
        return m;
    };
    for (std::size_t k = 0; k < kInstances; ++k) {
        const RegularTree t = random_regular_tree(rng, sig, 5, params);
        std::map<std::string, RegularTree> unit;
        for (const auto& y : params) {
            unit.emplace(y, eta(sig, y));
        }
        if (!regular_equal(tree_substitute(t, unit), t)) {
            return {false, "right unit law fails on instance " + std::to_string(k)};
        }
        if (!regular_equal(tree_substitute(eta(sig, "y1"), {{"y1", t}}), t)) {
            return {false, "left unit law fails on instance " + std::to_string(k)};
        }
        const auto s = random_map();
        const auto r = random_map();
        std::map<std::string, RegularTree> sr;
        for (const auto& [y, sy] : s) {
            sr.emplace(y, tree_substitute(sy, r));
        }
        if (!regular_equal(tree_substitute(tree_substitute(t, s), r), tree_substitute(t, sr))) {
            return {false, "associativity fails on instance " + std::to_string(k)};
        }
    }

    std::size_t rejected = 0;
    for (std::size_t k = 0; k < kInstances; ++k) {
        const EquationSystem sys = random_equation_system(rng, sig, 6, params);
        std::vector<Equation> eqs = sys.equations();
        const std::size_t victim = rng.below(eqs.size());
        eqs[victim].rhs = Rhs::variable(eqs[rng.below(eqs.size())].variable);
        try {
            EquationSystem(sig, eqs, params);
        } catch (const UnguardedError&) {
            ++rejected;
        }
    }
    try {
        parse_equations(sig, "x = x\n");
    } catch (const UnguardedError&) {
        ++rejected;
    }
    if (rejected != kInstances + 1) {
        return {false, std::to_string(kInstances + 1 - rejected) + " unguarded systems accepted"};
    }
    return {true, "500 solutions verified to depth 32; 500 unit/associativity instances; "
                  "501 unguarded systems rejected"};
}

Outcome stratification_bridge(const AcceptanceOptions&) {
    const auto suite = all_systems_up_to(3);
    std::size_t pairs = 0;
    for (std::size_t k = 0; k < suite.size(); ++k) {
        const TransitionSystem& ts = suite[k];
        for (std::size_t n = 0; n <= 6; ++n) {
            const Relation phi = phi_power(ts, n);
            std::vector<std::string> codes;
            for (StateId q = 0; q < ts.size(); ++q) {
                codes.push_back(canonical_code(extensional_quotient(unfold(ts, q, n))));
            }
            for (StateId a = 0; a < ts.size(); ++a) {
                for (StateId b = 0; b < ts.size(); ++b) {
                    ++pairs;
                    if ((codes[a] == codes[b]) != phi.contains(a, b)) {
                        return {false, "system " + std::to_string(k) + ", level " + std::to_string(n)
                                           + ", states " + ts.name(a) + " " + ts.name(b)};
                    }
                }
            }
        }
    }
    return {true, std::to_string(suite.size()) + " systems, " + std::to_string(pairs)
                      + " (pair, level) checks agree"};
}

struct Criterion {
    const char* name;
    double limit_seconds;
    Outcome (*run)(const AcceptanceOptions&);
};

constexpr std::array<Criterion, kNumCriteria> kCriteria{{
    {"omega-bisimilarity", 1, omega_bisimilarity},
    {"level-zero-separation", 5, level_zero_separation},
    {"cut-tables", 10, cut_tables},
    {"theorem-instances", 60, theorem_instances},
    {"barr-equals-bisimilarity", 30, barr_agreement},
    {"oracle-equivalence", 30, oracle_equivalence},
    {"chains", 30, chain_sizes},
    {"monad-laws", 30, monad_laws},
    {"stratification-bridge", 30, stratification_bridge},
}};

} // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& opts) {
    if (id < 1 || id > kNumCriteria) {
        throw InvalidArgument("no acceptance criterion " + std::to_string(id));
    }
    const Criterion& c = kCriteria[static_cast<std::size_t>(id - 1)];
    CriterionResult r{id, c.name, false, {}, 0, c.limit_seconds};
    const auto start = std::chrono::steady_clock::now();
    try {
        Outcome o = c.run(opts);
        r.pass = o.pass;
        r.detail = std::move(o.detail);
    } catch (const std::exception& e) {
        r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.pass && r.seconds > r.limit_seconds) {
        r.pass = false;
        r.detail += "; exceeded the time limit of " + std::to_string(static_cast<int>(r.limit_seconds)) + " s";
    }
    return r;
}

AcceptanceReport run_acceptance(const AcceptanceOptions& opts) {
    AcceptanceReport report;
    for (int id = 1; id <= kNumCriteria; ++id) {
        report.results.push_back(run_criterion(id, opts));
    }
    return report;
}

bool AcceptanceReport::all_pass() const {
    return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
}

std::string AcceptanceReport::text(bool with_timing) const {
    std::string out;
    std::size_t passed = 0;
    for (const auto& r : results) {
        passed += r.pass ? 1 : 0;
        out += std::string(r.pass ? "PASS " : "FAIL ") + std::to_string(r.id) + " " + r.name;
        if (with_timing) {
            char buf[64];
            std::snprintf(buf, sizeof buf, " [%.3f s / %.0f s]", r.seconds, r.limit_seconds);
            out += buf;
        }
        out += ": " + r.detail + "\n";
    }
    out += std::to_string(passed) + "/" + std::to_string(results.size()) + " criteria passed\n";
    return out;
}

} // namespace coalg
