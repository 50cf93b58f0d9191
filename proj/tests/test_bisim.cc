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

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

#include "coalg/bisim.hh"
#include "coalg/error.hh"
#include "coalg/random_instances.hh"
#include "support.hh"

using namespace coalg;

TEST_CASE("relations and partitions") {
    Relation r(3);
    r.insert(0, 1);
    r.insert(2, 2);
    CHECK(r.count() == 2);
    CHECK(r.pairs() == std::vector<std::pair<StateId, StateId>>{{0, 1}, {2, 2}});
    CHECK(r.subset_of(Relation::total(3)));
    CHECK_FALSE(r.is_equivalence());
    CHECK(Relation::identity(3).is_equivalence());
    CHECK(r.intersect(Relation::identity(3)).count() == 1);

    const Partition p({7, 3, 7, 5});
    CHECK(p.blocks() == std::vector<std::uint32_t>{0, 1, 0, 2});
    CHECK(p.num_blocks() == 3);
    CHECK(p.members()[0] == std::vector<StateId>{0, 2});
    CHECK(p.as_relation().is_equivalence());
    CHECK(p.as_relation().count() == 6);
}

TEST_CASE("relation and partition text") {
    const auto ts = parse_transition_system("a: b\nb: a\nc:\n");
    const Relation r = parse_relation(ts, "a b\nb a\n");
    CHECK(r.count() == 2);
    CHECK(parse_relation(ts, to_string(ts, r)) == r);
    CHECK_THROWS_AS(parse_relation(ts, "a z\n"), ParseError);
    CHECK(to_string(ts, bisimilarity(ts)) == "0: a b\n1: c\n");
}

TEST_CASE("phi_step matches the definition, serially and in parallel") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        InstanceRng rng(seed);
        const auto ts = random_system(rng, 9);
        const Relation r = random_relation(rng, ts.size());
        const Relation expected = oracle::phi(ts, r);
        CHECK(phi_step(ts, r) == expected);
        CHECK(phi_step_serial(ts, r) == expected);
    }
    // Large enough for the parallel branch.
    InstanceRng rng(99);
    std::vector<std::vector<StateId>> succ(120);
    for (StateId a = 0; a < 120; ++a) {
        for (StateId b = 0; b < 120; ++b) {
            if (rng.chance(1, 30)) {
                succ[a].push_back(b);
            }
        }
    }
    const auto ts = make_system(succ);
    const Relation r = random_relation(rng, ts.size(), 9, 10);
    CHECK(phi_step(ts, r) == phi_step_serial(ts, r));
}

TEST_CASE("bisimilarity equals the largest bisimulation on every small system") {
    for (const auto& ts : all_systems_up_to(3)) {
        const Relation largest = oracle::largest_bisimulation(ts);
        CHECK(bisimilarity(ts).as_relation() == largest);
        CHECK(bisimilarity_naive(ts).as_relation() == largest);
        CHECK(check_witness(ts, largest));
    }
}

TEST_CASE("refinement and naive iteration agree on random systems") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        InstanceRng rng(seed);
        const auto ts = random_system(rng, 10);
        const Partition p = bisimilarity(ts);
        CHECK(p == bisimilarity_naive(ts));
        CHECK(check_witness(ts, p.as_relation()));
    }
}

TEST_CASE("bisimilarity is invariant under renumbering") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        InstanceRng rng(seed);
        const auto ts = random_system(rng, 8);
        const std::size_t n = ts.size();
        std::vector<StateId> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t i = n; i > 1; --i) {
            std::swap(perm[i - 1], perm[rng.below(i)]);
        }
        std::vector<std::vector<StateId>> succ(n);
        for (StateId a = 0; a < n; ++a) {
            for (StateId b : ts.successors(a)) {
                succ[perm[a]].push_back(perm[b]);
            }
        }
        const Partition p = bisimilarity(ts);
        const Partition q = bisimilarity(make_system(succ));
        for (StateId a = 0; a < n; ++a) {
            for (StateId b = 0; b < n; ++b) {
                CHECK(p.same_block(a, b) == q.same_block(perm[a], perm[b]));
            }
        }
    }
}

TEST_CASE("witness checking does not adjoin the identity") {
    const auto stair = parse_transition_system("c: w c\nw: w\n");
    const Relation cw = parse_relation(stair, "c w\n");
    CHECK_FALSE(check_witness(stair, cw));
    Relation closed = cw;
    closed.insert(0, 0);
    closed.insert(1, 1);
    CHECK(check_witness(stair, closed));
    CHECK(check_witness(stair, Relation::empty(2)));
}

TEST_CASE("phi is monotone and preserves equivalences") {
    InstanceRng rng(2024);
    for (int k = 0; k < 500; ++k) {
        const auto ts = random_system(rng, 7);
        const std::size_t n = ts.size();
        const Relation r = random_relation(rng, n);
        Relation s = r;
        for (const auto& [a, b] : random_relation(rng, n, 1, 3).pairs()) {
            s.insert(a, b);
        }
        CHECK(phi_step(ts, r).subset_of(phi_step(ts, s)));
        std::vector<std::uint32_t> labels(n);
        for (auto& l : labels) {
            l = static_cast<std::uint32_t>(rng.below(3));
        }
        CHECK(phi_step(ts, Partition(labels).as_relation()).is_equivalence());
    }
}

TEST_CASE("the phi chain descends to bisimilarity") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        InstanceRng rng(seed);
        const auto ts = random_system(rng, 7);
        Relation prev = Relation::total(ts.size());
        for (std::size_t k = 0; k <= ts.size() + 1; ++k) {
            const Relation cur = phi_power(ts, k);
            CHECK(cur.subset_of(prev));
            CHECK(cur.is_equivalence());
            prev = cur;
            for (StateId a = 0; a < ts.size(); ++a) {
                CHECK(stratified_equiv(ts, a, a, k));
            }
        }
        CHECK(prev == bisimilarity(ts).as_relation());
    }
}

TEST_CASE("behaviour codes index the phi chain") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        InstanceRng rng(seed);
        const auto ts = random_system(rng, 8);
        for (std::size_t n = 0; n <= 5; ++n) {
            const auto codes = behavior_codes(ts, n);
            const Relation phi = phi_power(ts, n);
            for (StateId a = 0; a < ts.size(); ++a) {
                CHECK(behavior_index(ts, a, n) == codes[a]);
                for (StateId b = 0; b < ts.size(); ++b) {
                    CHECK((codes[a] == codes[b]) == phi.contains(a, b));
                }
            }
        }
    }
}

TEST_CASE("minimisation of the staircase is the one-state loop") {
    const auto stair = parse_transition_system("c: w c\nw: w\nroot c\n");
    const Minimized m = minimize(stair, 0);
    REQUIRE(m.system.size() == 1);
    CHECK(m.system.successors(0) == std::vector<StateId>{0});
    CHECK(m.quotient_map == std::vector<std::optional<StateId>>{0, 0});
    CHECK(m.system.name(0) == "c");
}

TEST_CASE("minimisation is a homomorphic image with trivial bisimilarity") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        InstanceRng rng(seed);
        const auto ts = random_system(rng, 9);
        const Minimized m = minimize(ts, 0);
        const Partition p = bisimilarity(ts);
        CHECK(bisimilarity(m.system).num_blocks() == m.system.size());
        CHECK(m.system.size() <= p.num_blocks());

        std::vector<bool> keep(ts.size());
        for (StateId s : ts.reachable(0)) {
            keep[s] = true;
        }
        const auto [sub, to_sub] = induced_subsystem(ts, keep);
        std::vector<StateId> f(sub.size());
        for (StateId s = 0; s < ts.size(); ++s) {
            if (to_sub[s]) {
                REQUIRE(m.quotient_map[s].has_value());
                f[*to_sub[s]] = *m.quotient_map[s];
            }
        }
        CHECK(is_homomorphism(sub, m.system, f));
        for (StateId a = 0; a < ts.size(); ++a) {
            for (StateId b = 0; b < ts.size(); ++b) {
                if (m.quotient_map[a] && m.quotient_map[b]) {
                    CHECK((m.quotient_map[a] == m.quotient_map[b]) == p.same_block(a, b));
                }
            }
        }
    }
}
