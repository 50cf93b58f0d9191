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

#include "coalg/barr.hh"
#include "coalg/bisim.hh"
#include "coalg/error.hh"
#include "coalg/random_instances.hh"
#include "support.hh"

using namespace coalg;

TEST_CASE("Barr equivalence on the infinite path and the staircase") {
    const auto u = disjoint_union(parse_transition_system("q: q\n"),
                                  parse_transition_system("c: w c\nw: w\n"));
    const BarrVerdict v = barr_equiv(u, 0, 1, 10);
    CHECK_FALSE(v.distinguished());
    CHECK(v.bound == 10);
    CHECK_FALSE(v.witness_level.has_value());
}

TEST_CASE("Barr equivalence reports the least distinguishing level") {
    const auto ts = parse_transition_system("a: b\nb: a\nc: d\nd: e\ne:\n");
    const BarrVerdict v = barr_equiv(ts, ts.id("a"), ts.id("c"), 6);
    CHECK(v.distinguished());
    CHECK(v.witness_level == 3U);
    CHECK_FALSE(barr_equiv(ts, ts.id("a"), ts.id("c"), 2).distinguished());
    CHECK(complete_bound(ts, ts.id("a"), ts.id("c")) == 6);
    CHECK_THROWS_AS(barr_equiv(ts, 0, 1, 0), InvalidArgument);
    CHECK_THROWS_AS(barr_equiv(ts, 0, 9, 3), InvalidArgument);
}

TEST_CASE("witness levels match a direct comparison of cut codes") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        InstanceRng rng(seed);
        const auto ts = random_system(rng, 6);
        for (StateId a = 0; a < ts.size(); ++a) {
            for (StateId b = 0; b < ts.size(); ++b) {
                const std::size_t bound = 5;
                std::optional<std::size_t> least;
                for (std::size_t n = 1; n <= bound && !least; ++n) {
                    if (oracle::cut_code(ts, a, n) != oracle::cut_code(ts, b, n)) {
                        least = n;
                    }
                }
                const BarrVerdict v = barr_equiv(ts, a, b, bound);
                CHECK(v.witness_level == least);
                CHECK(v.distinguished() == least.has_value());
            }
        }
    }
}

TEST_CASE("agreement up to the complete bound decides bisimilarity") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        InstanceRng rng(seed);
        const auto ts = random_system(rng, 7);
        const Partition p = bisimilarity(ts);
        for (StateId a = 0; a < ts.size(); ++a) {
            for (StateId b = 0; b < ts.size(); ++b) {
                const std::size_t k = complete_bound(ts, a, b);
                CHECK(k == ts.reachable(a).size() * ts.reachable(b).size());
                CHECK(barr_equiv(ts, a, b, k).distinguished() != p.same_block(a, b));
            }
        }
    }
}

TEST_CASE("harness: serial and parallel runs agree and repeat") {
    const HarnessReport par = barr_vs_bisim_harness(42, 200, 6);
    const HarnessReport ser = barr_vs_bisim_harness_serial(42, 200, 6);
    CHECK(par.text() == ser.text());
    CHECK(par.text() == barr_vs_bisim_harness(42, 200, 6).text());
    CHECK(par.total() == 200);
    CHECK(par.disagreements() == 0);
    CHECK(par.agreements() == 200);
    CHECK(par.text().find("200/200 systems, 0 disagreements") != std::string::npos);
    auto sizes = [](const HarnessReport& r) {
        std::vector<std::size_t> out;
        for (const auto& i : r.instances) {
            out.push_back(i.states);
        }
        return out;
    };
    CHECK(sizes(barr_vs_bisim_harness(43, 200, 6)) != sizes(par));
    CHECK_THROWS_AS(barr_vs_bisim_harness(1, 10, 11), InvalidArgument);
}

TEST_CASE("harness: exhaustive suite") {
    const HarnessReport r = barr_vs_bisim_exhaustive(3);
    CHECK(r.total() == 530);
    CHECK(r.disagreements() == 0);
    CHECK_THROWS_AS(barr_vs_bisim_exhaustive(5), LimitExceeded);
}

TEST_CASE("harness counts disagreements per instance") {
    const auto ts = parse_transition_system("a: b\nb:\n");
    const HarnessInstance inst = compare_barr_bisim(ts, 7);
    CHECK(inst.id == 7);
    CHECK(inst.states == 2);
    CHECK(inst.pairs == 3);
    CHECK(inst.disagreements == 0);
}
