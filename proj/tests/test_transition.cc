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

#include "coalg/error.hh"
#include "coalg/random_instances.hh"
#include "coalg/transition.hh"
#include "support.hh"

using namespace coalg;

TEST_CASE("transition systems parse and print") {
    const auto ts = parse_transition_system("c: w c\nw: w\n\nroot c\n");
    REQUIRE(ts.size() == 2);
    CHECK(ts.root() == ts.id("c"));
    CHECK(ts.successors(ts.id("c")) == std::vector<StateId>{0, 1});
    CHECK(ts.successors(ts.id("w")) == std::vector<StateId>{1});
    CHECK(parse_transition_system(to_string(ts)) == ts);

    const auto dead = parse_transition_system("a:\n");
    CHECK(dead.successors(0).empty());
    CHECK_FALSE(dead.root().has_value());
}

TEST_CASE("transition system errors name the line") {
    try {
        parse_transition_system("a: b\nb: missing\n");
        FAIL("undeclared successor accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_transition_system("a: a\na: a\n"), ParseError);
    CHECK_THROWS_AS(parse_transition_system("a a\n"), ParseError);
    CHECK_THROWS_AS(parse_transition_system("a:\nroot b\n"), ParseError);
    TransitionSystem ts;
    ts.add_state("a");
    CHECK_THROWS_AS(ts.add_edge(0, 3), InvalidArgument);
    CHECK_THROWS_AS(ts.add_state("a"), InvalidArgument);
    CHECK_THROWS_AS(ts.id("b"), InvalidArgument);
}

TEST_CASE("reachability, unions and subsystems") {
    const auto ts = make_system({{1}, {1}, {0}});
    CHECK(ts.reachable(0) == std::vector<StateId>{0, 1});
    CHECK(ts.reachable(2) == std::vector<StateId>{0, 1, 2});

    const auto u = disjoint_union(ts, make_system({{0}}));
    CHECK(u.size() == 4);
    CHECK(u.name(3) == "1.s0");
    CHECK(u.successors(3) == std::vector<StateId>{3});

    const auto [sub, map] = induced_subsystem(ts, {true, true, false});
    CHECK(sub.size() == 2);
    CHECK_FALSE(map[2].has_value());
    CHECK_THROWS_AS(induced_subsystem(ts, {false, true, true}), InvalidArgument);
}

TEST_CASE("trees, codes and extensional quotients") {
    CHECK(canonical_code(leaf()) == "()");
    CHECK(path(3).height() == 3);
    CHECK(path(3).node_count() == 4);

    const ETree doubled = node({path(1), path(1), leaf()});
    CHECK_FALSE(is_extensional(doubled));
    const ETree e = extensional_quotient(doubled);
    CHECK(is_extensional(e));
    CHECK(e.node_count() == 4);
    CHECK(tree_iso(e, parse_etree("( (()) () )")));
    CHECK(tree_iso(parse_etree("(()(()))"), parse_etree("((())())")));
    CHECK_FALSE(tree_iso(path(2), path(3)));
    CHECK_THROWS_AS(parse_etree("(()"), ParseError);
    CHECK(render_tree(path(1)).find('\n') != std::string::npos);
}

TEST_CASE("unfolding follows the successor structure") {
    const auto omega = parse_transition_system("q: q\n");
    CHECK(tree_iso(unfold(omega, 0, 4), path(4)));
    const auto stair = parse_transition_system("c: w c\nw: w\n");
    const ETree t = unfold(stair, 0, 3);
    CHECK(t.node_count() == 10);
    CHECK(tree_iso(extensional_quotient(t), path(3)));
}

TEST_CASE("extensional quotients of cuts match a direct recursion") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        InstanceRng rng(seed);
        const auto ts = random_system(rng, 5);
        for (std::size_t n = 0; n <= 4; ++n) {
            ExtensionalStore store;
            const auto ids = quotient_cut_ids(ts, n, store);
            for (StateId q = 0; q < ts.size(); ++q) {
                const ETree direct = extensional_quotient(unfold(ts, q, n));
                CHECK(tree_iso(direct, parse_etree(oracle::cut_code(ts, q, n))));
                CHECK(tree_iso(store.materialize(ids[q]), direct));
                for (StateId r = 0; r < ts.size(); ++r) {
                    CHECK((ids[q] == ids[r])
                          == (oracle::cut_code(ts, q, n) == oracle::cut_code(ts, r, n)));
                }
            }
        }
    }
}

TEST_CASE("homomorphisms preserve successor sets") {
    const auto stair = parse_transition_system("c: w c\nw: w\n");
    const auto omega = parse_transition_system("q: q\n");
    CHECK(is_homomorphism(stair, omega, std::vector<StateId>{0, 0}));
    CHECK(is_homomorphism(stair, omega, std::map<std::string, std::string>{{"c", "q"}, {"w", "q"}}));
    const auto two = parse_transition_system("a: b\nb:\n");
    CHECK_FALSE(is_homomorphism(two, two, std::vector<StateId>{0, 0}));
    CHECK_THROWS_AS(is_homomorphism(two, omega, std::vector<StateId>{0}), InvalidArgument);
    CHECK_THROWS_AS(is_homomorphism(two, omega, std::vector<StateId>{0, 4}), InvalidArgument);
}

TEST_CASE("enumeration covers every system") {
    CHECK(all_systems(1).size() == 2);
    CHECK(all_systems(2).size() == 16);
    CHECK(all_systems(3).size() == 512);
    CHECK(all_systems_up_to(3).size() == 530);
    const auto two = all_systems(2);
    std::set<std::string> distinct;
    for (const auto& ts : two) {
        distinct.insert(to_string(ts));
    }
    CHECK(distinct.size() == 16);
}
