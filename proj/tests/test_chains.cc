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

#include <set>

#include "coalg/chains.hh"
#include "coalg/error.hh"

using namespace coalg;

namespace {

// Ackermann coding: k denotes { decode(j) : bit j of k is set }. The sets of
// rank < i are exactly the codes below 2^^(i-1), independently of the library.
std::string ackermann(std::uint64_t k) {
    std::vector<std::string> elems;
    for (std::uint64_t j = 0; j < 64; ++j) {
        if (k >> j & 1U) {
            elems.push_back(ackermann(j));
        }
    }
    std::sort(elems.begin(), elems.end(), [](const std::string& a, const std::string& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::string out = "{";
    for (std::size_t i = 0; i < elems.size(); ++i) {
        out += (i > 0 ? "," : "") + elems[i];
    }
    return out + "}";
}

std::set<std::string> codes(const std::vector<HFSet>& carrier) {
    std::set<std::string> out;
    for (const auto& x : carrier) {
        out.insert(x.code());
    }
    return out;
}

} // namespace

TEST_CASE("hereditarily finite sets are canonical") {
    const HFSet empty;
    const HFSet one(std::vector<HFSet>{empty});
    const HFSet two(std::vector<HFSet>{empty, one});
    CHECK(empty.code() == "{}");
    CHECK(one.code() == "{{}}");
    CHECK(two.code() == "{{},{{}}}");
    CHECK(HFSet(std::vector<HFSet>{one, empty, one}) == two);
    CHECK(two.rank() == 2);
    CHECK(two.contains(one));
    CHECK_FALSE(one.contains(one));
    CHECK(parse_hfset(" { {{}} , {} } ") == two);
    CHECK(parse_hfset(two.code()) == two);
    CHECK_THROWS_AS(parse_hfset("{{}"), ParseError);
    CHECK_THROWS_AS(parse_hfset("{} x"), ParseError);
}

TEST_CASE("initial powerset chain: the cumulative hierarchy") {
    const auto w = initial_chain_powerset(5);
    REQUIRE(w.size() == 6);
    const std::vector<std::size_t> sizes{0, 1, 2, 4, 16, 65536};
    const std::vector<std::uint64_t> tower{0, 1, 2, 4, 16, 65536};
    for (std::size_t i = 0; i < w.size(); ++i) {
        CHECK(w[i].index == i);
        CHECK(w[i].carrier.size() == sizes[i]);
        for (const auto& x : w[i].carrier) {
            CHECK(x.rank() < i);
        }
        if (i <= 4) {
            std::set<std::string> expected;
            for (std::uint64_t k = 0; k < tower[i]; ++k) {
                expected.insert(ackermann(k));
            }
            CHECK(codes(w[i].carrier) == expected);
        }
    }
    // Connecting maps are the inclusions.
    for (std::size_t i = 1; i < w.size(); ++i) {
        REQUIRE(w[i].connecting.size() == w[i - 1].carrier.size());
        for (std::size_t k = 0; k < w[i - 1].carrier.size(); ++k) {
            CHECK(w[i].carrier[w[i].connecting[k]] == w[i - 1].carrier[k]);
        }
    }
    CHECK_THROWS_AS(initial_chain_powerset(6), LimitExceeded);
}

TEST_CASE("W_5 holds exactly the Ackermann codes below 65536") {
    const auto w = initial_chain_powerset(5);
    std::set<std::string> expected;
    for (std::uint64_t k = 0; k < 65536; ++k) {
        expected.insert(ackermann(k));
    }
    CHECK(codes(w[5].carrier) == expected);
}

TEST_CASE("terminal powerset chain") {
    const auto v = terminal_chain_powerset(4);
    REQUIRE(v.size() == 5);
    const std::vector<std::size_t> sizes{1, 2, 4, 16, 65536};
    for (std::size_t i = 0; i < v.size(); ++i) {
        CHECK(v[i].carrier.size() == sizes[i]);
    }
    CHECK(v[1].connecting == std::vector<std::size_t>{0, 0});
    // V_2 -> V_1 is the direct image under V_1 -> V_0: nonempty subsets go to {0}.
    CHECK(v[2].connecting == std::vector<std::size_t>{0, 1, 1, 1});
    // Every projection is onto and respects the direct-image description.
    for (std::size_t i = 2; i < v.size(); ++i) {
        std::set<std::size_t> image(v[i].connecting.begin(), v[i].connecting.end());
        CHECK(image.size() == v[i - 1].carrier.size());
        for (std::size_t k = 0; k < v[i].carrier.size(); ++k) {
            std::uint64_t mask = 0;
            for (std::uint32_t m : v[i].carrier[k].members) {
                mask |= std::uint64_t{1} << v[i - 1].connecting[m];
            }
            CHECK(v[i].connecting[k] == mask);
        }
    }
    CHECK_THROWS_AS(terminal_chain_powerset(5), LimitExceeded);
}

TEST_CASE("polynomial initial chains follow the size recurrence") {
    auto recurrence = [](const Signature& sig, std::size_t n) {
        std::vector<std::size_t> s{0};
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t next = 0;
            for (const auto& [name, arity] : sig.symbols()) {
                std::size_t p = 1;
                for (std::size_t k = 0; k < arity; ++k) {
                    p *= s.back();
                }
                next += p;
            }
            s.push_back(next);
        }
        return s;
    };
    const Signature nat{{"z", 0}, {"s", 1}};
    CHECK(initial_chain_polynomial(nat, 4).sizes() == std::vector<std::size_t>{0, 1, 2, 3, 4});
    const Signature bin{{"a", 0}, {"c", 2}};
    CHECK(initial_chain_polynomial(bin, 4).sizes() == std::vector<std::size_t>{0, 1, 2, 5, 26});
    const Signature mixed{{"a", 0}, {"b", 0}, {"f", 1}, {"g", 3}};
    CHECK(initial_chain_polynomial(mixed, 3).sizes() == recurrence(mixed, 3));

    const auto chain = initial_chain_polynomial(bin, 4);
    for (std::size_t i = 0; i < chain.stages.size(); ++i) {
        std::set<std::string> printed;
        for (auto id : chain.stages[i].carrier) {
            const Term t = chain.term(id);
            CHECK(t.height() < i);
            CHECK_NOTHROW(validate(t, bin));
            printed.insert(to_string(t));
        }
        CHECK(printed.size() == chain.stages[i].carrier.size());
    }
    for (std::size_t i = 1; i < chain.stages.size(); ++i) {
        for (std::size_t k = 0; k < chain.stages[i - 1].carrier.size(); ++k) {
            CHECK(chain.stages[i].carrier[chain.stages[i].connecting[k]]
                  == chain.stages[i - 1].carrier[k]);
        }
    }
    CHECK_THROWS_AS(initial_chain_polynomial(bin, 6, 1000), LimitExceeded);
    CHECK(initial_chain_polynomial(Signature{{"f", 1}}, 3).sizes()
          == std::vector<std::size_t>{0, 0, 0, 0});
}

TEST_CASE("extensional trees and hereditarily finite sets correspond") {
    const auto w = initial_chain_powerset(5);
    std::set<std::string> trees;
    for (const auto& x : w[4].carrier) {
        const ETree t = hf_to_tree(x);
        CHECK(is_extensional(t));
        CHECK(t.height() == x.rank());
        CHECK(tree_to_hf(t) == x);
        CHECK(tree_iso(hf_to_tree(tree_to_hf(t)), t));
        trees.insert(canonical_code(t));
    }
    CHECK(trees.size() == 16);

    for (std::size_t k = 0; k < w[5].carrier.size(); k += 97) {
        const HFSet& x = w[5].carrier[k];
        CHECK(tree_to_hf(hf_to_tree(x)) == x);
    }
    CHECK_THROWS_AS(tree_to_hf(node({leaf(), leaf()})), InvalidArgument);
    CHECK(tree_to_hf(extensional_quotient(node({leaf(), leaf()}))) == parse_hfset("{{}}"));
}

TEST_CASE("tupling builds the node with the given children") {
    const ETree t = tupling({path(1), leaf()});
    CHECK(t.children.size() == 2);
    CHECK(tree_iso(t, parse_etree("((())())")));
}
