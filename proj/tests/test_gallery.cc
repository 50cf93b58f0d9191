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
#include "coalg/gallery.hh"

using namespace coalg;
using namespace coalg::gallery;

namespace {

TreePtr T(std::uint64_t i) { return build(Generator::T, i); }
TreePtr S(std::uint64_t i) { return build(Generator::S, i); }

// Cut built explicitly: families are expanded to `width` instances and the
// whole cut is quotiented at the end, with no memoisation or stabilisation test.
ETree explicit_cut(const TreePtr& t, std::size_t n, std::uint64_t width) {
    ETree out;
    if (n == 0) {
        return out;
    }
    for (const auto& item : t->items()) {
        if (const auto* c = std::get_if<TreePtr>(&item)) {
            out.children.push_back(explicit_cut(*c, n - 1, width));
        } else {
            for (const auto& c : instances(std::get<Family>(item), width)) {
                out.children.push_back(explicit_cut(c, n - 1, width));
            }
        }
    }
    return out;
}

std::vector<TreePtr> gallery_trees() {
    std::vector<TreePtr> out{build(Generator::OmegaPath), build(Generator::Staircase),
                             build(Generator::U), build(Generator::T, OrdinalIdx::omega()),
                             build(Generator::S, OrdinalIdx::omega())};
    for (std::uint64_t i = 0; i <= 5; ++i) {
        out.push_back(T(i));
        out.push_back(S(i));
        out.push_back(build(Generator::V, i));
        out.push_back(build(Generator::Path, i));
    }
    return out;
}

} // namespace

TEST_CASE("ordinal indices") {
    CHECK(OrdinalIdx::fin(3) < OrdinalIdx::omega());
    CHECK(OrdinalIdx::fin(3) < OrdinalIdx::fin(4));
    CHECK(OrdinalIdx::omega().to_string() == "w");
    CHECK_THROWS_AS(OrdinalIdx::omega().value(), InvalidArgument);
}

TEST_CASE("gallery expressions parse") {
    CHECK(parse_tree("T(3)")->key() == "T(3)");
    CHECK(parse_tree(" S(w) ")->key() == "S(w)");
    CHECK(parse_tree("S(omega)")->key() == "S(w)");
    CHECK(parse_tree("Omega")->key() == "Omega");
    CHECK(parse_tree("Staircase")->key() == "Staircase");
    CHECK(parse_tree("V(2)")->key() == "V(2)");
    CHECK(parse_tree("U")->key() == "U");
    CHECK_THROWS_AS(parse_tree("V(w)"), ParseError);
    CHECK_THROWS_AS(parse_tree("T"), ParseError);
    CHECK_THROWS_AS(parse_tree("U(1)"), ParseError);
    CHECK_THROWS_AS(parse_tree("Q(1)"), ParseError);
    CHECK_THROWS_AS(parse_tree("T(x)"), ParseError);
    CHECK_THROWS_AS(build(Generator::Path, OrdinalIdx::omega()), InvalidArgument);
}

TEST_CASE("explicit roots and bounded families") {
    const auto t = std::make_shared<const SchematicTree>(
        std::vector<ChildItem>{build(Generator::OmegaPath), Family{Generator::Path, 1, 3}});
    CHECK(t->key() == "root[Omega,{Path(k+1):k<3}]");
    CHECK(instances(Family{Generator::Path, 1, 3}, 10).size() == 3);
    CHECK(tree_iso(cut_schematic(t, 5, 4), parse_etree("( ((((())))) (()) ((())) (((()))) )")));
    CHECK_THROWS_AS(SchematicTree(std::vector<ChildItem>{Family{Generator::U, 0, std::nullopt}}),
                    InvalidArgument);
}

TEST_CASE("cuts agree with explicit expansion") {
    CutEngine engine;
    for (const auto& t : gallery_trees()) {
        for (std::size_t n = 0; n <= 5; ++n) {
            INFO(t->key() << " at depth " << n);
            const ETree expected = extensional_quotient(explicit_cut(t, n, 12));
            CHECK(tree_iso(engine.cut(t, n, 8), expected));
            CHECK(tree_iso(cut_schematic(t, n, 8), expected));
            CHECK(engine.code(t, n, 8) == canonical_code(expected));
        }
    }
}

TEST_CASE("finite presentations agree with schematic cuts") {
    for (const auto& t : {build(Generator::OmegaPath), build(Generator::Staircase),
                          build(Generator::Path, 0), build(Generator::Path, 4)}) {
        const auto fp = finite_presentation(t);
        REQUIRE(fp.has_value());
        for (std::size_t n = 0; n <= 8; ++n) {
            CHECK(tree_iso(cut_schematic(t, n, 8),
                           extensional_quotient(unfold(fp->first, fp->second, n))));
        }
    }
    CHECK_FALSE(finite_presentation(T(0)).has_value());
}

TEST_CASE("cut guards") {
    CHECK_THROWS_AS(cut_schematic(T(0), 9, 8), InvalidArgument);
    CHECK_THROWS_AS(cut_schematic(T(0), 3, 3), InvalidArgument);
    // Below the root Path(k) is cut at depth n - 1 and keeps growing up to k = n - 1.
    CHECK_THROWS_AS(cut_schematic(S(0), 6, 4), StabilizationError);
    CHECK_NOTHROW(cut_schematic(S(0), 5, 5));
    CHECK_NOTHROW(cut_schematic(S(0), 4, 4));
}

TEST_CASE("the separating pair at level zero") {
    const StratifiedVerdict v0 = stratified_check(T(0), S(0), 0, 16, 8);
    CHECK(v0.equivalent);
    CHECK(v0.depth_bound == 16);
    CHECK(v0.family_bound == 8);
    const StratifiedVerdict v1 = stratified_check(T(0), S(0), 1, 16, 8);
    REQUIRE_FALSE(v1.equivalent);
    REQUIRE(v1.witness.has_value());
    CHECK(v1.witness->kind == Witness::Kind::LeftChild);
    CHECK(v1.witness->level == 0);
    CHECK(v1.witness->child == "Omega");
    CHECK(v1.witness->to_string() == "left child Omega has no partner under ≈_0");

    const StratifiedVerdict flipped = stratified_check(S(0), T(0), 1, 16, 8);
    REQUIRE_FALSE(flipped.equivalent);
    CHECK(flipped.witness->kind == Witness::Kind::RightChild);
}

TEST_CASE("separation holds at every finite level checked") {
    StratifiedChecker checker(16, 8);
    for (std::size_t i = 0; i <= 4; ++i) {
        INFO("i = " << i);
        CHECK(checker.check(T(i), S(i), i).equivalent);
        for (std::size_t j = 0; j < i; ++j) {
            CHECK(checker.check(T(i), S(i), j).equivalent);
        }
        CHECK_FALSE(checker.check(T(i), S(i), i + 1).equivalent);
        CHECK_FALSE(checker.check(T(i), S(i), i + 2).equivalent);
    }
}

TEST_CASE("stratified checks are reflexive and symmetric") {
    StratifiedChecker checker(16, 8);
    const auto trees = gallery_trees();
    for (const auto& a : trees) {
        CHECK(checker.check(a, a, 3).equivalent);
    }
    for (const auto& a : trees) {
        for (const auto& b : trees) {
            for (std::size_t level = 0; level <= 2; ++level) {
                CHECK(checker.check(a, b, level).equivalent == checker.check(b, a, level).equivalent);
            }
        }
    }
}

TEST_CASE("cuts of distinct finite paths separate at level zero") {
    const StratifiedVerdict v = stratified_check(build(Generator::Path, 2), build(Generator::Path, 3),
                                                 0, 8, 8);
    REQUIRE_FALSE(v.equivalent);
    CHECK(v.witness->kind == Witness::Kind::Cut);
    CHECK(v.witness->cut_level == 3);
    CHECK(stratified_check(build(Generator::OmegaPath), build(Generator::Staircase), 5, 16, 8).equivalent);
}

TEST_CASE("checker bounds are validated") {
    CHECK_THROWS_AS(StratifiedChecker(7, 8), InvalidArgument);
    CHECK_THROWS_AS(StratifiedChecker(16, 7), InvalidArgument);
}

TEST_CASE("cut-table claims cover the displayed trees") {
    const auto claims = cut_table_claims(8);
    CHECK(claims.size() == 13);
    for (const auto& c : claims) {
        CHECK_FALSE(c.trees.empty());
        CHECK(is_extensional(parse_etree(c.expected)));
    }
}

TEST_CASE("gallery report") {
    const GalleryReport r = reproduce_counterexamples(1, 16, 8);
    CHECK(r.all_pass());
    CHECK(r.claims() == 17);
    const std::string text = r.text();
    CHECK(text.find("claims=17 pass=17\n") != std::string::npos);
    CHECK(text.find("FLAG") == std::string::npos);
    CHECK(text.find("INFO t_0 vs t_1") != std::string::npos);
    CHECK(text == reproduce_counterexamples(1, 16, 8).text());
    CHECK_THROWS_AS(reproduce_counterexamples(5, 16, 8), InvalidArgument);
}
