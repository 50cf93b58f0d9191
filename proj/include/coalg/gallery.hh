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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

#include "coalg/transition.hh"

namespace coalg::gallery {

/// Ordinal index restricted to the naturals and ω.
class OrdinalIdx {
public:
    static OrdinalIdx fin(std::uint64_t n) { return OrdinalIdx(false, n); }
    static OrdinalIdx omega() { return OrdinalIdx(true, 0); }

    bool is_omega() const { return omega_; }
    /// Throws InvalidArgument for ω.
    std::uint64_t value() const;
    std::string to_string() const;

    auto operator<=>(const OrdinalIdx&) const = default;

private:
    OrdinalIdx(bool omega, std::uint64_t n) : omega_(omega), n_(n) {}

    // Declared first so that the defaulted ordering puts every Fin(n) below ω.
    bool omega_;
    std::uint64_t n_;
};

enum class Generator {
    Path,      ///< path with n edges
    OmegaPath, ///< the infinite path Ω
    Staircase, ///< Ω': an infinite spine with an infinite path hanging off every node
    T,         ///< t_i
    S,         ///< s_i
    U,         ///< u_ω
    V,         ///< v^i_ω
};

std::string_view name(Generator g);

/// Generator applied to its index. Path and V carry a natural, T and S an
/// ordinal, the others nothing.
struct Application {
    Generator generator = Generator::OmegaPath;
    std::optional<OrdinalIdx> index;

    auto operator<=>(const Application&) const = default;
};

/// {g(k + offset) : k ∈ ℕ} or, when bounded, {g(k + offset) : k < bound}.
struct Family {
    Generator generator = Generator::Path;
    std::uint64_t offset = 0;
    std::optional<std::uint64_t> bound;

    auto operator<=>(const Family&) const = default;
};

class SchematicTree;

/// Child item of an explicit root: one subtree or a family of them.
using ChildItem = std::variant<std::shared_ptr<const SchematicTree>, Family>;

/// Tree whose children may come in ω-indexed families.
class SchematicTree {
public:
    /// Explicit root with the given child items.
    explicit SchematicTree(std::vector<ChildItem> items);
    /// Throws InvalidArgument when the index does not fit the generator.
    explicit SchematicTree(Application app);

    bool is_application() const { return app_.has_value(); }
    const std::optional<Application>& application() const { return app_; }
    /// Child items: explicit ones, or the generator's defining expansion.
    std::vector<ChildItem> items() const;

    /// Structural identity used for memoisation and witness reporting: `T(3)`, `S(w)`, ...
    const std::string& key() const { return key_; }

private:
    std::optional<Application> app_;
    std::vector<ChildItem> items_;
    std::string key_;
};

using TreePtr = std::shared_ptr<const SchematicTree>;

/// Builds a generator application. `index` is required for Path, T, S, V and
/// must be finite for Path and V; it must be absent otherwise.
TreePtr build(Generator g, std::optional<OrdinalIdx> index = std::nullopt);
TreePtr build(Generator g, std::uint64_t index);
/// Parses `T(3)`, `S(w)`, `V(2)`, `Path(0)`, `Omega`, `Staircase`, `U`.
TreePtr parse_tree(std::string_view text);

/// Instances of a family at indices 0..last (inclusive), clipped to the family bound.
std::vector<TreePtr> instances(const Family& f, std::uint64_t last);

/// Evaluates depth cuts of schematic trees with memoisation.
class CutEngine {
public:
    /// E(t|_n). A family contributes its instances at indices 0..family_bound and
    /// must be constant on the last two; otherwise StabilizationError.
    ETree cut(const TreePtr& t, std::size_t n, std::uint64_t family_bound);

    /// Canonical code of cut(t, n, family_bound).
    const std::string& code(const TreePtr& t, std::size_t n, std::uint64_t family_bound);

private:
    std::map<std::tuple<std::string, std::size_t, std::uint64_t>, std::pair<ETree, std::string>> memo_;
};

/// Extensional quotient of the depth-n cut. Requires n <= 8 and K >= 4
/// (InvalidArgument otherwise); throws StabilizationError when K is too small.
ETree cut_schematic(const TreePtr& t, std::size_t n, std::uint64_t family_bound);

struct Witness {
    enum class Kind {
        Cut,       ///< ≈_0 failed: the cuts at `cut_level` differ
        LeftChild, ///< a child of the left tree has no ≈_level partner on the right
        RightChild ///< a child of the right tree has no ≈_level partner on the left
    };

    Kind kind = Kind::Cut;
    std::size_t level = 0;     ///< the ≈_j whose matching failed (0 for Kind::Cut)
    std::size_t cut_level = 0; ///< only for Kind::Cut
    std::string child;         ///< key of the unmatched child

    std::string to_string() const;
};

struct StratifiedVerdict {
    bool equivalent = true;
    std::optional<Witness> witness;
    std::size_t depth_bound = 0;
    std::uint64_t family_bound = 0;
};

/// Bounded decision of t ≈_i s. ≈_0 compares cuts at every n <= depth_bound;
/// ≈_i for i > 0 matches children (families instantiated at 0..family_bound)
/// under every ≈_j, j < i. Requires depth_bound >= 8 and family_bound >= 8.
class StratifiedChecker {
public:
    StratifiedChecker(std::size_t depth_bound, std::uint64_t family_bound);

    StratifiedVerdict check(const TreePtr& t, const TreePtr& s, std::size_t level);

private:
    const StratifiedVerdict& check_memo(const TreePtr& t, const TreePtr& s, std::size_t level);
    std::vector<TreePtr> children(const TreePtr& t) const;
    std::uint64_t bound_for_cut(std::size_t n) const;

    std::size_t depth_bound_;
    std::uint64_t family_bound_;
    CutEngine cuts_;
    std::map<std::tuple<std::string, std::string, std::size_t>, StratifiedVerdict> memo_;
};

StratifiedVerdict stratified_check(const TreePtr& t, const TreePtr& s, std::size_t level,
                                   std::size_t depth_bound, std::uint64_t family_bound);

/// One displayed cut identity: every listed tree cut at `depth` must equal `expected`.
struct CutClaim {
    std::string label;                 ///< e.g. "(2)(b) t_i|2 = s_i|2, i >= 1"
    std::size_t depth = 0;
    std::vector<TreePtr> trees;
    std::string expected;              ///< tree in canonical-code notation
};

/// The displayed cut tables, with index families checked at i ∈ {0..max_index} (and ω).
std::vector<CutClaim> cut_table_claims(std::uint64_t max_index = 8);

struct ClaimResult {
    std::string section;
    std::string label;
    bool pass = false;
    bool gating = true; ///< informational rows do not count towards claims/pass
    std::string detail;
};

struct GalleryReport {
    std::vector<ClaimResult> results;
    std::size_t depth_bound = 0;
    std::uint64_t family_bound = 0;

    std::size_t claims() const;
    std::size_t passed() const;
    bool all_pass() const { return claims() == passed(); }
    /// Sections with PASS/FLAG/INFO lines, then `claims=N pass=M`.
    std::string text() const;
};

/// For i = 0..i_max (<= 4): t_i ≈_i s_i and t_i ≉_{i+1} s_i, plus the cut tables.
/// Finite instances of t_i ≉_{i+2} t_k are reported as INFO rows.
GalleryReport reproduce_counterexamples(std::size_t i_max, std::size_t depth_bound,
                                        std::uint64_t family_bound);

/// Finite presentation of a generator, for cross-checking with the transition module.
/// Only OmegaPath, Staircase and Path(n) are finitely presentable.
std::optional<std::pair<TransitionSystem, StateId>> finite_presentation(const TreePtr& t);

} // namespace coalg::gallery
