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
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coalg {

/// Finite set of operation symbols with finite arities.
class Signature {
public:
    Signature() = default;
    Signature(std::initializer_list<std::pair<std::string, std::size_t>> symbols);

    /// Throws InvalidArgument on a duplicate name.
    void add(const std::string& name, std::size_t arity);

    std::optional<std::size_t> arity(std::string_view name) const;
    bool contains(std::string_view name) const { return arity(name).has_value(); }
    const std::map<std::string, std::size_t, std::less<>>& symbols() const { return symbols_; }
    std::size_t size() const { return symbols_.size(); }

    bool operator==(const Signature&) const = default;

private:
    std::map<std::string, std::size_t, std::less<>> symbols_;
};

/// Parses the `name/arity` format, one symbol per line.
Signature parse_signature(std::string_view text);
std::string to_string(const Signature& sig);

/// Well-founded Σ-tree.
struct Term {
    std::string label;
    std::vector<Term> children;

    std::size_t height() const;
    auto operator<=>(const Term&) const = default;
    bool operator==(const Term&) const = default;
};

/// Throws InvalidArgument unless every node's child count matches its arity.
void validate(const Term& t, const Signature& sig);
std::string to_string(const Term& t);

/// Finite tree whose nodes may be the hole marker ⊥ or a parameter leaf.
struct PartialTerm {
    enum class Kind { Node, Hole, Parameter };

    Kind kind = Kind::Hole;
    std::string name; ///< symbol for Node, parameter name for Parameter
    std::vector<PartialTerm> children;

    static PartialTerm hole() { return {}; }
    static PartialTerm parameter(std::string y) { return {Kind::Parameter, std::move(y), {}}; }
    static PartialTerm node(std::string symbol, std::vector<PartialTerm> children = {}) {
        return {Kind::Node, std::move(symbol), std::move(children)};
    }

    bool operator==(const PartialTerm&) const = default;
};

/// `σ(σ(⊥))`, parameters printed as `y`.
std::string to_string(const PartialTerm& t);

/// Argument of a regular-tree definition: a state or a parameter leaf.
struct TreeArg {
    enum class Kind { State, Parameter };

    Kind kind = Kind::State;
    std::string name;

    static TreeArg state(std::string s) { return {Kind::State, std::move(s)}; }
    static TreeArg parameter(std::string y) { return {Kind::Parameter, std::move(y)}; }
    bool is_parameter() const { return kind == Kind::Parameter; }

    auto operator<=>(const TreeArg&) const = default;
    bool operator==(const TreeArg&) const = default;
};

struct TreeDefinition {
    std::string symbol;
    std::vector<TreeArg> args;

    bool operator==(const TreeDefinition&) const = default;
};

/// A finite pointed Σ-coalgebra denoting a rational Σ-tree with parameter leaves.
///
/// The root is a TreeArg so that a bare parameter leaf (the unit of the tree
/// monad) is representable without states. State names are opaque: two
/// presentations are the same tree iff regular_equal says so.
class RegularTree {
public:
    using Definitions = std::map<std::string, TreeDefinition, std::less<>>;

    /// Validates arities, references and the root. Throws InvalidArgument.
    RegularTree(Signature sig, Definitions defs, TreeArg root);

    const Signature& signature() const { return sig_; }
    const Definitions& definitions() const { return defs_; }
    const TreeArg& root() const { return root_; }
    const TreeDefinition& definition(std::string_view state) const;
    std::size_t num_states() const { return defs_.size(); }

    /// Parameters occurring in leaves reachable from the root.
    std::set<std::string> parameters() const;

private:
    Signature sig_;
    Definitions defs_;
    TreeArg root_;
};

/// Parses lines `state = name(arg,...)`, parameters written `$y`, and a final
/// `root state` (or `root $y`).
RegularTree parse_regular_tree(const Signature& sig, std::string_view text);
std::string to_string(const RegularTree& t);

/// Depth-d observation of the denoted tree; nodes at depth d become ⊥.
PartialTerm unfold_regular(const RegularTree& t, std::size_t depth);

/// Exact equality of denoted trees by product-automaton reachability.
/// Throws InvalidArgument when the signatures differ.
bool regular_equal(const RegularTree& t, const RegularTree& s);

/// unfold_regular(t, d) == unfold_regular(s, d), decided on pairs of states
/// without materialising the (possibly exponential) unfoldings.
bool regular_equal_to_depth(const RegularTree& t, const RegularTree& s, std::size_t depth);

/// The natural transformation from tuples to finite subsets: the image of the tuple.
template <typename T>
std::set<T> epsilon_powerset(std::span<const T> args) {
    return std::set<T>(args.begin(), args.end());
}

template <typename T>
std::set<T> epsilon_powerset(const std::vector<T>& args) {
    return epsilon_powerset(std::span<const T>(args));
}

/// Decides a basic equation between flat terms σ(x_1..x_n) ≈ ρ(y_1..y_m):
/// it holds in every powerset algebra iff both sides use the same variable set.
/// Variables are parameter leaves; any other argument is rejected with InvalidArgument.
bool flat_merge_holds(const PartialTerm& lhs, const PartialTerm& rhs);

/// Parses `σ(x,y)`-style expressions: identifiers with children are nodes,
/// bare identifiers are parameters (variables), `_` is the hole.
PartialTerm parse_partial_term(std::string_view text);

} // namespace coalg
