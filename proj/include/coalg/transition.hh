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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace coalg {

using StateId = std::uint32_t;

/// Finitely branching transition system: a coalgebra for the finite powerset functor.
///
/// States are numbered densely in declaration order; names are kept for I/O.
/// Successor lists are sorted and duplicate-free, so they are sets.
class TransitionSystem {
public:
    TransitionSystem() = default;

    /// Adds a state with no successors; returns its id. Throws on a duplicate name.
    StateId add_state(std::string name);
    /// Throws InvalidArgument for out-of-range ids.
    void add_edge(StateId from, StateId to);
    void set_successors(StateId s, std::vector<StateId> succ);

    std::size_t size() const { return names_.size(); }
    const std::vector<StateId>& successors(StateId s) const { return succ_.at(s); }
    const std::string& name(StateId s) const { return names_.at(s); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<StateId> find(std::string_view name) const;
    /// Throws InvalidArgument("unknown state ...").
    StateId id(std::string_view name) const;

    std::optional<StateId> root() const { return root_; }
    void set_root(StateId s);

    /// States reachable from `from` (including it), in increasing id order.
    std::vector<StateId> reachable(StateId from) const;

    bool operator==(const TransitionSystem&) const = default;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<StateId>> succ_;
    std::map<std::string, StateId, std::less<>> index_;
    std::optional<StateId> root_;
};

/// Parses `state: succ1 succ2 ...` lines and an optional `root state` line.
/// A successor must be declared by its own line somewhere in the file.
TransitionSystem parse_transition_system(std::string_view text);
std::string to_string(const TransitionSystem& ts);

/// Builds a system from an adjacency list; state i is named `s<i>`.
TransitionSystem make_system(const std::vector<std::vector<StateId>>& succ);

/// Disjoint union; states of `a` are renamed `0.<name>`, those of `b` `1.<name>`.
/// State i of `b` becomes `a.size() + i`.
TransitionSystem disjoint_union(const TransitionSystem& a, const TransitionSystem& b);

/// Subsystem on the states with keep[s]; also returns old -> new ids
/// (nullopt for dropped states). Throws unless the kept set is closed under successors.
std::pair<TransitionSystem, std::vector<std::optional<StateId>>>
induced_subsystem(const TransitionSystem& ts, const std::vector<bool>& keep);

/// Finite unordered tree. Children form a multiset before quotienting and a set after.
struct ETree {
    std::vector<ETree> children;

    std::size_t node_count() const;
    std::size_t height() const;
};

ETree leaf();
/// Path with `edges` edges (edges + 1 nodes).
ETree path(std::size_t edges);
ETree node(std::vector<ETree> children);

/// Canonical code: `(` + sorted child codes + `)`; a leaf is `()`.
std::string canonical_code(const ETree& t);
/// Parses the canonical-code notation (children in any order, whitespace ignored).
ETree parse_etree(std::string_view text);

/// Behavior tree of q truncated at depth n (nodes at depth n have no children).
ETree unfold(const TransitionSystem& ts, StateId q, std::size_t depth);

/// Merges siblings rooting isomorphic subtrees, bottom-up.
ETree extensional_quotient(const ETree& t);
bool is_extensional(const ETree& t);
bool tree_iso(const ETree& t, const ETree& s);

/// Indented plain-text rendering, one node per line.
std::string render_tree(const ETree& t);

/// Checks { f(a') : a' ∈ succ_src(a) } = succ_dst(f(a)) for every a.
/// Throws InvalidArgument if f is partial or maps outside dst.
bool is_homomorphism(const TransitionSystem& src, const TransitionSystem& dst,
                     const std::vector<StateId>& f);
bool is_homomorphism(const TransitionSystem& src, const TransitionSystem& dst,
                     const std::map<std::string, std::string>& f);

/// Hash-consed store of extensional trees. Equal ids iff isomorphic trees.
class ExtensionalStore {
public:
    using Id = std::uint32_t;

    ExtensionalStore();

    /// Id of the extensional tree whose children are the given trees (duplicates merged).
    Id make(std::vector<Id> children);
    Id leaf() const { return 0; }
    const std::vector<Id>& children(Id id) const { return nodes_.at(id); }
    std::size_t size() const { return nodes_.size(); }
    ETree materialize(Id id) const;

private:
    struct VecHash {
        std::size_t operator()(const std::vector<Id>& v) const noexcept;
    };

    std::vector<std::vector<Id>> nodes_;
    std::unordered_map<std::vector<Id>, Id, VecHash> index_;
};

/// Given ids of E(unfold(·, n)) for every state, returns those of E(unfold(·, n + 1)).
std::vector<ExtensionalStore::Id> quotient_cut_step(const TransitionSystem& ts,
                                                    const std::vector<ExtensionalStore::Id>& prev,
                                                    ExtensionalStore& store);

/// ids[q] = E(unfold(ts, q, depth)) for every state, sharing subtrees in `store`.
std::vector<ExtensionalStore::Id> quotient_cut_ids(const TransitionSystem& ts, std::size_t depth,
                                                   ExtensionalStore& store);

} // namespace coalg
