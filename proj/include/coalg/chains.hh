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
#include <memory>
#include <string>
#include <vector>

#include "coalg/signatures.hh"
#include "coalg/transition.hh"

namespace coalg {

/// Hereditarily finite set in canonical form.
///
/// Elements are kept sorted by (code length, code) and duplicate-free, so two
/// sets are equal iff their brace codes are equal. Copies share structure.
class HFSet {
public:
    /// The empty set.
    HFSet();
    /// Canonicalises: sorts and removes duplicates.
    explicit HFSet(std::vector<HFSet> elements);

    const std::vector<HFSet>& elements() const { return node_->elements; }
    std::size_t size() const { return node_->elements.size(); }
    bool empty() const { return node_->elements.empty(); }
    bool contains(const HFSet& x) const;
    /// Brace notation: `{}`, `{{}}`, `{{},{{}}}`.
    const std::string& code() const { return node_->code; }
    /// 0 for the empty set, else 1 + the largest element rank.
    std::size_t rank() const { return node_->rank; }

    bool operator==(const HFSet& o) const { return code() == o.code(); }
    std::strong_ordering operator<=>(const HFSet& o) const;

private:
    struct Node {
        std::vector<HFSet> elements;
        std::string code;
        std::size_t rank = 0;
    };
    std::shared_ptr<const Node> node_;
};

/// Parses brace notation. Throws ParseError.
HFSet parse_hfset(std::string_view text);

/// One stage of an initial or terminal chain.
///
/// For initial chains `connecting[k]` is the position in this stage of element
/// k of the previous stage (the inclusion). For terminal chains it is the
/// position in the previous stage of element k of this stage (the projection).
template <typename T>
struct ChainStage {
    std::size_t index = 0;
    std::vector<T> carrier;
    std::vector<std::size_t> connecting;
};

/// W_0 = ∅, W_{i+1} = P(W_i), stages 0..n. Throws LimitExceeded for n > 5.
std::vector<ChainStage<HFSet>> initial_chain_powerset(std::size_t n);

/// Initial chain of a polynomial functor. Terms are hash-consed: carriers hold
/// term ids, and equal ids across stages denote the same term, so every
/// inclusion is the identity on ids.
struct PolynomialChain {
    struct Node {
        std::string label;
        std::vector<std::uint32_t> children;
    };

    std::vector<ChainStage<std::uint32_t>> stages;
    std::vector<Node> nodes;

    Term term(std::uint32_t id) const;
    std::vector<std::size_t> sizes() const;
};

/// W_0 = ∅, W_{i+1} = H_Σ(W_i): stage i holds the terms of height < i, stages 0..n.
/// Throws LimitExceeded when a stage would exceed `max_elements`.
PolynomialChain initial_chain_polynomial(const Signature& sig, std::size_t n,
                                         std::size_t max_elements = 1'000'000);

/// Element of V_{i+1} = P(V_i): the sorted positions of its members in V_i.
/// The single element of V_0 has no members.
struct TerminalCode {
    std::vector<std::uint32_t> members;

    auto operator<=>(const TerminalCode&) const = default;
};

/// V_0 = 1, V_{i+1} = P(V_i), stages 0..n with projections V_{i+1} -> V_i.
/// Element k of stage i+1 is the subset of V_i whose bitmask is k.
/// Throws LimitExceeded for n > 4.
std::vector<ChainStage<TerminalCode>> terminal_chain_powerset(std::size_t n);

/// Throws InvalidArgument unless t is extensional.
HFSet tree_to_hf(const ETree& t);
ETree hf_to_tree(const HFSet& x);

/// Root whose children are the given trees.
ETree tupling(std::vector<ETree> children);

} // namespace coalg
