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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coalg/transition.hh"

namespace coalg {

/// Binary relation on the states of one system, stored as a dense bit matrix.
class Relation {
public:
    Relation() = default;
    explicit Relation(std::size_t n) : n_(n), bits_(n * n, 0) {}

    static Relation empty(std::size_t n) { return Relation(n); }
    static Relation total(std::size_t n);
    static Relation identity(std::size_t n);

    std::size_t universe() const { return n_; }
    bool contains(StateId a, StateId b) const { return bits_[index(a, b)] != 0; }
    void insert(StateId a, StateId b) { bits_[index(a, b)] = 1; }
    void erase(StateId a, StateId b) { bits_[index(a, b)] = 0; }
    std::size_t count() const;
    std::vector<std::pair<StateId, StateId>> pairs() const;

    bool subset_of(const Relation& other) const;
    Relation intersect(const Relation& other) const;
    bool is_equivalence() const;

    bool operator==(const Relation&) const = default;

    /// Row-major storage; row a holds the b with (a, b) in the relation.
    const std::uint8_t* row(StateId a) const { return bits_.data() + std::size_t(a) * n_; }
    std::uint8_t* row(StateId a) { return bits_.data() + std::size_t(a) * n_; }

private:
    std::size_t index(StateId a, StateId b) const { return std::size_t(a) * n_ + b; }

    std::size_t n_ = 0;
    std::vector<std::uint8_t> bits_;
};

/// Total map from states to blocks. Blocks are numbered by their smallest
/// member, so block 0 contains state 0 and numbering is reproducible.
class Partition {
public:
    Partition() = default;
    /// Renumbers arbitrary labels canonically.
    explicit Partition(const std::vector<std::uint32_t>& labels);

    std::size_t num_states() const { return block_of_.size(); }
    std::size_t num_blocks() const { return num_blocks_; }
    std::uint32_t block(StateId s) const { return block_of_.at(s); }
    const std::vector<std::uint32_t>& blocks() const { return block_of_; }
    std::vector<std::vector<StateId>> members() const;
    bool same_block(StateId a, StateId b) const { return block(a) == block(b); }
    Relation as_relation() const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<std::uint32_t> block_of_;
    std::size_t num_blocks_ = 0;
};

/// Relation from `a b` lines of state names.
Relation parse_relation(const TransitionSystem& ts, std::string_view text);
std::string to_string(const TransitionSystem& ts, const Relation& r);
/// `<block>: s1 s2 ...`, one line per block.
std::string to_string(const TransitionSystem& ts, const Partition& p);

/// Φ(R): a Φ(R) b iff every successor of a is R-related to some successor of b
/// and every successor of b has an R-preimage among the successors of a.
/// Rows are computed in parallel with OpenMP.
Relation phi_step(const TransitionSystem& ts, const Relation& r);
/// Single-threaded reference for phi_step.
Relation phi_step_serial(const TransitionSystem& ts, const Relation& r);

/// Φ^k applied to the total relation.
Relation phi_power(const TransitionSystem& ts, std::size_t k);
bool stratified_equiv(const TransitionSystem& ts, StateId a, StateId b, std::size_t k);

/// Bisimilarity by splitter-queue partition refinement.
Partition bisimilarity(const TransitionSystem& ts);
/// Bisimilarity as the limit of Φ-iteration from the total relation.
/// Throws InternalError if the iteration does not stabilise within |states| steps.
Partition bisimilarity_naive(const TransitionSystem& ts);

/// R ⊆ Φ(R). The identity is not adjoined.
bool check_witness(const TransitionSystem& ts, const Relation& r);

struct Minimized {
    TransitionSystem system; ///< one state per reachable block, named by its smallest member
    StateId root = 0;
    /// Block state of every source state whose block is reachable, nullopt otherwise.
    std::vector<std::optional<StateId>> quotient_map;
};

/// Quotient by bisimilarity, restricted to blocks reachable from root's block.
Minimized minimize(const TransitionSystem& ts, StateId root);

/// Dense codes for the n-th terminal-chain approximant: codes[a] == codes[b] iff
/// a and b are Φ^n(total)-related. Level 0 is the constant 0; level n + 1 codes
/// number the distinct sets of level-n successor codes in lexicographic order.
/// Per-state set construction runs in parallel.
std::vector<std::uint32_t> behavior_codes(const TransitionSystem& ts, std::size_t n);
std::uint32_t behavior_index(const TransitionSystem& ts, StateId q, std::size_t n);

} // namespace coalg
