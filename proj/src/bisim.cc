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

#include "coalg/bisim.hh"

#include <algorithm>
#include <deque>
#include <map>

#include "coalg/error.hh"
#include "text_util.hh"

namespace coalg {

// ---------------------------------------------------------------------------
// Relation / Partition

Relation Relation::total(std::size_t n) {
    Relation r(n);
    std::fill(r.bits_.begin(), r.bits_.end(), 1);
    return r;
}

Relation Relation::identity(std::size_t n) {
    Relation r(n);
    for (StateId a = 0; a < n; ++a) {
        r.insert(a, a);
    }
    return r;
}

std::size_t Relation::count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::vector<std::pair<StateId, StateId>> Relation::pairs() const {
    std::vector<std::pair<StateId, StateId>> out;
    for (StateId a = 0; a < n_; ++a) {
        for (StateId b = 0; b < n_; ++b) {
            if (contains(a, b)) {
                out.emplace_back(a, b);
            }
        }
    }
    return out;
}

bool Relation::subset_of(const Relation& other) const {
    if (n_ != other.n_) {
        throw InvalidArgument("relations over different universes");
    }
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] && !other.bits_[i]) {
            return false;
        }
    }
    return true;
}

Relation Relation::intersect(const Relation& other) const {
    if (n_ != other.n_) {
        throw InvalidArgument("relations over different universes");
    }
    Relation r(n_);
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        r.bits_[i] = bits_[i] & other.bits_[i];
    }
    return r;
}

bool Relation::is_equivalence() const {
    for (StateId a = 0; a < n_; ++a) {
        if (!contains(a, a)) {
            return false;
        }
        for (StateId b = 0; b < n_; ++b) {
            if (contains(a, b) != contains(b, a)) {
                return false;
            }
            if (!contains(a, b)) {
                continue;
            }
            for (StateId c = 0; c < n_; ++c) {
                if (contains(b, c) && !contains(a, c)) {
                    return false;
                }
            }
        }
    }
    return true;
}

Partition::Partition(const std::vector<std::uint32_t>& labels) : block_of_(labels.size()) {
    std::map<std::uint32_t, std::uint32_t> renumber;
    for (std::size_t s = 0; s < labels.size(); ++s) {
        auto [it, fresh] = renumber.emplace(labels[s], static_cast<std::uint32_t>(renumber.size()));
        block_of_[s] = it->second;
    }
    num_blocks_ = renumber.size();
}

std::vector<std::vector<StateId>> Partition::members() const {
    std::vector<std::vector<StateId>> out(num_blocks_);
    for (StateId s = 0; s < block_of_.size(); ++s) {
        out[block_of_[s]].push_back(s);
    }
    return out;
}

Relation Partition::as_relation() const {
    Relation r(block_of_.size());
    for (StateId a = 0; a < block_of_.size(); ++a) {
        for (StateId b = 0; b < block_of_.size(); ++b) {
            if (block_of_[a] == block_of_[b]) {
                r.insert(a, b);
            }
        }
    }
    return r;
}

Relation parse_relation(const TransitionSystem& ts, std::string_view text) {
    Relation r(ts.size());
    const auto ls = text::lines(text);
    for (std::size_t i = 0; i < ls.size(); ++i) {
        if (ls[i].empty()) {
            continue;
        }
        const auto w = text::words(ls[i]);
        if (w.size() != 2) {
            throw ParseError(i + 1, "expected a pair 'a b'");
        }
        const auto a = ts.find(w[0]);
        const auto b = ts.find(w[1]);
        if (!a || !b) {
            throw ParseError(i + 1, "unknown state '" + std::string(a ? w[1] : w[0]) + "'");
        }
        r.insert(*a, *b);
    }
    return r;
}

std::string to_string(const TransitionSystem& ts, const Relation& r) {
    std::string out;
    for (auto [a, b] : r.pairs()) {
        out += ts.name(a) + " " + ts.name(b) + "\n";
    }
    return out;
}

std::string to_string(const TransitionSystem& ts, const Partition& p) {
    std::string out;
    const auto blocks = p.members();
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        out += std::to_string(b) + ":";
        for (StateId s : blocks[b]) {
            out += " " + ts.name(s);
        }
        out += "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Φ

namespace {

void check_universe(const TransitionSystem& ts, const Relation& r) {
    if (r.universe() != ts.size()) {
        throw InvalidArgument("relation universe does not match the system");
    }
}

// Every successor of `a` has an R-partner among the successors of `b`
// and every successor of `b` has an R-partner among those of `a`.
bool phi_pair(const TransitionSystem& ts, const Relation& r, StateId a, StateId b) {
    const auto& sa = ts.successors(a);
    const auto& sb = ts.successors(b);
    for (StateId x : sa) {
        const std::uint8_t* row = r.row(x);
        if (std::none_of(sb.begin(), sb.end(), [&](StateId y) { return row[y] != 0; })) {
            return false;
        }
    }
    for (StateId y : sb) {
        if (std::none_of(sa.begin(), sa.end(), [&](StateId x) { return r.contains(x, y); })) {
            return false;
        }
    }
    return true;
}

} // namespace

Relation phi_step_serial(const TransitionSystem& ts, const Relation& r) {
    check_universe(ts, r);
    const std::size_t n = ts.size();
    Relation out(n);
    for (StateId a = 0; a < n; ++a) {
        for (StateId b = 0; b < n; ++b) {
            if (phi_pair(ts, r, a, b)) {
                out.insert(a, b);
            }
        }
    }
    return out;
}

Relation phi_step(const TransitionSystem& ts, const Relation& r) {
    check_universe(ts, r);
    const auto n = static_cast<std::int64_t>(ts.size());
    Relation out(ts.size());
#pragma omp parallel for schedule(dynamic, 8) if (n > 64)
    for (std::int64_t a = 0; a < n; ++a) {
        std::uint8_t* row = out.row(static_cast<StateId>(a));
        for (StateId b = 0; b < static_cast<StateId>(n); ++b) {
            row[b] = phi_pair(ts, r, static_cast<StateId>(a), b) ? 1 : 0;
        }
    }
    return out;
}

Relation phi_power(const TransitionSystem& ts, std::size_t k) {
    Relation r = Relation::total(ts.size());
    for (std::size_t i = 0; i < k; ++i) {
        Relation next = phi_step(ts, r);
        if (next == r) {
            break;
        }
        r = std::move(next);
    }
    return r;
}

bool stratified_equiv(const TransitionSystem& ts, StateId a, StateId b, std::size_t k) {
    if (a >= ts.size() || b >= ts.size()) {
        throw InvalidArgument("stratified_equiv: unknown state");
    }
    return phi_power(ts, k).contains(a, b);
}

bool check_witness(const TransitionSystem& ts, const Relation& r) {
    return r.subset_of(phi_step(ts, r));
}

// ---------------------------------------------------------------------------
// Partition refinement

Partition bisimilarity(const TransitionSystem& ts) {
    const std::size_t n = ts.size();
    if (n == 0) {
        return Partition(std::vector<std::uint32_t>{});
    }
    std::vector<std::vector<StateId>> pred(n);
    for (StateId s = 0; s < n; ++s) {
        for (StateId t : ts.successors(s)) {
            pred[t].push_back(s);
        }
    }

    std::vector<std::vector<StateId>> blocks(1);
    std::vector<std::uint32_t> block_of(n, 0);
    for (StateId s = 0; s < n; ++s) {
        blocks[0].push_back(s);
    }
    std::deque<std::uint32_t> queue{0};
    std::vector<bool> queued{true};

    std::vector<std::uint8_t> in_pre(n, 0);
    std::vector<std::uint32_t> hits;
    std::vector<StateId> pre;
    while (!queue.empty()) {
        const std::uint32_t splitter = queue.front();
        queue.pop_front();
        queued[splitter] = false;

        // States with at least one successor in the splitter.
        pre.clear();
        for (StateId t : blocks[splitter]) {
            for (StateId s : pred[t]) {
                if (!in_pre[s]) {
                    in_pre[s] = 1;
                    pre.push_back(s);
                }
            }
        }
        hits.assign(blocks.size(), 0);
        std::vector<std::uint32_t> touched;
        for (StateId s : pre) {
            if (hits[block_of[s]]++ == 0) {
                touched.push_back(block_of[s]);
            }
        }
        std::sort(touched.begin(), touched.end());
        for (std::uint32_t c : touched) {
            if (hits[c] == blocks[c].size()) {
                continue;
            }
            std::vector<StateId> inside, outside;
            for (StateId s : blocks[c]) {
                (in_pre[s] ? inside : outside).push_back(s);
            }
            const auto fresh = static_cast<std::uint32_t>(blocks.size());
            blocks[c] = std::move(inside);
            for (StateId s : outside) {
                block_of[s] = fresh;
            }
            blocks.push_back(std::move(outside));
            queued.push_back(false);
            for (std::uint32_t b : {c, fresh}) {
                if (!queued[b]) {
                    queued[b] = true;
                    queue.push_back(b);
                }
            }
        }
        for (StateId s : pre) {
            in_pre[s] = 0;
        }
    }
    return Partition(block_of);
}

Partition bisimilarity_naive(const TransitionSystem& ts) {
    const std::size_t n = ts.size();
    Relation r = Relation::total(n);
    bool stable = false;
    for (std::size_t step = 0; step <= n; ++step) {
        Relation next = phi_step(ts, r);
        if (next == r) {
            stable = true;
            break;
        }
        r = std::move(next);
    }
    if (!stable) {
        throw InternalError("Φ-iteration did not stabilise within |states| steps");
    }
    std::vector<std::uint32_t> labels(n);
    for (StateId a = 0; a < n; ++a) {
        StateId rep = a;
        for (StateId b = 0; b < a; ++b) {
            if (r.contains(a, b)) {
                rep = b;
                break;
            }
        }
        labels[a] = rep;
    }
    return Partition(labels);
}

Minimized minimize(const TransitionSystem& ts, StateId root) {
    if (root >= ts.size()) {
        throw InvalidArgument("minimize: unknown root state");
    }
    const Partition p = bisimilarity(ts);
    const auto blocks = p.members();

    std::vector<bool> reached(blocks.size(), false);
    std::vector<std::uint32_t> stack{p.block(root)};
    reached[p.block(root)] = true;
    while (!stack.empty()) {
        const std::uint32_t b = stack.back();
        stack.pop_back();
        for (StateId t : ts.successors(blocks[b].front())) {
            if (!reached[p.block(t)]) {
                reached[p.block(t)] = true;
                stack.push_back(p.block(t));
            }
        }
    }

    Minimized out;
    std::vector<std::optional<StateId>> block_state(blocks.size());
    for (std::uint32_t b = 0; b < blocks.size(); ++b) {
        if (reached[b]) {
            block_state[b] = out.system.add_state(ts.name(blocks[b].front()));
        }
    }
    for (std::uint32_t b = 0; b < blocks.size(); ++b) {
        if (!reached[b]) {
            continue;
        }
        std::vector<StateId> succ;
        for (StateId t : ts.successors(blocks[b].front())) {
            succ.push_back(*block_state[p.block(t)]);
        }
        out.system.set_successors(*block_state[b], std::move(succ));
    }
    out.root = *block_state[p.block(root)];
    out.system.set_root(out.root);
    out.quotient_map.resize(ts.size());
    for (StateId s = 0; s < ts.size(); ++s) {
        out.quotient_map[s] = block_state[p.block(s)];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Terminal-chain codes

std::vector<std::uint32_t> behavior_codes(const TransitionSystem& ts, std::size_t n) {
    const auto size = static_cast<std::int64_t>(ts.size());
    std::vector<std::uint32_t> codes(ts.size(), 0);
    std::vector<std::vector<std::uint32_t>> sets(ts.size());
    for (std::size_t level = 0; level < n; ++level) {
#pragma omp parallel for schedule(static) if (size > 256)
        for (std::int64_t q = 0; q < size; ++q) {
            auto& set = sets[static_cast<std::size_t>(q)];
            set.clear();
            for (StateId c : ts.successors(static_cast<StateId>(q))) {
                set.push_back(codes[c]);
            }
            std::sort(set.begin(), set.end());
            set.erase(std::unique(set.begin(), set.end()), set.end());
        }
        std::map<std::vector<std::uint32_t>, std::uint32_t> dense;
        for (const auto& set : sets) {
            dense.emplace(set, 0);
        }
        std::uint32_t next = 0;
        for (auto& [set, id] : dense) {
            id = next++;
        }
        for (std::size_t q = 0; q < sets.size(); ++q) {
            codes[q] = dense.at(sets[q]);
        }
    }
    return codes;
}

std::uint32_t behavior_index(const TransitionSystem& ts, StateId q, std::size_t n) {
    if (q >= ts.size()) {
        throw InvalidArgument("behavior_index: unknown state");
    }
    return behavior_codes(ts, n)[q];
}

} // namespace coalg
