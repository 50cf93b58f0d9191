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

#include "coalg/chains.hh"

#include <algorithm>
#include <map>

#include "coalg/error.hh"

namespace coalg {

// ---------------------------------------------------------------------------
// HFSet

namespace {

bool canonical_less(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    return a < b;
}

} // namespace

HFSet::HFSet() : HFSet(std::vector<HFSet>{}) {}

HFSet::HFSet(std::vector<HFSet> elements) {
    std::sort(elements.begin(), elements.end(),
              [](const HFSet& a, const HFSet& b) { return canonical_less(a.code(), b.code()); });
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    auto n = std::make_shared<Node>();
    n->code = "{";
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (i > 0) {
            n->code += ",";
        }
        n->code += elements[i].code();
        n->rank = std::max(n->rank, elements[i].rank() + 1);
    }
    n->code += "}";
    n->elements = std::move(elements);
    node_ = std::move(n);
}

bool HFSet::contains(const HFSet& x) const {
    return std::binary_search(
        elements().begin(), elements().end(), x,
        [](const HFSet& a, const HFSet& b) { return canonical_less(a.code(), b.code()); });
}

std::strong_ordering HFSet::operator<=>(const HFSet& o) const {
    if (code() == o.code()) {
        return std::strong_ordering::equal;
    }
    return canonical_less(code(), o.code()) ? std::strong_ordering::less
                                            : std::strong_ordering::greater;
}

namespace {

HFSet parse_hf_at(std::string_view s, std::size_t& pos) {
    auto skip = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
            ++pos;
        }
    };
    skip();
    if (pos >= s.size() || s[pos] != '{') {
        throw ParseError(0, "set notation: expected '{' at offset " + std::to_string(pos));
    }
    ++pos;
    std::vector<HFSet> elems;
    skip();
    if (pos < s.size() && s[pos] == '}') {
        ++pos;
        return HFSet(std::move(elems));
    }
    while (true) {
        elems.push_back(parse_hf_at(s, pos));
        skip();
        if (pos >= s.size()) {
            throw ParseError(0, "set notation: unbalanced braces");
        }
        if (s[pos] == ',') {
            ++pos;
            continue;
        }
        if (s[pos] == '}') {
            ++pos;
            return HFSet(std::move(elems));
        }
        throw ParseError(0, "set notation: expected ',' or '}'");
    }
}

} // namespace

HFSet parse_hfset(std::string_view text) {
    std::size_t pos = 0;
    HFSet x = parse_hf_at(text, pos);
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
    }
    if (pos != text.size()) {
        throw ParseError(0, "set notation: trailing input");
    }
    return x;
}

// ---------------------------------------------------------------------------
// Initial chains

std::vector<ChainStage<HFSet>> initial_chain_powerset(std::size_t n) {
    if (n > 5) {
        throw LimitExceeded("initial powerset chain is limited to stage 5 (|W_5| = 65536)");
    }
    std::vector<ChainStage<HFSet>> stages(1);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& prev = stages.back().carrier;
        ChainStage<HFSet> next;
        next.index = i + 1;
        const std::uint64_t subsets = std::uint64_t{1} << prev.size();
        next.carrier.reserve(subsets);
        for (std::uint64_t mask = 0; mask < subsets; ++mask) {
            std::vector<HFSet> elems;
            for (std::size_t k = 0; k < prev.size(); ++k) {
                if (mask >> k & 1U) {
                    elems.push_back(prev[k]);
                }
            }
            next.carrier.emplace_back(std::move(elems));
        }
        std::sort(next.carrier.begin(), next.carrier.end());
        for (const HFSet& x : prev) {
            auto it = std::lower_bound(next.carrier.begin(), next.carrier.end(), x);
            next.connecting.push_back(static_cast<std::size_t>(it - next.carrier.begin()));
        }
        stages.push_back(std::move(next));
    }
    return stages;
}

Term PolynomialChain::term(std::uint32_t id) const {
    const Node& n = nodes.at(id);
    Term t{n.label, {}};
    for (std::uint32_t c : n.children) {
        t.children.push_back(term(c));
    }
    return t;
}

std::vector<std::size_t> PolynomialChain::sizes() const {
    std::vector<std::size_t> out;
    for (const auto& s : stages) {
        out.push_back(s.carrier.size());
    }
    return out;
}

PolynomialChain initial_chain_polynomial(const Signature& sig, std::size_t n,
                                         std::size_t max_elements) {
    PolynomialChain chain;
    chain.stages.emplace_back();
    std::map<std::pair<std::string, std::vector<std::uint32_t>>, std::uint32_t> interned;

    for (std::size_t i = 0; i < n; ++i) {
        const std::vector<std::uint32_t> prev = chain.stages.back().carrier;

        // Σ_σ |W_i|^ar(σ), saturating at the guard.
        std::size_t predicted = 0;
        for (const auto& [name, arity] : sig.symbols()) {
            std::size_t count = 1;
            for (std::size_t k = 0; k < arity && count <= max_elements; ++k) {
                count *= prev.size();
            }
            predicted += std::min(count, max_elements + 1);
            if (predicted > max_elements) {
                throw LimitExceeded("polynomial chain stage " + std::to_string(i + 1)
                                    + " exceeds " + std::to_string(max_elements) + " elements");
            }
        }

        ChainStage<std::uint32_t> next;
        next.index = i + 1;
        next.carrier.reserve(predicted);
        for (const auto& [name, arity] : sig.symbols()) {
            if (arity > 0 && prev.empty()) {
                continue;
            }
            std::vector<std::size_t> digits(arity, 0);
            while (true) {
                std::vector<std::uint32_t> args;
                args.reserve(arity);
                for (std::size_t d : digits) {
                    args.push_back(prev[d]);
                }
                auto key = std::make_pair(name, args);
                auto it = interned.find(key);
                if (it == interned.end()) {
                    const auto id = static_cast<std::uint32_t>(chain.nodes.size());
                    chain.nodes.push_back({name, std::move(args)});
                    it = interned.emplace(std::move(key), id).first;
                }
                next.carrier.push_back(it->second);

                std::size_t pos = 0;
                while (pos < arity && ++digits[pos] == prev.size()) {
                    digits[pos++] = 0;
                }
                if (pos == arity) {
                    break;
                }
            }
        }
        std::sort(next.carrier.begin(), next.carrier.end());
        for (std::uint32_t id : prev) {
            auto it = std::lower_bound(next.carrier.begin(), next.carrier.end(), id);
            next.connecting.push_back(static_cast<std::size_t>(it - next.carrier.begin()));
        }
        chain.stages.push_back(std::move(next));
    }
    return chain;
}

// ---------------------------------------------------------------------------
// Terminal chain

std::vector<ChainStage<TerminalCode>> terminal_chain_powerset(std::size_t n) {
    if (n > 4) {
        throw LimitExceeded("terminal powerset chain is limited to stage 4 (|V_4| = 65536)");
    }
    std::vector<ChainStage<TerminalCode>> stages;
    stages.push_back({0, {TerminalCode{}}, {}});
    for (std::size_t i = 0; i < n; ++i) {
        const auto& prev = stages.back();
        ChainStage<TerminalCode> next;
        next.index = i + 1;
        const std::size_t m = prev.carrier.size();
        const std::uint64_t subsets = std::uint64_t{1} << m;
        next.carrier.reserve(subsets);
        next.connecting.reserve(subsets);
        for (std::uint64_t mask = 0; mask < subsets; ++mask) {
            TerminalCode code;
            std::uint64_t image = 0;
            for (std::uint32_t k = 0; k < m; ++k) {
                if (mask >> k & 1U) {
                    code.members.push_back(k);
                    if (i > 0) {
                        image |= std::uint64_t{1} << prev.connecting[k];
                    }
                }
            }
            next.carrier.push_back(std::move(code));
            // V_1 -> V_0 is the unique map; above that the projection is the direct image.
            next.connecting.push_back(i == 0 ? 0 : static_cast<std::size_t>(image));
        }
        stages.push_back(std::move(next));
    }
    return stages;
}

// ---------------------------------------------------------------------------
// Trees and sets

namespace {

HFSet tree_to_hf_unchecked(const ETree& t) {
    std::vector<HFSet> elems;
    elems.reserve(t.children.size());
    for (const auto& c : t.children) {
        elems.push_back(tree_to_hf_unchecked(c));
    }
    return HFSet(std::move(elems));
}

} // namespace

HFSet tree_to_hf(const ETree& t) {
    if (!is_extensional(t)) {
        throw InvalidArgument("tree_to_hf: tree is not extensional; apply extensional_quotient first");
    }
    return tree_to_hf_unchecked(t);
}

ETree hf_to_tree(const HFSet& x) {
    ETree t;
    t.children.reserve(x.size());
    for (const auto& e : x.elements()) {
        t.children.push_back(hf_to_tree(e));
    }
    return t;
}

ETree tupling(std::vector<ETree> children) {
    return ETree{std::move(children)};
}

} // namespace coalg
