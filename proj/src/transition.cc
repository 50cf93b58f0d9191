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

#include "coalg/transition.hh"

#include <algorithm>
#include <set>
#include <sstream>

#include "coalg/error.hh"
#include "text_util.hh"

namespace coalg {

// ---------------------------------------------------------------------------
// TransitionSystem

StateId TransitionSystem::add_state(std::string name) {
    if (!text::is_identifier(name)) {
        throw InvalidArgument("invalid state name '" + name + "'");
    }
    const auto id = static_cast<StateId>(names_.size());
    if (!index_.emplace(name, id).second) {
        throw InvalidArgument("duplicate state '" + name + "'");
    }
    names_.push_back(std::move(name));
    succ_.emplace_back();
    return id;
}

void TransitionSystem::add_edge(StateId from, StateId to) {
    if (from >= size() || to >= size()) {
        throw InvalidArgument("edge refers to an unknown state");
    }
    auto& s = succ_[from];
    auto it = std::lower_bound(s.begin(), s.end(), to);
    if (it == s.end() || *it != to) {
        s.insert(it, to);
    }
}

void TransitionSystem::set_successors(StateId s, std::vector<StateId> succ) {
    if (s >= size()) {
        throw InvalidArgument("unknown state id " + std::to_string(s));
    }
    for (StateId t : succ) {
        if (t >= size()) {
            throw InvalidArgument("successor refers to an unknown state");
        }
    }
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    succ_[s] = std::move(succ);
}

std::optional<StateId> TransitionSystem::find(std::string_view name) const {
    if (auto it = index_.find(name); it != index_.end()) {
        return it->second;
    }
    return std::nullopt;
}

StateId TransitionSystem::id(std::string_view name) const {
    if (auto s = find(name)) {
        return *s;
    }
    throw InvalidArgument("unknown state '" + std::string(name) + "'");
}

void TransitionSystem::set_root(StateId s) {
    if (s >= size()) {
        throw InvalidArgument("root refers to an unknown state");
    }
    root_ = s;
}

std::vector<StateId> TransitionSystem::reachable(StateId from) const {
    if (from >= size()) {
        throw InvalidArgument("unknown state id " + std::to_string(from));
    }
    std::vector<bool> seen(size(), false);
    std::vector<StateId> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
        const StateId s = stack.back();
        stack.pop_back();
        for (StateId t : succ_[s]) {
            if (!seen[t]) {
                seen[t] = true;
                stack.push_back(t);
            }
        }
    }
    std::vector<StateId> out;
    for (StateId s = 0; s < size(); ++s) {
        if (seen[s]) {
            out.push_back(s);
        }
    }
    return out;
}

TransitionSystem parse_transition_system(std::string_view text) {
    struct Line {
        std::size_t number;
        std::vector<std::string_view> succ;
    };
    TransitionSystem ts;
    std::vector<Line> pending;
    std::optional<std::pair<std::size_t, std::string_view>> root;

    const auto ls = text::lines(text);
    for (std::size_t i = 0; i < ls.size(); ++i) {
        const std::string_view line = ls[i];
        const std::size_t ln = i + 1;
        if (line.empty()) {
            continue;
        }
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) {
            const auto w = text::words(line);
            if (w.size() == 2 && w[0] == "root") {
                if (root) {
                    throw ParseError(ln, "duplicate root line");
                }
                root.emplace(ln, w[1]);
                continue;
            }
            throw ParseError(ln, "expected 'state: succ ...' or 'root state'");
        }
        const std::string_view name = text::trim(line.substr(0, colon));
        try {
            ts.add_state(std::string(name));
        } catch (const InvalidArgument& e) {
            throw ParseError(ln, e.what());
        }
        pending.push_back({ln, text::words(line.substr(colon + 1))});
    }
    for (StateId s = 0; s < pending.size(); ++s) {
        std::vector<StateId> succ;
        for (auto w : pending[s].succ) {
            auto t = ts.find(w);
            if (!t) {
                throw ParseError(pending[s].number, "undeclared state '" + std::string(w) + "'");
            }
            succ.push_back(*t);
        }
        ts.set_successors(s, std::move(succ));
    }
    if (root) {
        auto r = ts.find(root->second);
        if (!r) {
            throw ParseError(root->first, "unknown root state '" + std::string(root->second) + "'");
        }
        ts.set_root(*r);
    }
    return ts;
}

std::string to_string(const TransitionSystem& ts) {
    std::string out;
    for (StateId s = 0; s < ts.size(); ++s) {
        out += ts.name(s) + ":";
        for (StateId t : ts.successors(s)) {
            out += " " + ts.name(t);
        }
        out += "\n";
    }
    if (ts.root()) {
        out += "root " + ts.name(*ts.root()) + "\n";
    }
    return out;
}

TransitionSystem make_system(const std::vector<std::vector<StateId>>& succ) {
    TransitionSystem ts;
    for (std::size_t i = 0; i < succ.size(); ++i) {
        ts.add_state("s" + std::to_string(i));
    }
    for (std::size_t i = 0; i < succ.size(); ++i) {
        ts.set_successors(static_cast<StateId>(i), succ[i]);
    }
    return ts;
}

TransitionSystem disjoint_union(const TransitionSystem& a, const TransitionSystem& b) {
    TransitionSystem u;
    for (const auto& n : a.names()) {
        u.add_state("0." + n);
    }
    for (const auto& n : b.names()) {
        u.add_state("1." + n);
    }
    const auto offset = static_cast<StateId>(a.size());
    for (StateId s = 0; s < a.size(); ++s) {
        u.set_successors(s, a.successors(s));
    }
    for (StateId s = 0; s < b.size(); ++s) {
        std::vector<StateId> succ;
        for (StateId t : b.successors(s)) {
            succ.push_back(t + offset);
        }
        u.set_successors(s + offset, std::move(succ));
    }
    return u;
}

std::pair<TransitionSystem, std::vector<std::optional<StateId>>>
induced_subsystem(const TransitionSystem& ts, const std::vector<bool>& keep) {
    if (keep.size() != ts.size()) {
        throw InvalidArgument("induced_subsystem: mask size mismatch");
    }
    TransitionSystem sub;
    std::vector<std::optional<StateId>> map(ts.size());
    for (StateId s = 0; s < ts.size(); ++s) {
        if (keep[s]) {
            map[s] = sub.add_state(ts.name(s));
        }
    }
    for (StateId s = 0; s < ts.size(); ++s) {
        if (!keep[s]) {
            continue;
        }
        std::vector<StateId> succ;
        for (StateId t : ts.successors(s)) {
            if (!map[t]) {
                throw InvalidArgument("induced_subsystem: kept states are not closed under successors");
            }
            succ.push_back(*map[t]);
        }
        sub.set_successors(*map[s], std::move(succ));
    }
    if (ts.root() && map[*ts.root()]) {
        sub.set_root(*map[*ts.root()]);
    }
    return {std::move(sub), std::move(map)};
}

// ---------------------------------------------------------------------------
// ETree

std::size_t ETree::node_count() const {
    std::size_t n = 1;
    for (const auto& c : children) {
        n += c.node_count();
    }
    return n;
}

std::size_t ETree::height() const {
    std::size_t h = 0;
    for (const auto& c : children) {
        h = std::max(h, c.height() + 1);
    }
    return h;
}

ETree leaf() {
    return {};
}

ETree path(std::size_t edges) {
    ETree t;
    for (std::size_t i = 0; i < edges; ++i) {
        t = node({std::move(t)});
    }
    return t;
}

ETree node(std::vector<ETree> children) {
    return ETree{std::move(children)};
}

std::string canonical_code(const ETree& t) {
    std::vector<std::string> codes;
    codes.reserve(t.children.size());
    for (const auto& c : t.children) {
        codes.push_back(canonical_code(c));
    }
    std::sort(codes.begin(), codes.end());
    std::string out = "(";
    for (const auto& c : codes) {
        out += c;
    }
    return out + ")";
}

namespace {

ETree parse_etree_at(std::string_view s, std::size_t& pos) {
    auto skip = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
            ++pos;
        }
    };
    skip();
    if (pos >= s.size() || s[pos] != '(') {
        throw ParseError(0, "tree notation: expected '(' at offset " + std::to_string(pos));
    }
    ++pos;
    ETree t;
    while (true) {
        skip();
        if (pos >= s.size()) {
            throw ParseError(0, "tree notation: unbalanced parentheses");
        }
        if (s[pos] == ')') {
            ++pos;
            return t;
        }
        t.children.push_back(parse_etree_at(s, pos));
    }
}

} // namespace

ETree parse_etree(std::string_view text) {
    std::size_t pos = 0;
    ETree t = parse_etree_at(text, pos);
    if (!text::trim(text.substr(pos)).empty()) {
        throw ParseError(0, "tree notation: trailing input");
    }
    return t;
}

ETree unfold(const TransitionSystem& ts, StateId q, std::size_t depth) {
    if (q >= ts.size()) {
        throw InvalidArgument("unfold: unknown state id " + std::to_string(q));
    }
    ETree t;
    if (depth == 0) {
        return t;
    }
    for (StateId c : ts.successors(q)) {
        t.children.push_back(unfold(ts, c, depth - 1));
    }
    return t;
}

namespace {

// Returns the quotient together with its canonical code.
std::pair<ETree, std::string> quotient_with_code(const ETree& t) {
    std::vector<std::pair<std::string, ETree>> kids;
    kids.reserve(t.children.size());
    for (const auto& c : t.children) {
        auto [q, code] = quotient_with_code(c);
        kids.emplace_back(std::move(code), std::move(q));
    }
    std::sort(kids.begin(), kids.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    kids.erase(std::unique(kids.begin(), kids.end(),
                           [](const auto& a, const auto& b) { return a.first == b.first; }),
               kids.end());
    ETree out;
    std::string code = "(";
    for (auto& [c, k] : kids) {
        code += c;
        out.children.push_back(std::move(k));
    }
    code += ")";
    return {std::move(out), std::move(code)};
}

} // namespace

ETree extensional_quotient(const ETree& t) {
    return quotient_with_code(t).first;
}

bool is_extensional(const ETree& t) {
    std::set<std::string> codes;
    for (const auto& c : t.children) {
        if (!codes.insert(canonical_code(c)).second || !is_extensional(c)) {
            return false;
        }
    }
    return true;
}

bool tree_iso(const ETree& t, const ETree& s) {
    return canonical_code(t) == canonical_code(s);
}

namespace {

void render_into(const ETree& t, std::size_t indent, std::string& out) {
    out.append(indent * 2, ' ');
    out += "*\n";
    std::vector<std::pair<std::string, const ETree*>> kids;
    for (const auto& c : t.children) {
        kids.emplace_back(canonical_code(c), &c);
    }
    std::sort(kids.begin(), kids.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [code, c] : kids) {
        render_into(*c, indent + 1, out);
    }
}

} // namespace

std::string render_tree(const ETree& t) {
    std::string out;
    render_into(t, 0, out);
    return out;
}

// ---------------------------------------------------------------------------
// Homomorphisms

bool is_homomorphism(const TransitionSystem& src, const TransitionSystem& dst,
                     const std::vector<StateId>& f) {
    if (f.size() != src.size()) {
        throw InvalidArgument("homomorphism must be total on the source states");
    }
    for (StateId v : f) {
        if (v >= dst.size()) {
            throw InvalidArgument("homomorphism maps outside the target states");
        }
    }
    for (StateId a = 0; a < src.size(); ++a) {
        std::vector<StateId> image;
        for (StateId b : src.successors(a)) {
            image.push_back(f[b]);
        }
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        if (image != dst.successors(f[a])) {
            return false;
        }
    }
    return true;
}

bool is_homomorphism(const TransitionSystem& src, const TransitionSystem& dst,
                     const std::map<std::string, std::string>& f) {
    std::vector<StateId> g(src.size());
    for (StateId a = 0; a < src.size(); ++a) {
        auto it = f.find(src.name(a));
        if (it == f.end()) {
            throw InvalidArgument("homomorphism undefined on state '" + src.name(a) + "'");
        }
        auto b = dst.find(it->second);
        if (!b) {
            throw InvalidArgument("homomorphism maps '" + src.name(a) + "' to unknown state '"
                                  + it->second + "'");
        }
        g[a] = *b;
    }
    for (const auto& [k, v] : f) {
        if (!src.find(k)) {
            throw InvalidArgument("homomorphism defined on unknown state '" + k + "'");
        }
    }
    return is_homomorphism(src, dst, g);
}

// ---------------------------------------------------------------------------
// ExtensionalStore

std::size_t ExtensionalStore::VecHash::operator()(const std::vector<Id>& v) const noexcept {
    std::size_t h = v.size();
    for (Id x : v) {
        h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

ExtensionalStore::ExtensionalStore() {
    nodes_.emplace_back();
    index_.emplace(std::vector<Id>{}, 0);
}

ExtensionalStore::Id ExtensionalStore::make(std::vector<Id> children) {
    std::sort(children.begin(), children.end());
    children.erase(std::unique(children.begin(), children.end()), children.end());
    auto it = index_.find(children);
    if (it != index_.end()) {
        return it->second;
    }
    const auto id = static_cast<Id>(nodes_.size());
    nodes_.push_back(children);
    index_.emplace(std::move(children), id);
    return id;
}

ETree ExtensionalStore::materialize(Id id) const {
    ETree t;
    for (Id c : nodes_.at(id)) {
        t.children.push_back(materialize(c));
    }
    return t;
}

std::vector<ExtensionalStore::Id> quotient_cut_step(const TransitionSystem& ts,
                                                    const std::vector<ExtensionalStore::Id>& prev,
                                                    ExtensionalStore& store) {
    if (prev.size() != ts.size()) {
        throw InvalidArgument("quotient_cut_step: level size mismatch");
    }
    std::vector<ExtensionalStore::Id> next(ts.size());
    for (StateId q = 0; q < ts.size(); ++q) {
        std::vector<ExtensionalStore::Id> kids;
        kids.reserve(ts.successors(q).size());
        for (StateId c : ts.successors(q)) {
            kids.push_back(prev[c]);
        }
        next[q] = store.make(std::move(kids));
    }
    return next;
}

std::vector<ExtensionalStore::Id> quotient_cut_ids(const TransitionSystem& ts, std::size_t depth,
                                                   ExtensionalStore& store) {
    std::vector<ExtensionalStore::Id> ids(ts.size(), store.leaf());
    for (std::size_t n = 0; n < depth; ++n) {
        ids = quotient_cut_step(ts, ids, store);
    }
    return ids;
}

} // namespace coalg
