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

#include "coalg/gallery.hh"

#include <algorithm>
#include <charconv>

#include "coalg/error.hh"
#include "text_util.hh"

namespace coalg::gallery {

// ---------------------------------------------------------------------------
// Indices and generators

std::uint64_t OrdinalIdx::value() const {
    if (omega_) {
        throw InvalidArgument("ordinal ω has no finite value");
    }
    return n_;
}

std::string OrdinalIdx::to_string() const {
    return omega_ ? "w" : std::to_string(n_);
}

std::string_view name(Generator g) {
    switch (g) {
    case Generator::Path:
        return "Path";
    case Generator::OmegaPath:
        return "Omega";
    case Generator::Staircase:
        return "Staircase";
    case Generator::T:
        return "T";
    case Generator::S:
        return "S";
    case Generator::U:
        return "U";
    case Generator::V:
        return "V";
    }
    return "?";
}

namespace {

enum class IndexKind { None, Natural, Ordinal };

IndexKind index_kind(Generator g) {
    switch (g) {
    case Generator::Path:
    case Generator::V:
        return IndexKind::Natural;
    case Generator::T:
    case Generator::S:
        return IndexKind::Ordinal;
    default:
        return IndexKind::None;
    }
}

void check_application(const Application& app) {
    const auto kind = index_kind(app.generator);
    const std::string g(name(app.generator));
    if (kind == IndexKind::None && app.index) {
        throw InvalidArgument(g + " takes no index");
    }
    if (kind != IndexKind::None && !app.index) {
        throw InvalidArgument(g + " requires an index");
    }
    if (kind == IndexKind::Natural && app.index->is_omega()) {
        throw InvalidArgument(g + " requires a finite index");
    }
}

std::string family_key(const Family& f) {
    std::string k = "{" + std::string(name(f.generator)) + "(k";
    if (f.offset > 0) {
        k += "+" + std::to_string(f.offset);
    }
    k += ")";
    if (f.bound) {
        k += ":k<" + std::to_string(*f.bound);
    }
    return k + "}";
}

} // namespace

SchematicTree::SchematicTree(std::vector<ChildItem> items) : items_(std::move(items)) {
    key_ = "root[";
    for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i > 0) {
            key_ += ",";
        }
        if (const auto* t = std::get_if<TreePtr>(&items_[i])) {
            if (!*t) {
                throw InvalidArgument("schematic tree: null child");
            }
            key_ += (*t)->key();
        } else {
            const Family& f = std::get<Family>(items_[i]);
            if (index_kind(f.generator) == IndexKind::None) {
                throw InvalidArgument("family generator " + std::string(name(f.generator))
                                      + " takes no index");
            }
            key_ += family_key(f);
        }
    }
    key_ += "]";
}

SchematicTree::SchematicTree(Application app) : app_(app) {
    check_application(app);
    key_ = std::string(name(app.generator));
    if (app.index) {
        key_ += "(" + app.index->to_string() + ")";
    }
}

TreePtr build(Generator g, std::optional<OrdinalIdx> index) {
    return std::make_shared<const SchematicTree>(Application{g, index});
}

TreePtr build(Generator g, std::uint64_t index) {
    return build(g, OrdinalIdx::fin(index));
}

std::vector<ChildItem> SchematicTree::items() const {
    if (!app_) {
        return items_;
    }
    const Generator g = app_->generator;
    const auto& idx = app_->index;
    switch (g) {
    case Generator::Path:
        if (idx->value() == 0) {
            return {};
        }
        return {build(Generator::Path, idx->value() - 1)};
    case Generator::OmegaPath:
        return {build(Generator::OmegaPath)};
    case Generator::Staircase:
        return {build(Generator::OmegaPath), build(Generator::Staircase)};
    case Generator::T:
    case Generator::S: {
        const bool is_t = g == Generator::T;
        if (idx->is_omega()) {
            std::vector<ChildItem> out;
            if (!is_t) {
                out.emplace_back(build(Generator::U));
            }
            out.emplace_back(Family{Generator::V, 0, std::nullopt});
            return out;
        }
        if (idx->value() == 0) {
            std::vector<ChildItem> out;
            if (is_t) {
                out.emplace_back(build(Generator::OmegaPath));
            }
            out.emplace_back(Family{Generator::Path, 0, std::nullopt});
            return out;
        }
        return {build(g, idx->value() - 1)};
    }
    case Generator::U:
        return {Family{Generator::T, 0, std::nullopt}};
    case Generator::V: {
        const std::uint64_t i = idx->value();
        std::vector<ChildItem> out;
        for (std::uint64_t k = 0; k < i; ++k) {
            out.emplace_back(build(Generator::T, k));
        }
        out.emplace_back(build(Generator::S, i));
        out.emplace_back(Family{Generator::T, i + 1, std::nullopt});
        return out;
    }
    }
    return {};
}

TreePtr parse_tree(std::string_view text) {
    const std::string_view s = coalg::text::trim(text);
    const auto open = s.find('(');
    const std::string_view head = open == std::string_view::npos ? s : s.substr(0, open);
    std::optional<Generator> g;
    for (Generator c : {Generator::Path, Generator::OmegaPath, Generator::Staircase, Generator::T,
                        Generator::S, Generator::U, Generator::V}) {
        if (head == name(c)) {
            g = c;
        }
    }
    if (!g) {
        throw ParseError(0, "unknown gallery tree '" + std::string(s) + "'");
    }
    if (open == std::string_view::npos) {
        try {
            return build(*g);
        } catch (const InvalidArgument& e) {
            throw ParseError(0, e.what());
        }
    }
    if (s.back() != ')') {
        throw ParseError(0, "expected ')' in '" + std::string(s) + "'");
    }
    const std::string_view arg = coalg::text::trim(s.substr(open + 1, s.size() - open - 2));
    std::optional<OrdinalIdx> idx;
    if (arg == "w" || arg == "ω" || arg == "omega") {
        idx = OrdinalIdx::omega();
    } else {
        std::uint64_t n = 0;
        auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), n);
        if (ec != std::errc{} || ptr != arg.data() + arg.size() || arg.empty()) {
            throw ParseError(0, "invalid index '" + std::string(arg) + "'");
        }
        idx = OrdinalIdx::fin(n);
    }
    try {
        return build(*g, idx);
    } catch (const InvalidArgument& e) {
        throw ParseError(0, e.what());
    }
}

std::vector<TreePtr> instances(const Family& f, std::uint64_t last) {
    std::vector<TreePtr> out;
    for (std::uint64_t k = 0; k <= last; ++k) {
        if (f.bound && k >= *f.bound) {
            break;
        }
        out.push_back(build(f.generator, k + f.offset));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cuts

namespace {

const std::string& memo_code(std::map<std::tuple<std::string, std::size_t, std::uint64_t>,
                                      std::pair<ETree, std::string>>& memo,
                             const std::tuple<std::string, std::size_t, std::uint64_t>& key) {
    return memo.at(key).second;
}

} // namespace

const std::string& CutEngine::code(const TreePtr& t, std::size_t n, std::uint64_t family_bound) {
    const auto key = std::make_tuple(t->key(), n, family_bound);
    if (memo_.contains(key)) {
        return memo_code(memo_, key);
    }

    // (code, tree) of every child cut; families must settle on their last two instances.
    std::vector<std::pair<std::string, ETree>> kids;
    if (n > 0) {
        auto add = [&](const TreePtr& c) {
            const std::string& code = this->code(c, n - 1, family_bound);
            kids.emplace_back(code, memo_.at(std::make_tuple(c->key(), n - 1, family_bound)).first);
        };
        for (const ChildItem& item : t->items()) {
            if (const auto* c = std::get_if<TreePtr>(&item)) {
                add(*c);
                continue;
            }
            const Family& f = std::get<Family>(item);
            const auto inst = instances(f, family_bound);
            const bool exhaustive = f.bound && *f.bound <= family_bound + 1;
            for (const auto& c : inst) {
                add(c);
            }
            if (!exhaustive) {
                const std::size_t m = kids.size();
                if (inst.size() < 2 || kids[m - 1].first != kids[m - 2].first) {
                    throw StabilizationError("family " + family_key(f) + " in " + t->key()
                                             + " has not stabilised at depth "
                                             + std::to_string(n - 1) + " within indices 0.."
                                             + std::to_string(family_bound));
                }
            }
        }
    }
    std::sort(kids.begin(), kids.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    kids.erase(std::unique(kids.begin(), kids.end(),
                           [](const auto& a, const auto& b) { return a.first == b.first; }),
               kids.end());
    ETree tree;
    std::string code = "(";
    for (auto& [c, k] : kids) {
        code += c;
        tree.children.push_back(std::move(k));
    }
    code += ")";
    auto [it, fresh] = memo_.emplace(key, std::make_pair(std::move(tree), std::move(code)));
    return it->second.second;
}

ETree CutEngine::cut(const TreePtr& t, std::size_t n, std::uint64_t family_bound) {
    code(t, n, family_bound);
    return memo_.at(std::make_tuple(t->key(), n, family_bound)).first;
}

ETree cut_schematic(const TreePtr& t, std::size_t n, std::uint64_t family_bound) {
    if (n > 8) {
        throw InvalidArgument("cut_schematic: depth above 8 is not supported");
    }
    if (family_bound < 4) {
        throw InvalidArgument("cut_schematic: family bound must be at least 4");
    }
    CutEngine engine;
    return engine.cut(t, n, family_bound);
}

// ---------------------------------------------------------------------------
// Stratified equivalences

std::string Witness::to_string() const {
    switch (kind) {
    case Kind::Cut:
        return "cuts differ at level " + std::to_string(cut_level);
    case Kind::LeftChild:
        return "left child " + child + " has no partner under ≈_" + std::to_string(level);
    case Kind::RightChild:
        return "right child " + child + " has no partner under ≈_" + std::to_string(level);
    }
    return {};
}

StratifiedChecker::StratifiedChecker(std::size_t depth_bound, std::uint64_t family_bound)
    : depth_bound_(depth_bound), family_bound_(family_bound) {
    if (depth_bound < 8) {
        throw InvalidArgument("stratified_check: depth bound must be at least 8");
    }
    if (family_bound < 8) {
        throw InvalidArgument("stratified_check: family bound must be at least 8");
    }
}

std::uint64_t StratifiedChecker::bound_for_cut(std::size_t n) const {
    // Instances below the root are cut at depth n - 1 and settle by index n.
    return std::max<std::uint64_t>(family_bound_, n + 1);
}

std::vector<TreePtr> StratifiedChecker::children(const TreePtr& t) const {
    std::vector<TreePtr> out;
    for (const ChildItem& item : t->items()) {
        if (const auto* c = std::get_if<TreePtr>(&item)) {
            out.push_back(*c);
        } else {
            for (auto& c : instances(std::get<Family>(item), family_bound_)) {
                out.push_back(std::move(c));
            }
        }
    }
    return out;
}

const StratifiedVerdict& StratifiedChecker::check_memo(const TreePtr& t, const TreePtr& s,
                                                       std::size_t level) {
    const auto key = std::make_tuple(t->key(), s->key(), level);
    if (auto it = memo_.find(key); it != memo_.end()) {
        return it->second;
    }
    StratifiedVerdict v;
    v.depth_bound = depth_bound_;
    v.family_bound = family_bound_;

    if (level == 0) {
        for (std::size_t n = 0; n <= depth_bound_ && v.equivalent; ++n) {
            const std::uint64_t b = bound_for_cut(n);
            if (cuts_.code(t, n, b) != cuts_.code(s, n, b)) {
                v.equivalent = false;
                v.witness = Witness{Witness::Kind::Cut, 0, n, {}};
            }
        }
        return memo_.emplace(key, std::move(v)).first->second;
    }

    const auto left = children(t);
    const auto right = children(s);
    auto unmatched = [&](const std::vector<TreePtr>& from, const std::vector<TreePtr>& to,
                         bool from_left, std::size_t j) -> std::optional<std::string> {
        for (const auto& a : from) {
            const bool found = std::any_of(to.begin(), to.end(), [&](const TreePtr& b) {
                return (from_left ? check_memo(a, b, j) : check_memo(b, a, j)).equivalent;
            });
            if (!found) {
                return a->key();
            }
        }
        return std::nullopt;
    };
    // Every j < level must match; the largest j is the most discriminating, so try it first.
    for (std::size_t j = level; j-- > 0 && v.equivalent;) {
        if (auto c = unmatched(left, right, true, j)) {
            v.equivalent = false;
            v.witness = Witness{Witness::Kind::LeftChild, j, 0, *c};
        } else if (auto c2 = unmatched(right, left, false, j)) {
            v.equivalent = false;
            v.witness = Witness{Witness::Kind::RightChild, j, 0, *c2};
        }
    }
    return memo_.emplace(key, std::move(v)).first->second;
}

StratifiedVerdict StratifiedChecker::check(const TreePtr& t, const TreePtr& s, std::size_t level) {
    return check_memo(t, s, level);
}

StratifiedVerdict stratified_check(const TreePtr& t, const TreePtr& s, std::size_t level,
                                   std::size_t depth_bound, std::uint64_t family_bound) {
    StratifiedChecker checker(depth_bound, family_bound);
    return checker.check(t, s, level);
}

// ---------------------------------------------------------------------------
// Cut tables and the counterexample report

namespace {

TreePtr T(std::uint64_t i) { return build(Generator::T, i); }
TreePtr S(std::uint64_t i) { return build(Generator::S, i); }
TreePtr V(std::uint64_t i) { return build(Generator::V, i); }
TreePtr T_omega() { return build(Generator::T, OrdinalIdx::omega()); }
TreePtr S_omega() { return build(Generator::S, OrdinalIdx::omega()); }
TreePtr U() { return build(Generator::U); }

std::vector<TreePtr> ts_range(std::uint64_t from, std::uint64_t to, bool with_omega) {
    std::vector<TreePtr> out;
    for (std::uint64_t i = from; i <= to; ++i) {
        out.push_back(T(i));
        out.push_back(S(i));
    }
    if (with_omega) {
        out.push_back(T_omega());
        out.push_back(S_omega());
    }
    return out;
}

std::vector<TreePtr> uv_range(std::uint64_t to) {
    std::vector<TreePtr> out{U()};
    for (std::uint64_t i = 0; i <= to; ++i) {
        out.push_back(V(i));
    }
    return out;
}

// Displayed trees, transcribed by hand into canonical-code notation.
constexpr const char* kPath1 = "(())";
constexpr const char* kPath2 = "((()))";
constexpr const char* kPath3 = "(((())))";
constexpr const char* kPath4 = "((((()))))";
constexpr const char* kT0Cut2 = "(() (()))";
constexpr const char* kT0Cut3 = "(() (()) ((())))";
constexpr const char* kT1Cut3 = "((() (())))";
constexpr const char* kUCut3 = "((() (())) ((())))";
constexpr const char* kT0Cut4 = "(() (()) ((())) (((()))))";
constexpr const char* kT1Cut4 = "((() (()) ((()))))";
constexpr const char* kT2Cut4 = "(((() (()))))";
constexpr const char* kLimitCut4 = "(((() (())) ((()))))";

} // namespace

std::vector<CutClaim> cut_table_claims(std::uint64_t max_index) {
    const std::uint64_t m = max_index;
    std::vector<CutClaim> claims;
    {
        auto all = ts_range(0, m, true);
        for (auto& x : uv_range(m)) {
            all.push_back(std::move(x));
        }
        claims.push_back({"depth 1: every t_i, s_i, u_w, v^i_w is a single edge", 1, all, kPath1});
    }
    claims.push_back({"depth 2: t_0 = s_0", 2, ts_range(0, 0, false), kT0Cut2});
    claims.push_back({"depth 2: t_i = s_i = path(2), i >= 1", 2, ts_range(1, m, true), kPath2});
    claims.push_back({"depth 2: u_w = v^i_w = path(2)", 2, uv_range(m), kPath2});
    claims.push_back({"depth 3: t_0 = s_0", 3, ts_range(0, 0, false), kT0Cut3});
    claims.push_back({"depth 3: t_1 = s_1", 3, ts_range(1, 1, false), kT1Cut3});
    claims.push_back({"depth 3: t_i = s_i = path(3), i >= 2", 3, ts_range(2, m, true), kPath3});
    claims.push_back({"depth 3: u_w = v^i_w", 3, uv_range(m), kUCut3});
    claims.push_back({"depth 4: t_0 = s_0", 4, ts_range(0, 0, false), kT0Cut4});
    claims.push_back({"depth 4: t_1 = s_1", 4, ts_range(1, 1, false), kT1Cut4});
    claims.push_back({"depth 4: t_2 = s_2", 4, ts_range(2, 2, false), kT2Cut4});
    claims.push_back({"depth 4: t_i = s_i = path(4), finite i >= 3", 4, ts_range(3, m, false), kPath4});
    claims.push_back({"depth 4: t_w = s_w", 4, {T_omega(), S_omega()}, kLimitCut4});
    return claims;
}

std::size_t GalleryReport::claims() const {
    return static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [](const auto& r) { return r.gating; }));
}

std::size_t GalleryReport::passed() const {
    return static_cast<std::size_t>(std::count_if(
        results.begin(), results.end(), [](const auto& r) { return r.gating && r.pass; }));
}

std::string GalleryReport::text() const {
    std::string out = "bounds: depth=" + std::to_string(depth_bound)
                      + " family-bound=" + std::to_string(family_bound) + "\n";
    std::string section;
    for (const auto& r : results) {
        if (r.section != section) {
            section = r.section;
            out += "[" + section + "]\n";
        }
        const char* tag = !r.gating ? "INFO" : (r.pass ? "PASS" : "FLAG");
        out += std::string(tag) + " " + r.label;
        if (!r.detail.empty()) {
            out += ": " + r.detail;
        }
        out += "\n";
    }
    out += "claims=" + std::to_string(claims()) + " pass=" + std::to_string(passed()) + "\n";
    return out;
}

GalleryReport reproduce_counterexamples(std::size_t i_max, std::size_t depth_bound,
                                        std::uint64_t family_bound) {
    if (i_max > 4) {
        throw InvalidArgument("reproduce_counterexamples: i_max must be at most 4");
    }
    GalleryReport report;
    report.depth_bound = depth_bound;
    report.family_bound = family_bound;
    StratifiedChecker checker(depth_bound, family_bound);

    auto describe = [](const StratifiedVerdict& v) {
        return v.equivalent ? std::string("equivalent")
                            : "distinguished (" + v.witness->to_string() + ")";
    };

    for (std::size_t i = 0; i <= i_max; ++i) {
        const auto t = T(i);
        const auto s = S(i);
        const auto same = checker.check(t, s, i);
        report.results.push_back({"separation", "t_" + std::to_string(i) + " ≈_" + std::to_string(i)
                                                    + " s_" + std::to_string(i),
                                  same.equivalent, true, describe(same)});
        const auto next = checker.check(t, s, i + 1);
        report.results.push_back({"separation", "t_" + std::to_string(i) + " ≉_"
                                                    + std::to_string(i + 1) + " s_" + std::to_string(i),
                                  !next.equivalent, true, describe(next)});
    }

    CutEngine engine;
    for (const auto& claim : cut_table_claims(8)) {
        const std::string expected = canonical_code(parse_etree(claim.expected));
        std::string mismatch;
        for (const auto& tree : claim.trees) {
            const std::string& got = engine.code(tree, claim.depth, family_bound);
            if (got != expected) {
                mismatch += (mismatch.empty() ? "" : ", ") + tree->key() + " cuts to " + got;
            }
        }
        report.results.push_back({"cut tables", claim.label, mismatch.empty(), true,
                                  mismatch.empty() ? "match" : mismatch});
    }

    for (std::size_t k = 1; k <= i_max; ++k) {
        for (std::size_t i = 0; i < k; ++i) {
            for (const auto& [lhs, name] : {std::pair{T(i), "t_"}, std::pair{S(i), "s_"}}) {
                const auto v = checker.check(lhs, T(k), i + 2);
                report.results.push_back(
                    {"cross comparisons",
                     name + std::to_string(i) + " vs t_" + std::to_string(k) + " under ≈_"
                         + std::to_string(i + 2),
                     !v.equivalent, false, describe(v)});
            }
        }
    }
    return report;
}

std::optional<std::pair<TransitionSystem, StateId>> finite_presentation(const TreePtr& t) {
    if (!t->is_application()) {
        return std::nullopt;
    }
    const Application& app = *t->application();
    TransitionSystem ts;
    switch (app.generator) {
    case Generator::OmegaPath: {
        const StateId q = ts.add_state("q");
        ts.add_edge(q, q);
        return std::make_pair(std::move(ts), q);
    }
    case Generator::Staircase: {
        const StateId c = ts.add_state("c");
        const StateId w = ts.add_state("w");
        ts.add_edge(c, w);
        ts.add_edge(c, c);
        ts.add_edge(w, w);
        return std::make_pair(std::move(ts), c);
    }
    case Generator::Path: {
        const std::uint64_t n = app.index->value();
        for (std::uint64_t k = 0; k <= n; ++k) {
            ts.add_state("p" + std::to_string(k));
        }
        for (std::uint64_t k = 0; k < n; ++k) {
            ts.add_edge(static_cast<StateId>(k), static_cast<StateId>(k + 1));
        }
        return std::make_pair(std::move(ts), StateId{0});
    }
    default:
        return std::nullopt;
    }
}

} // namespace coalg::gallery
