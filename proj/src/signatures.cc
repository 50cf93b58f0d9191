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

#include "coalg/signatures.hh"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>
#include <tuple>
#include <utility>

#include "coalg/error.hh"
#include "expr_parser.hh"
#include "text_util.hh"

namespace coalg {

// ---------------------------------------------------------------------------
// Expression parser

namespace detail {

namespace {

class ExprParser {
public:
    ExprParser(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    Expr parse() {
        Expr e = parse_one();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(text_.substr(pos_, 1)) + "'");
        }
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, what); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    std::string identifier() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '(' || c == ')' || c == ',' || c == '$'
                || std::isspace(static_cast<unsigned char>(c))) {
                break;
            }
            ++pos_;
        }
        std::string_view id = text_.substr(start, pos_ - start);
        if (!text::is_identifier(id)) {
            fail(id.empty() ? "expected a name" : "invalid name '" + std::string(id) + "'");
        }
        return std::string(id);
    }

    Expr parse_one() {
        skip_ws();
        Expr e;
        if (pos_ < text_.size() && text_[pos_] == '$') {
            ++pos_;
            e.parameter = true;
            e.name = identifier();
            return e;
        }
        e.name = identifier();
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '(') {
            ++pos_;
            e.applied = true;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == ')') {
                ++pos_;
                return e;
            }
            while (true) {
                e.args.push_back(parse_one());
                skip_ws();
                if (pos_ >= text_.size()) {
                    fail("unterminated argument list");
                }
                if (text_[pos_] == ',') {
                    ++pos_;
                    continue;
                }
                if (text_[pos_] == ')') {
                    ++pos_;
                    break;
                }
                fail("expected ',' or ')'");
            }
        }
        return e;
    }

    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

} // namespace

Expr parse_expr(std::string_view text, std::size_t line) {
    return ExprParser(text, line).parse();
}

} // namespace detail

// ---------------------------------------------------------------------------
// Signature

Signature::Signature(std::initializer_list<std::pair<std::string, std::size_t>> symbols) {
    for (const auto& [name, arity] : symbols) {
        add(name, arity);
    }
}

void Signature::add(const std::string& name, std::size_t arity) {
    if (!text::is_identifier(name)) {
        throw InvalidArgument("invalid symbol name '" + name + "'");
    }
    if (!symbols_.emplace(name, arity).second) {
        throw InvalidArgument("duplicate symbol '" + name + "'");
    }
}

std::optional<std::size_t> Signature::arity(std::string_view name) const {
    if (auto it = symbols_.find(name); it != symbols_.end()) {
        return it->second;
    }
    return std::nullopt;
}

Signature parse_signature(std::string_view text) {
    Signature sig;
    const auto ls = text::lines(text);
    for (std::size_t i = 0; i < ls.size(); ++i) {
        const std::string_view line = ls[i];
        if (line.empty()) {
            continue;
        }
        const auto slash = line.rfind('/');
        if (slash == std::string_view::npos) {
            throw ParseError(i + 1, "expected name/arity");
        }
        const std::string_view name = text::trim(line.substr(0, slash));
        const std::string_view num = text::trim(line.substr(slash + 1));
        std::size_t arity = 0;
        auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), arity);
        if (ec != std::errc{} || ptr != num.data() + num.size() || num.empty()) {
            throw ParseError(i + 1, "invalid arity '" + std::string(num) + "'");
        }
        try {
            sig.add(std::string(name), arity);
        } catch (const InvalidArgument& e) {
            throw ParseError(i + 1, e.what());
        }
    }
    return sig;
}

std::string to_string(const Signature& sig) {
    std::string out;
    for (const auto& [name, arity] : sig.symbols()) {
        out += name + "/" + std::to_string(arity) + "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Terms

std::size_t Term::height() const {
    std::size_t h = 0;
    for (const Term& c : children) {
        h = std::max(h, c.height() + 1);
    }
    return h;
}

void validate(const Term& t, const Signature& sig) {
    const auto ar = sig.arity(t.label);
    if (!ar) {
        throw InvalidArgument("unknown symbol '" + t.label + "'");
    }
    if (*ar != t.children.size()) {
        throw InvalidArgument("symbol '" + t.label + "' expects " + std::to_string(*ar)
                              + " arguments, got " + std::to_string(t.children.size()));
    }
    for (const Term& c : t.children) {
        validate(c, sig);
    }
}

std::string to_string(const Term& t) {
    if (t.children.empty()) {
        return t.label;
    }
    std::string out = t.label + "(";
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += to_string(t.children[i]);
    }
    return out + ")";
}

std::string to_string(const PartialTerm& t) {
    switch (t.kind) {
    case PartialTerm::Kind::Hole:
        return "⊥";
    case PartialTerm::Kind::Parameter:
        return t.name;
    case PartialTerm::Kind::Node:
        break;
    }
    if (t.children.empty()) {
        return t.name;
    }
    std::string out = t.name + "(";
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += to_string(t.children[i]);
    }
    return out + ")";
}

namespace {

PartialTerm to_partial(const detail::Expr& e) {
    if (e.parameter) {
        throw ParseError(1, "'$' is not used in term notation");
    }
    if (e.name == "_" && !e.applied) {
        return PartialTerm::hole();
    }
    if (!e.applied) {
        return PartialTerm::parameter(e.name);
    }
    std::vector<PartialTerm> children;
    children.reserve(e.args.size());
    for (const auto& a : e.args) {
        children.push_back(to_partial(a));
    }
    return PartialTerm::node(e.name, std::move(children));
}

} // namespace

PartialTerm parse_partial_term(std::string_view text) {
    return to_partial(detail::parse_expr(text, 1));
}

// ---------------------------------------------------------------------------
// Regular trees

RegularTree::RegularTree(Signature sig, Definitions defs, TreeArg root)
    : sig_(std::move(sig)), defs_(std::move(defs)), root_(std::move(root)) {
    auto check_ref = [&](const TreeArg& a, const std::string& where) {
        if (!a.is_parameter() && !defs_.contains(a.name)) {
            throw InvalidArgument(where + " refers to undefined state '" + a.name + "'");
        }
    };
    for (const auto& [state, def] : defs_) {
        const auto ar = sig_.arity(def.symbol);
        if (!ar) {
            throw InvalidArgument("state '" + state + "' uses unknown symbol '" + def.symbol + "'");
        }
        if (*ar != def.args.size()) {
            throw InvalidArgument("state '" + state + "': symbol '" + def.symbol + "' expects "
                                  + std::to_string(*ar) + " arguments, got "
                                  + std::to_string(def.args.size()));
        }
        for (const auto& a : def.args) {
            check_ref(a, "state '" + state + "'");
        }
    }
    check_ref(root_, "root");
}

const TreeDefinition& RegularTree::definition(std::string_view state) const {
    auto it = defs_.find(state);
    if (it == defs_.end()) {
        throw InvalidArgument("unknown state '" + std::string(state) + "'");
    }
    return it->second;
}

std::set<std::string> RegularTree::parameters() const {
    std::set<std::string> params;
    std::set<std::string, std::less<>> seen;
    std::vector<const TreeArg*> stack{&root_};
    while (!stack.empty()) {
        const TreeArg* a = stack.back();
        stack.pop_back();
        if (a->is_parameter()) {
            params.insert(a->name);
            continue;
        }
        if (!seen.insert(a->name).second) {
            continue;
        }
        for (const auto& arg : definition(a->name).args) {
            stack.push_back(&arg);
        }
    }
    return params;
}

RegularTree parse_regular_tree(const Signature& sig, std::string_view text) {
    RegularTree::Definitions defs;
    std::optional<TreeArg> root;
    std::size_t root_line = 0;
    const auto ls = text::lines(text);
    for (std::size_t i = 0; i < ls.size(); ++i) {
        const std::string_view line = ls[i];
        const std::size_t ln = i + 1;
        if (line.empty()) {
            continue;
        }
        if (line.starts_with("root ") || line == "root") {
            if (root) {
                throw ParseError(ln, "duplicate root line");
            }
            const auto e = detail::parse_expr(line.substr(4), ln);
            if (e.applied) {
                throw ParseError(ln, "root must name a state or a $parameter");
            }
            root = e.parameter ? TreeArg::parameter(e.name) : TreeArg::state(e.name);
            root_line = ln;
            continue;
        }
        if (root) {
            throw ParseError(ln, "definitions must precede the root line");
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError(ln, "expected 'state = name(arg,...)'");
        }
        const std::string_view lhs = text::trim(line.substr(0, eq));
        if (!text::is_identifier(lhs)) {
            throw ParseError(ln, "invalid state name '" + std::string(lhs) + "'");
        }
        const auto e = detail::parse_expr(line.substr(eq + 1), ln);
        if (e.parameter) {
            throw ParseError(ln, "a state must be defined by a symbol application");
        }
        const auto ar = sig.arity(e.name);
        if (!ar) {
            throw ParseError(ln, "unknown symbol '" + e.name + "'");
        }
        if (*ar != e.args.size()) {
            throw ParseError(ln, "symbol '" + e.name + "' expects " + std::to_string(*ar)
                                     + " arguments, got " + std::to_string(e.args.size()));
        }
        TreeDefinition def{e.name, {}};
        for (const auto& a : e.args) {
            if (a.applied) {
                throw ParseError(ln, "arguments must be states or $parameters");
            }
            def.args.push_back(a.parameter ? TreeArg::parameter(a.name) : TreeArg::state(a.name));
        }
        if (!defs.emplace(std::string(lhs), std::move(def)).second) {
            throw ParseError(ln, "state '" + std::string(lhs) + "' defined twice");
        }
    }
    if (!root) {
        throw ParseError(0, "missing root line");
    }
    try {
        return RegularTree(sig, std::move(defs), *root);
    } catch (const InvalidArgument& e) {
        throw ParseError(root_line, e.what());
    }
}

std::string to_string(const RegularTree& t) {
    std::string out;
    auto arg = [](const TreeArg& a) { return a.is_parameter() ? "$" + a.name : a.name; };
    for (const auto& [state, def] : t.definitions()) {
        out += state + " = " + def.symbol;
        if (!def.args.empty()) {
            out += "(";
            for (std::size_t i = 0; i < def.args.size(); ++i) {
                out += (i > 0 ? "," : "") + arg(def.args[i]);
            }
            out += ")";
        }
        out += "\n";
    }
    out += "root " + arg(t.root()) + "\n";
    return out;
}

namespace {

PartialTerm unfold_arg(const RegularTree& t, const TreeArg& a, std::size_t depth) {
    if (depth == 0) {
        return PartialTerm::hole();
    }
    if (a.is_parameter()) {
        return PartialTerm::parameter(a.name);
    }
    const TreeDefinition& def = t.definition(a.name);
    std::vector<PartialTerm> children;
    children.reserve(def.args.size());
    for (const auto& c : def.args) {
        children.push_back(unfold_arg(t, c, depth - 1));
    }
    return PartialTerm::node(def.symbol, std::move(children));
}

} // namespace

PartialTerm unfold_regular(const RegularTree& t, std::size_t depth) {
    return unfold_arg(t, t.root(), depth);
}

bool regular_equal(const RegularTree& t, const RegularTree& s) {
    if (!(t.signature() == s.signature())) {
        throw InvalidArgument("regular_equal: signature mismatch");
    }
    std::set<std::pair<TreeArg, TreeArg>> seen;
    std::deque<std::pair<TreeArg, TreeArg>> work;
    work.emplace_back(t.root(), s.root());
    seen.insert(work.front());
    while (!work.empty()) {
        auto [a, b] = work.front();
        work.pop_front();
        if (a.is_parameter() || b.is_parameter()) {
            if (!(a.is_parameter() && b.is_parameter() && a.name == b.name)) {
                return false;
            }
            continue;
        }
        const TreeDefinition& da = t.definition(a.name);
        const TreeDefinition& db = s.definition(b.name);
        if (da.symbol != db.symbol) {
            return false;
        }
        for (std::size_t i = 0; i < da.args.size(); ++i) {
            std::pair<TreeArg, TreeArg> next{da.args[i], db.args[i]};
            if (seen.insert(next).second) {
                work.push_back(std::move(next));
            }
        }
    }
    return true;
}

bool regular_equal_to_depth(const RegularTree& t, const RegularTree& s, std::size_t depth) {
    if (!(t.signature() == s.signature())) {
        throw InvalidArgument("regular_equal_to_depth: signature mismatch");
    }
    // Breadth-first, so every pair is first met at its shallowest depth; later
    // occurrences see less of the tree and can be skipped.
    std::set<std::pair<TreeArg, TreeArg>> seen;
    std::deque<std::tuple<TreeArg, TreeArg, std::size_t>> work;
    work.emplace_back(t.root(), s.root(), 0);
    seen.emplace(t.root(), s.root());
    while (!work.empty()) {
        auto [a, b, d] = work.front();
        work.pop_front();
        if (d >= depth) {
            continue;
        }
        if (a.is_parameter() || b.is_parameter()) {
            if (!(a.is_parameter() && b.is_parameter() && a.name == b.name)) {
                return false;
            }
            continue;
        }
        const TreeDefinition& da = t.definition(a.name);
        const TreeDefinition& db = s.definition(b.name);
        if (da.symbol != db.symbol) {
            return false;
        }
        for (std::size_t i = 0; i < da.args.size(); ++i) {
            if (seen.emplace(da.args[i], db.args[i]).second) {
                work.emplace_back(da.args[i], db.args[i], d + 1);
            }
        }
    }
    return true;
}

bool flat_merge_holds(const PartialTerm& lhs, const PartialTerm& rhs) {
    auto variables = [](const PartialTerm& t) {
        if (t.kind != PartialTerm::Kind::Node) {
            throw InvalidArgument("flat term must be a symbol application");
        }
        std::vector<std::string> vars;
        for (const auto& c : t.children) {
            if (c.kind != PartialTerm::Kind::Parameter) {
                throw InvalidArgument("non-flat term: argument '" + to_string(c)
                                      + "' is not a variable");
            }
            vars.push_back(c.name);
        }
        return epsilon_powerset(vars);
    };
    return variables(lhs) == variables(rhs);
}

} // namespace coalg
