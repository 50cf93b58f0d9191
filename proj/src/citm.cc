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

#include "coalg/citm.hh"

#include <algorithm>
#include <optional>

#include "coalg/error.hh"
#include "expr_parser.hh"
#include "text_util.hh"

namespace coalg {

namespace {

[[noreturn]] void reject(std::size_t line, const std::string& what) {
    if (line > 0) {
        throw ParseError(line, what);
    }
    throw InvalidArgument(what);
}

} // namespace

EquationSystem::EquationSystem(Signature sig, std::vector<Equation> equations,
                               std::set<std::string> parameters)
    : sig_(std::move(sig)), eqs_(std::move(equations)), params_(std::move(parameters)) {
    for (std::size_t i = 0; i < eqs_.size(); ++i) {
        const Equation& e = eqs_[i];
        if (!index_.emplace(e.variable, i).second) {
            reject(e.line, "variable '" + e.variable + "' has more than one equation");
        }
    }
    for (const Equation& e : eqs_) {
        const Rhs& r = e.rhs;
        switch (r.kind) {
        case Rhs::Kind::Variable:
            throw UnguardedError(e.line, e.variable);
        case Rhs::Kind::Parameter:
            if (!params_.contains(r.name)) {
                reject(e.line, "unknown parameter '" + r.name + "'");
            }
            break;
        case Rhs::Kind::Apply: {
            const auto ar = sig_.arity(r.name);
            if (!ar) {
                reject(e.line, "unknown symbol '" + r.name + "'");
            }
            if (*ar != r.args.size()) {
                reject(e.line, "symbol '" + r.name + "' expects " + std::to_string(*ar)
                                   + " arguments, got " + std::to_string(r.args.size()));
            }
            for (const TreeArg& a : r.args) {
                if (a.is_parameter() && !params_.contains(a.name)) {
                    reject(e.line, "unknown parameter '" + a.name + "'");
                }
                if (!a.is_parameter() && !index_.contains(a.name)) {
                    reject(e.line, "variable '" + a.name + "' has no equation");
                }
            }
            break;
        }
        }
    }
}

std::vector<std::string> EquationSystem::variables() const {
    std::vector<std::string> out;
    out.reserve(eqs_.size());
    for (const auto& e : eqs_) {
        out.push_back(e.variable);
    }
    return out;
}

const Rhs& EquationSystem::rhs(std::string_view x) const {
    auto it = index_.find(x);
    if (it == index_.end()) {
        throw InvalidArgument("unknown variable '" + std::string(x) + "'");
    }
    return eqs_[it->second].rhs;
}

// ---------------------------------------------------------------------------
// Parsing and flattening

namespace {

struct RawEquation {
    std::size_t line;
    std::string variable;
    detail::Expr rhs;
};

std::vector<RawEquation> read_raw(std::string_view text) {
    std::vector<RawEquation> raw;
    const auto ls = text::lines(text);
    for (std::size_t i = 0; i < ls.size(); ++i) {
        const std::size_t ln = i + 1;
        if (ls[i].empty()) {
            continue;
        }
        const auto eq = ls[i].find('=');
        if (eq == std::string_view::npos) {
            throw ParseError(ln, "expected 'x = expression'");
        }
        const std::string_view lhs = text::trim(ls[i].substr(0, eq));
        if (!text::is_identifier(lhs)) {
            throw ParseError(ln, "invalid variable name '" + std::string(lhs) + "'");
        }
        raw.push_back({ln, std::string(lhs), detail::parse_expr(ls[i].substr(eq + 1), ln)});
    }
    return raw;
}

class Flattener {
public:
    Flattener(const Signature& sig, const std::vector<RawEquation>& raw) : sig_(sig) {
        for (const auto& r : raw) {
            taken_.insert(r.variable);
            declared_.insert(r.variable);
        }
    }

    void run(const std::vector<RawEquation>& raw) {
        for (const auto& r : raw) {
            out_.push_back({r.variable, top(r.rhs, r.variable, r.line), r.line});
            // Auxiliary equations follow their owner.
            for (auto& a : pending_) {
                out_.push_back(std::move(a));
            }
            pending_.clear();
        }
    }

    std::vector<Equation> equations() { return std::move(out_); }
    std::set<std::string> parameters() { return std::move(params_); }

private:
    bool is_variable(const detail::Expr& e) const {
        return !e.parameter && !e.applied && declared_.contains(e.name);
    }

    Rhs top(const detail::Expr& e, const std::string& owner, std::size_t line) {
        if (e.parameter) {
            params_.insert(e.name);
            return Rhs::parameter(e.name);
        }
        if (is_variable(e)) {
            return Rhs::variable(e.name);
        }
        return application(e, owner, line);
    }

    Rhs application(const detail::Expr& e, const std::string& owner, std::size_t line) {
        const auto ar = sig_.arity(e.name);
        if (!ar) {
            throw ParseError(line, "unknown symbol '" + e.name + "'");
        }
        if (*ar != e.args.size()) {
            throw ParseError(line, "symbol '" + e.name + "' expects " + std::to_string(*ar)
                                       + " arguments, got " + std::to_string(e.args.size()));
        }
        std::vector<TreeArg> args;
        args.reserve(e.args.size());
        for (const auto& a : e.args) {
            args.push_back(argument(a, owner, line));
        }
        return Rhs::apply(e.name, std::move(args));
    }

    TreeArg argument(const detail::Expr& e, const std::string& owner, std::size_t line) {
        if (e.parameter) {
            params_.insert(e.name);
            return TreeArg::parameter(e.name);
        }
        if (is_variable(e)) {
            return TreeArg::state(e.name);
        }
        const std::string aux = fresh(owner);
        Rhs r = application(e, owner, line);
        pending_.push_back({aux, std::move(r), line});
        return TreeArg::state(aux);
    }

    std::string fresh(const std::string& owner) {
        std::size_t& k = counters_[owner];
        std::string name;
        do {
            name = owner + "." + std::to_string(++k);
        } while (taken_.contains(name));
        taken_.insert(name);
        return name;
    }

    const Signature& sig_;
    std::set<std::string> taken_;
    std::set<std::string> declared_;
    std::map<std::string, std::size_t> counters_;
    std::set<std::string> params_;
    std::vector<Equation> out_;
    std::vector<Equation> pending_;
};

void infer_symbols(const detail::Expr& e, const std::set<std::string>& variables, std::size_t line,
                   std::map<std::string, std::size_t>& arities) {
    if (e.parameter || (!e.applied && variables.contains(e.name))) {
        return;
    }
    auto [it, fresh] = arities.emplace(e.name, e.args.size());
    if (!fresh && it->second != e.args.size()) {
        throw ParseError(line, "symbol '" + e.name + "' used with " + std::to_string(e.args.size())
                                   + " and " + std::to_string(it->second) + " arguments");
    }
    for (const auto& a : e.args) {
        infer_symbols(a, variables, line, arities);
    }
}

EquationSystem build(const Signature& sig, const std::vector<RawEquation>& raw) {
    std::set<std::string> seen;
    for (const auto& r : raw) {
        if (!seen.insert(r.variable).second) {
            throw ParseError(r.line, "variable '" + r.variable + "' has more than one equation");
        }
    }
    Flattener f(sig, raw);
    f.run(raw);
    return EquationSystem(sig, f.equations(), f.parameters());
}

} // namespace

EquationSystem parse_equations(const Signature& sig, std::string_view text) {
    return build(sig, read_raw(text));
}

EquationSystem parse_equations(std::string_view text) {
    const auto raw = read_raw(text);
    std::set<std::string> variables;
    for (const auto& r : raw) {
        variables.insert(r.variable);
    }
    std::map<std::string, std::size_t> arities;
    for (const auto& r : raw) {
        infer_symbols(r.rhs, variables, r.line, arities);
    }
    Signature sig;
    for (const auto& [name, arity] : arities) {
        sig.add(name, arity);
    }
    return build(sig, raw);
}

std::string to_string(const EquationSystem& sys) {
    std::string out;
    for (const auto& e : sys.equations()) {
        out += e.variable + " = ";
        switch (e.rhs.kind) {
        case Rhs::Kind::Parameter:
            out += "$" + e.rhs.name;
            break;
        case Rhs::Kind::Variable:
            out += e.rhs.name;
            break;
        case Rhs::Kind::Apply:
            out += e.rhs.name;
            if (!e.rhs.args.empty()) {
                out += "(";
                for (std::size_t i = 0; i < e.rhs.args.size(); ++i) {
                    const auto& a = e.rhs.args[i];
                    out += (i > 0 ? "," : "") + (a.is_parameter() ? "$" + a.name : a.name);
                }
                out += ")";
            }
            break;
        }
        out += "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Solutions and the monad structure

Solution solve(const EquationSystem& sys) {
    auto resolve = [&](const std::string& x) {
        const Rhs& r = sys.rhs(x);
        return r.kind == Rhs::Kind::Parameter ? TreeArg::parameter(r.name) : TreeArg::state(x);
    };
    RegularTree::Definitions defs;
    for (const auto& e : sys.equations()) {
        if (e.rhs.kind != Rhs::Kind::Apply) {
            continue;
        }
        TreeDefinition def{e.rhs.name, {}};
        for (const auto& a : e.rhs.args) {
            def.args.push_back(a.is_parameter() ? a : resolve(a.name));
        }
        defs.emplace(e.variable, std::move(def));
    }
    Solution sol;
    for (const auto& e : sys.equations()) {
        sol.emplace(e.variable, RegularTree(sys.signature(), defs, resolve(e.variable)));
    }
    return sol;
}

RegularTree eta(const Signature& sig, const std::string& y) {
    return RegularTree(sig, {}, TreeArg::parameter(y));
}

namespace {

std::set<std::string> reachable_states(const RegularTree& t) {
    std::set<std::string> seen;
    std::vector<TreeArg> stack{t.root()};
    while (!stack.empty()) {
        TreeArg a = std::move(stack.back());
        stack.pop_back();
        if (a.is_parameter() || !seen.insert(a.name).second) {
            continue;
        }
        for (const auto& c : t.definition(a.name).args) {
            stack.push_back(c);
        }
    }
    return seen;
}

} // namespace

RegularTree tree_substitute(const RegularTree& t, const std::map<std::string, RegularTree>& s) {
    RegularTree::Definitions defs;
    std::set<std::string> used;
    auto claim = [&](std::string name) {
        while (used.contains(name)) {
            name += "'";
        }
        used.insert(name);
        return name;
    };

    const auto t_states = reachable_states(t);
    std::map<std::string, std::string> t_names;
    for (const auto& q : t_states) {
        t_names[q] = claim(q);
    }

    // Where each parameter of t is redirected to.
    std::map<std::string, TreeArg> graft;
    for (const auto& y : t.parameters()) {
        auto it = s.find(y);
        if (it == s.end()) {
            throw InvalidArgument("tree_substitute: no substitution for parameter '" + y + "'");
        }
        const RegularTree& u = it->second;
        if (!(u.signature() == t.signature())) {
            throw InvalidArgument("tree_substitute: signature mismatch for parameter '" + y + "'");
        }
        std::map<std::string, std::string> u_names;
        for (const auto& q : reachable_states(u)) {
            u_names[q] = claim(y + "/" + q);
        }
        auto rename = [&](const TreeArg& a) {
            return a.is_parameter() ? a : TreeArg::state(u_names.at(a.name));
        };
        for (const auto& [q, name] : u_names) {
            const TreeDefinition& d = u.definition(q);
            TreeDefinition nd{d.symbol, {}};
            for (const auto& a : d.args) {
                nd.args.push_back(rename(a));
            }
            defs.emplace(name, std::move(nd));
        }
        graft.emplace(y, rename(u.root()));
    }

    auto redirect = [&](const TreeArg& a) {
        return a.is_parameter() ? graft.at(a.name) : TreeArg::state(t_names.at(a.name));
    };
    for (const auto& q : t_states) {
        const TreeDefinition& d = t.definition(q);
        TreeDefinition nd{d.symbol, {}};
        for (const auto& a : d.args) {
            nd.args.push_back(redirect(a));
        }
        defs.emplace(t_names.at(q), std::move(nd));
    }
    return RegularTree(t.signature(), std::move(defs), redirect(t.root()));
}

bool verify_solution(const EquationSystem& sys, const Solution& cand, std::size_t depth) {
    for (const auto& x : sys.variables()) {
        if (!cand.contains(x)) {
            throw InvalidArgument("verify_solution: candidate lacks variable '" + x + "'");
        }
    }
    for (const auto& e : sys.equations()) {
        const RegularTree& mine = cand.find(e.variable)->second;
        if (!(mine.signature() == sys.signature())) {
            throw InvalidArgument("verify_solution: candidate signature mismatch");
        }
        std::optional<RegularTree> expected;
        if (e.rhs.kind == Rhs::Kind::Parameter) {
            expected = eta(sys.signature(), e.rhs.name);
        } else {
            // One layer of the right-hand side with a placeholder leaf per argument,
            // then the placeholders grafted with candidates (variables) or eta (parameters).
            TreeDefinition layer{e.rhs.name, {}};
            std::map<std::string, RegularTree> fill;
            for (const auto& a : e.rhs.args) {
                const std::string slot = (a.is_parameter() ? "y:" : "x:") + a.name;
                layer.args.push_back(TreeArg::parameter(slot));
                if (fill.contains(slot)) {
                    continue;
                }
                if (a.is_parameter()) {
                    fill.emplace(slot, eta(sys.signature(), a.name));
                } else {
                    fill.emplace(slot, cand.find(a.name)->second);
                }
            }
            RegularTree one(sys.signature(), {{"#rhs", std::move(layer)}}, TreeArg::state("#rhs"));
            expected = tree_substitute(one, fill);
        }
        if (!regular_equal_to_depth(mine, *expected, depth)) {
            return false;
        }
    }
    return true;
}

} // namespace coalg
