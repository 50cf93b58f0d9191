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
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "coalg/signatures.hh"

namespace coalg {

/// Right-hand side of a flat equation `x = ...`.
struct Rhs {
    enum class Kind {
        Apply,     ///< σ(a_1, ..., a_n), each a_i a variable or a parameter
        Parameter, ///< a bare parameter y
        Variable,  ///< a bare variable; only ever produced to be rejected
    };

    Kind kind = Kind::Apply;
    std::string name; ///< symbol, parameter or variable
    std::vector<TreeArg> args; ///< for Apply; TreeArg::State denotes a variable

    static Rhs apply(std::string symbol, std::vector<TreeArg> args) {
        return {Kind::Apply, std::move(symbol), std::move(args)};
    }
    static Rhs parameter(std::string y) { return {Kind::Parameter, std::move(y), {}}; }
    static Rhs variable(std::string x) { return {Kind::Variable, std::move(x), {}}; }

    bool operator==(const Rhs&) const = default;
};

struct Equation {
    std::string variable;
    Rhs rhs;
    std::size_t line = 0; ///< source line, 0 when built programmatically
};

/// Guarded flat corecursive equation system over X (variables) and Y (parameters).
class EquationSystem {
public:
    /// Validates totality, arities, references and guardedness.
    /// Throws UnguardedError, ParseError (when equations carry lines) or InvalidArgument.
    EquationSystem(Signature sig, std::vector<Equation> equations, std::set<std::string> parameters);

    const Signature& signature() const { return sig_; }
    const std::vector<Equation>& equations() const { return eqs_; }
    const std::set<std::string>& parameters() const { return params_; }
    std::vector<std::string> variables() const;
    const Rhs& rhs(std::string_view x) const;

private:
    Signature sig_;
    std::vector<Equation> eqs_;
    std::set<std::string> params_;
    std::map<std::string, std::size_t, std::less<>> index_;
};

/// Parses `x = expr` lines; `$y` is a parameter. Nested right-hand sides are
/// flattened by introducing variables `x.1`, `x.2`, ... Parameters are those
/// mentioned in the file. Throws ParseError or UnguardedError naming the line.
EquationSystem parse_equations(const Signature& sig, std::string_view text);
/// As above, inferring the signature from symbol usage.
EquationSystem parse_equations(std::string_view text);

using Solution = std::map<std::string, RegularTree, std::less<>>;

/// Unique solution: x ↦ the regular tree presented by the system itself, rooted at x.
/// States are the variables with symbol right-hand sides; variables bound to a
/// parameter are forwarded to that parameter leaf.
Solution solve(const EquationSystem& sys);

/// Single parameter leaf (the unit of the tree monad).
RegularTree eta(const Signature& sig, const std::string& y);

/// Grafts s(y) onto every y-leaf of t (the monad multiplication on regular trees).
/// States of t keep their names, states of s(y) are prefixed `y/`.
/// Throws InvalidArgument if some parameter of t has no entry or signatures differ.
RegularTree tree_substitute(const RegularTree& t, const std::map<std::string, RegularTree>& s);

/// Checks the solution square to depth d: each cand(x) must unfold like rhs(x)
/// with variables replaced by their candidates and parameters by eta.
bool verify_solution(const EquationSystem& sys, const Solution& cand, std::size_t depth);

std::string to_string(const EquationSystem& sys);

} // namespace coalg
