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
#include <string>
#include <string_view>
#include <vector>

namespace coalg::detail {

/// Untyped `name(arg, ...)` / `$y` / `name` expression shared by the textual formats.
struct Expr {
    std::string name;
    bool parameter = false; ///< written `$name`
    bool applied = false;   ///< written with parentheses
    std::vector<Expr> args;
};

/// Throws ParseError(line, ...) on malformed input.
Expr parse_expr(std::string_view text, std::size_t line);

} // namespace coalg::detail
