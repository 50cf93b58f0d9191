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

#include "coalg/error.hh"

namespace coalg {

namespace {

std::string with_line(std::size_t line, const std::string& what) {
    if (line == 0) {
        return what;
    }
    return "line " + std::to_string(line) + ": " + what;
}

} // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error(with_line(line, what)), line_(line) {}

UnguardedError::UnguardedError(std::size_t line, const std::string& variable)
    : Error(line == 0 ? "unguarded equation for variable " + variable
                      : "unguarded equation at line " + std::to_string(line)),
      line_(line), variable_(variable) {}

} // namespace coalg
