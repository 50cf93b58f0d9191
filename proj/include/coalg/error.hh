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
#include <stdexcept>
#include <string>

namespace coalg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. Carries the 1-based line number, 0 when the
/// problem is not tied to a single line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what);

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A value violates the invariants of its type (arity mismatch, unknown state, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An equation system contains an equation `x = x'` between two variables.
class UnguardedError : public Error {
public:
    UnguardedError(std::size_t line, const std::string& variable);

    std::size_t line() const noexcept { return line_; }
    const std::string& variable() const noexcept { return variable_; }

private:
    std::size_t line_;
    std::string variable_;
};

/// A requested construction would exceed a size guard.
class LimitExceeded : public Error {
public:
    using Error::Error;
};

/// A schematic family did not stabilise within the family bound.
class StabilizationError : public Error {
public:
    using Error::Error;
};

/// A theorem-backed bound was violated. Indicates a bug, never bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace coalg
