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
#include <cstdint>
#include <string>
#include <vector>

namespace coalg {

struct AcceptanceOptions {
    std::uint64_t seed = 42;
    std::size_t depth = 16;
    std::uint64_t family_bound = 8;
    std::size_t count = 200;
    std::size_t max_states = 6;
    /// Negative control: compare the chain sizes against a deliberately wrong table.
    bool corrupt_chain_table = false;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    double limit_seconds = 0;
};

struct AcceptanceReport {
    std::vector<CriterionResult> results;

    bool all_pass() const;
    /// `PASS <id> <name>: <detail>` per criterion and a summary line. Timings are
    /// only included on request so that the default text is reproducible.
    std::string text(bool with_timing = false) const;
};

constexpr int kNumCriteria = 9;

/// Runs one criterion (1..kNumCriteria). A criterion fails when its check fails,
/// throws, or exceeds its time limit.
CriterionResult run_criterion(int id, const AcceptanceOptions& opts);
AcceptanceReport run_acceptance(const AcceptanceOptions& opts);

} // namespace coalg
