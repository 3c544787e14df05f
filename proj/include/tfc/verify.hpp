/*
 * Copyright 2026 The tfc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace tfc::verify {

/// One verified statement: an alpha-matrix comparison, a constraint checked
/// over sampled free functions, or an algebraic-law sweep. `exact` checks
/// pass only with zero deviation, whatever the tolerance says.
struct Check {
    std::string description;
    std::size_t samples = 0;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool exact = false;
    bool pass = false;
    std::string observed;  // rendered first-sample value, empty if not applicable

    static Check from_deviation(std::string description, std::size_t samples,
                                double max_deviation, double tolerance, bool exact,
                                std::string observed = "");
};

/// A rendered alpha matrix: JSON entries (full precision) plus a label for
/// the multivariate per-dimension case.
struct AlphaBlock {
    std::string label;
    nlohmann::json entries;
};

/// Everything `tfc run` reports for one example. Serialization is a pure
/// function of the fields, so identical (example, seed, samples, tolerance)
/// yield byte-identical JSON.
struct Report {
    std::string example_id;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    double tolerance = 0.0;
    std::string generator;
    std::vector<AlphaBlock> alphas;
    std::vector<Check> checks;

    bool pass() const;
};

/// Aggregate for `tfc verify-all`: all four examples plus the algebraic
/// suites (field laws, matrix-inverse round trips, switching duality).
struct Aggregate {
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    double tolerance = 0.0;
    std::string generator;
    std::vector<Report> examples;
    std::vector<Check> suites;

    bool pass() const;
};

inline constexpr const char* kExampleIds[] = {"matrix_r2x3", "string_c2", "gf4",
                                              "multivariate"};

/// Build one example, compare its alpha against the reference, and check
/// every constraint over `samples` free functions. When samples >= 1 the
/// first free function is always the zero function; the rest are random.
/// Throws UnknownExampleError for an unrecognized id.
Report run_example(const std::string& example_id, std::uint64_t seed,
                   std::size_t samples, double tolerance);

Aggregate run_all(std::uint64_t seed, std::size_t samples, double tolerance);

std::string to_json(const Report& report);
std::string to_text(const Report& report);
std::string to_json(const Aggregate& aggregate);
std::string to_text(const Aggregate& aggregate);

}  // namespace tfc::verify
