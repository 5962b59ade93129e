/**************************************************************************
 * oracle.hpp
 *
 * Copyright 2026 The tracecodes Authors
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
 **************************************************************************/

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tracecodes/codebuild.hpp"

namespace tracecodes {

/// The four closed-form families, keyed on a = 0 and the parity of m/d.
enum class Theorem { T2, T4, T6, T8 };

struct CaseTag {
    Theorem theorem = Theorem::T2;
    Variant variant = Variant::plain;

    /// e.g. "T6/bar".
    std::string name() const;
    friend bool operator==(const CaseTag&, const CaseTag&) = default;
};

struct Applicability {
    std::optional<CaseTag> tag;
    /// Violated side condition when tag is empty.
    std::string reason;

    bool applicable() const { return tag.has_value(); }
};

class NotApplicable : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Throws std::invalid_argument for specs that fail CodeSpec::validate.
Applicability applicability(const CodeSpec& spec);

/// Weight distribution instantiated from the tables; throws NotApplicable.
WeightDistribution predict_wd(const CodeSpec& spec);

/**
 * CWE instantiated from the enumerator formulas with g the smallest
 * primitive root of F_p. Bar variants are materialized term by term with
 * the symbol index measured relative to the shifted position. Equal
 * compositions are merged and zero-count terms dropped.
 */
CompleteWeightEnumerator predict_cwe(const CodeSpec& spec);
CompleteWeightEnumerator predict_cwe(const CodeSpec& spec, std::uint32_t g);

/**
 * Bar-variant enumerator read with absolute symbol indices inside the
 * Legendre arguments. Kept to document that this reading is inconsistent;
 * the compositions need not sum to n.
 */
CompleteWeightEnumerator predict_cwe_absolute_index(const CodeSpec& spec);

struct CweDiff {
    Composition composition;
    std::uint64_t predicted = 0;
    std::uint64_t enumerated = 0;
};

struct WdDiff {
    std::uint64_t weight = 0;
    std::uint64_t predicted = 0;
    std::uint64_t enumerated = 0;
};

struct Erratum {
    std::string source;
    std::string detail;
};

/// Enumerator and parameters as printed for the two worked examples.
struct PrintedExample {
    CodeSpec spec;
    std::uint64_t n = 0;
    unsigned k = 0;
    std::uint64_t d = 0;
    std::map<Composition, std::uint64_t> terms;
};

const std::vector<PrintedExample>& printed_examples();
std::optional<PrintedExample> printed_example(const CodeSpec& spec);

struct StructuralChecks {
    /// Counts sum to p^e (plain) or p^{e+1} (bar); p^k outside the closed-form range.
    bool cwe_total = false;
    bool compositions = false;
    bool power_moments = false;
    std::optional<bool> table_total;
    /// Lifted versus direct bar enumeration, on small bar specs.
    std::optional<bool> bar_direct;

    bool ok() const;
};

struct VerifyReport {
    CodeSpec spec;
    Applicability applicability;
    std::optional<bool> wd_match;
    std::optional<bool> cwe_match;
    std::vector<CweDiff> cwe_diffs;
    std::vector<WdDiff> wd_diffs;
    std::vector<Erratum> errata;
    StructuralChecks checks;
    CompleteWeightEnumerator cwe;
    WeightDistribution wd;
    std::optional<CompleteWeightEnumerator> predicted_cwe;
    std::optional<WeightDistribution> predicted_wd;

    /// Applicable specs must match both predictions; others pass vacuously.
    bool matches() const;
    /// 0 on success; 1 on structural failure, or on a prediction mismatch when strict.
    int exit_code(bool strict) const;
};

VerifyReport verify(const FieldContext& ctx, const CodeSpec& spec, unsigned threads = 1);
VerifyReport verify(const CodeSpec& spec, unsigned threads = 1);

/// Acceptance grid: every (p, m, alpha, a) listed, both variants, applicable specs only.
std::vector<CodeSpec> verification_grid();

} // namespace tracecodes
