/**************************************************************************
 * codebuild.hpp
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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tracecodes/charsum.hpp"
#include "tracecodes/gfield.hpp"

namespace tracecodes {

enum class Variant { plain, bar };

std::string to_string(Variant v);
Variant parse_variant(const std::string& s);

/**
 * One code of either family: C_{D_a} (plain) or its extension by the
 * all-one word (bar), over F_q with q = p^{2m}.
 *
 * validate() requires p an odd prime, m >= 2, a < p and e/d even, where
 * d = gcd(alpha, e); alpha = 0 therefore gives d = e and is refused.
 */
struct CodeSpec {
    std::uint32_t p = 3;
    unsigned m = 2;
    unsigned alpha = 1;
    PrimeElement a{};
    Variant variant = Variant::plain;

    unsigned e() const { return 2 * m; }
    unsigned d() const;
    bool md_even() const;
    void validate() const;
    std::string label() const;
};

/// Field context with the default modulus for spec.p and spec.e().
FieldContext context_for(const CodeSpec& spec);

struct DefiningSet {
    std::vector<ExtElement> elements;
    PrimeElement a{};
};

/// D_a = {x != 0 : Tr(x^{p^alpha+1}) = a}, in enumeration order.
DefiningSet defining_set(const FieldContext& ctx, unsigned alpha, PrimeElement a);

/// n_a counts D_a together with 0 when a = 0; length is always |D_a|.
struct SetSize {
    std::uint64_t n_a = 0;
    std::uint64_t length = 0;
};

SetSize set_size_closed(const CodeSpec& spec);

// --- symbol counts N_b(a, c) ------------------------------------------------

/// Direct count of x in F_q with Tr(x^{p^alpha+1}) = a and Tr(b x) = c.
std::uint64_t symbol_count_direct(const FieldContext& ctx, unsigned alpha, PrimeElement a,
                                  ExtElement b, PrimeElement c);

/// p^{e-2} + (A(a) + B(a, c)) / p^2 from the checked sum evaluators.
std::uint64_t symbol_count_from_sums(const FieldContext& ctx, unsigned alpha, PrimeElement a,
                                     ExtElement b, PrimeElement c,
                                     Check check = Check::closed_only);

struct SymbolCount {
    std::uint64_t value = 0;
    std::string case_tag;
};

/// Piecewise value keyed on a = 0, parity of m/d, solvability and Tr(gamma^{p^alpha+1}).
SymbolCount symbol_count_from_lemmas(const FieldContext& ctx, unsigned alpha, PrimeElement a,
                                     ExtElement b, PrimeElement c);

/// Runs all three evaluators; throws ConsistencyError unless they agree.
SymbolCount symbol_count(const FieldContext& ctx, unsigned alpha, PrimeElement a, ExtElement b,
                         PrimeElement c);

// --- enumerators -------------------------------------------------------------

/// Count vector (t_0, ..., t_{p-1}) of one codeword.
using Composition = std::vector<std::uint64_t>;

/// Composition with every symbol shifted by u: result[s + u] = c[s].
Composition shift_composition(const Composition& c, std::uint32_t u);

struct CompleteWeightEnumerator {
    std::uint32_t p = 0;
    std::uint64_t n = 0;
    unsigned k = 0;
    std::map<Composition, std::uint64_t> terms;

    std::uint64_t total() const;
    /// Every composition has p entries summing to n.
    bool compositions_consistent() const;
};

/**
 * CWE of the code, computed by running x over F_q (and u over F_p for the
 * bar variant, through lift_bar). Codewords are counted once each: the raw
 * counts are divided by the multiplicity of the zero word, which also
 * yields the dimension k.
 */
CompleteWeightEnumerator enumerate_cwe(const FieldContext& ctx, const CodeSpec& spec,
                                       unsigned threads = 1);

/// Bar-variant CWE by adding u to every coordinate of every word.
CompleteWeightEnumerator enumerate_bar_direct(const FieldContext& ctx, const CodeSpec& spec,
                                              unsigned threads = 1);

/// Adds all p symbol shifts of every term; totals multiply by p and k grows by one.
CompleteWeightEnumerator lift_bar(const CompleteWeightEnumerator& cwe);

struct WeightDistribution {
    std::uint32_t p = 0;
    std::uint64_t n = 0;
    unsigned k = 0;
    std::map<std::uint64_t, std::uint64_t> entries;

    std::uint64_t total() const;
    /// Smallest nonzero weight, absent for the zero code.
    std::optional<std::uint64_t> min_distance() const;
};

WeightDistribution weight_distribution(const CompleteWeightEnumerator& cwe);

/// First two power moments: sum A_w = p^k - 1 and sum w A_w = p^{k-1}(p-1) n over w > 0.
bool power_moments_check(const WeightDistribution& wd);

struct RatioTest {
    std::uint64_t w_min = 0;
    std::uint64_t w_max = 0;
    /// w_min / w_max > (p-1)/p, compared exactly.
    bool passes = false;
};

/// Throws std::invalid_argument when no nonzero weight is present.
RatioTest wmin_wmax(const WeightDistribution& wd);

} // namespace tracecodes
