/**************************************************************************
 * charsum.hpp
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

#include "tracecodes/cyclo.hpp"
#include "tracecodes/gfield.hpp"

namespace tracecodes {

/**
 * Character sums over F_q = F_{p^e}, all valued in Z[zeta_p].
 *
 * Every sum has two evaluators: a direct summation over the field
 * (`*_by_definition`) and a closed form that dispatches on the parity of
 * m/d (e = 2m, d = gcd(alpha, e)) and on solvability of the associated
 * linearized equation (`*_closed_form`). The unsuffixed entry points run
 * the closed form and, with Check::verify, also the direct sum; any
 * disagreement raises ConsistencyError.
 *
 * Notation: chi_1(x) = zeta_p^{Tr(x)}, eta is the quadratic character of
 * F_q, and
 *   S(a, b) = sum_x chi_1(a x^{p^alpha+1} + b x)
 *   A(a)    = sum_{y != 0} zeta^{-a y} sum_x zeta^{y Tr(x^{p^alpha+1})}
 *   B(a, c) = sum_{y, z != 0} zeta^{-a y - c z} sum_x chi_1(y x^{p^alpha+1} + b z x)
 */

class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class SumMethod { by_definition, closed_form };

enum class Check { closed_only, verify };

struct SumReport {
    CyclotomicInteger value;
    std::optional<BigInt> rational;
    SumMethod method = SumMethod::closed_form;
    std::string case_tag;
    /// Direct-summation value, present when verified.
    std::optional<CyclotomicInteger> oracle;
};

/// m, d and parity of m/d for a context and exponent alpha.
struct SumParameters {
    unsigned m = 0;
    unsigned d = 0;
    bool md_even = false;
};

/// Throws std::domain_error unless e is even and e/d is even.
SumParameters sum_parameters(const FieldContext& ctx, unsigned alpha);
bool closed_forms_apply(const FieldContext& ctx, unsigned alpha);

// --- direct summation -----------------------------------------------------

CyclotomicInteger gauss_prime_by_definition(std::uint32_t p);
CyclotomicInteger gauss_ext_by_definition(const FieldContext& ctx);
CyclotomicInteger quad_sum_by_definition(const FieldContext& ctx, ExtElement a2, ExtElement a1,
                                         ExtElement a0);
CyclotomicInteger weil_s_by_definition(const FieldContext& ctx, unsigned alpha, ExtElement a,
                                       ExtElement b);
CyclotomicInteger a_sum_by_definition(const FieldContext& ctx, unsigned alpha, PrimeElement a);
CyclotomicInteger b_sum_by_definition(const FieldContext& ctx, unsigned alpha, PrimeElement a,
                                      PrimeElement c, ExtElement b);
std::uint64_t solvable_count_by_definition(const FieldContext& ctx, unsigned alpha);

// --- closed forms -----------------------------------------------------------

SumReport gauss_ext_closed_form(const FieldContext& ctx);
SumReport quad_sum_closed_form(const FieldContext& ctx, ExtElement a2, ExtElement a1,
                               ExtElement a0);
SumReport weil_s_closed_form(const FieldContext& ctx, unsigned alpha, ExtElement a, ExtElement b);
SumReport a_sum_closed_form(const FieldContext& ctx, unsigned alpha, PrimeElement a);
/// The rational value of A(a) from p, m, d alone.
std::int64_t a_sum_value(std::uint32_t p, const SumParameters& sp, PrimeElement a);
/// B(a, c) from the untwisted solution gamma of X^{p^{2alpha}} + X = -b^{p^alpha}.
SumReport b_sum_closed_form(const FieldContext& ctx, unsigned alpha, PrimeElement a,
                            PrimeElement c, ExtElement b);
/// B(a, c) assembled from closed-form S(y, b z) via the twisted equations.
SumReport b_sum_via_weil(const FieldContext& ctx, unsigned alpha, PrimeElement a,
                         PrimeElement c, ExtElement b);

// --- checked evaluators -----------------------------------------------------

/// Quadratic Gauss sum over F_p; always checks G^2 = (-1)^{(p-1)/2} p.
SumReport gauss_prime(std::uint32_t p);
SumReport gauss_ext(const FieldContext& ctx, Check check = Check::verify);
SumReport quad_sum(const FieldContext& ctx, ExtElement a2, ExtElement a1, ExtElement a0,
                   Check check = Check::verify);
SumReport weil_s(const FieldContext& ctx, unsigned alpha, ExtElement a, ExtElement b,
                 Check check = Check::verify);
SumReport a_sum(const FieldContext& ctx, unsigned alpha, PrimeElement a,
                Check check = Check::verify);
SumReport b_sum(const FieldContext& ctx, unsigned alpha, PrimeElement a, PrimeElement c,
                ExtElement b, Check check = Check::verify);

struct SolvableCount {
    std::uint64_t count = 0;
    std::string case_tag;
    std::optional<std::uint64_t> oracle;
};

/// Number of b in F_q for which X^{p^{2alpha}} + X = -b^{p^alpha} is solvable.
SolvableCount solvable_count(const FieldContext& ctx, unsigned alpha,
                             Check check = Check::verify);

} // namespace tracecodes
