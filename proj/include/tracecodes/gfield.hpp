/**************************************************************************
 * gfield.hpp
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

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace tracecodes {

/// Residue of F_p, always in [0, p-1].
struct PrimeElement {
    std::uint32_t value = 0;
    friend auto operator<=>(const PrimeElement&, const PrimeElement&) = default;
};

/**
 * Element of F_{p^e} in the power basis of the context modulus.
 *
 * The coordinate vector (c_0, ..., c_{e-1}) is packed as the integer
 * c_0 + c_1 p + ... + c_{e-1} p^{e-1}, so the packed value is also the
 * position of the element in enumeration order (constant term fastest).
 * Use FieldContext::coeffs / from_coeffs to move between the two views.
 */
struct ExtElement {
    std::uint32_t index = 0;
    friend auto operator<=>(const ExtElement&, const ExtElement&) = default;
};

/// Polynomial over F_p, constant term first.
using Polynomial = std::vector<std::uint32_t>;

// Polynomial predicates used to validate moduli.
bool is_irreducible(const Polynomial& f, std::uint32_t p);
bool is_primitive(const Polynomial& f, std::uint32_t p);

/**
 * Immutable description of F_p inside F_q, q = p^e.
 *
 * The modulus is monic, irreducible and primitive, so X is a generator of
 * F_q^*. Log/antilog and trace tables are built once; copies share them.
 */
class FieldContext {
public:
    /// Largest supported field size (table memory bound).
    static constexpr std::uint64_t max_order = std::uint64_t{1} << 22;

    /**
     * Builds the context for F_{p^e}. Without an override the modulus is the
     * lexicographically smallest monic primitive polynomial of degree e,
     * comparing coefficient tuples constant term first.
     */
    static FieldContext build(std::uint32_t p, unsigned e,
                              std::optional<Polynomial> modulus_override = std::nullopt);

    std::uint32_t p() const;
    unsigned e() const;
    std::uint32_t q() const;
    const Polynomial& modulus() const;
    /// The class of X.
    ExtElement generator() const;
    std::uint64_t generator_order() const;
    PrimeElement prime_generator() const;

    ExtElement zero() const { return ExtElement{0}; }
    ExtElement one() const { return ExtElement{1}; }
    /// i-th element in enumeration order.
    ExtElement element(std::uint32_t i) const { return ExtElement{i}; }
    ExtElement embed(PrimeElement a) const { return ExtElement{a.value}; }
    bool in_prime_field(ExtElement x) const { return x.index < p(); }

    std::vector<std::uint32_t> coeffs(ExtElement x) const;
    ExtElement from_coeffs(std::span<const std::uint32_t> c) const;

    ExtElement add(ExtElement x, ExtElement y) const;
    ExtElement sub(ExtElement x, ExtElement y) const;
    ExtElement neg(ExtElement x) const;
    ExtElement scale(PrimeElement s, ExtElement x) const;
    ExtElement mul(ExtElement x, ExtElement y) const;
    ExtElement inv(ExtElement x) const;
    ExtElement pow(ExtElement x, std::uint64_t k) const;
    /// x^{p^k}.
    ExtElement frobenius(ExtElement x, std::uint64_t k) const;

    /// Discrete log to base X; x must be nonzero.
    std::uint32_t log(ExtElement x) const;
    ExtElement exp(std::uint64_t k) const;

    PrimeElement trace(ExtElement x) const;

private:
    struct Tables;
    explicit FieldContext(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
    std::shared_ptr<const Tables> t_;
};

/// x^{p^alpha + 1}.
ExtElement power_map(const FieldContext& ctx, unsigned alpha, ExtElement x);

/// Quadratic character of F_q with eta(0) = 0.
int eta(const FieldContext& ctx, ExtElement x);

/// Legendre symbol of t mod p, 0 at t = 0.
int legendre(PrimeElement t, std::uint32_t p);

/// Affine solution set of an F_p-linear equation on F_q.
struct SolutionSet {
    std::optional<ExtElement> particular;
    std::vector<ExtElement> kernel_basis;

    bool solvable() const { return particular.has_value(); }
    /// Number of solutions (0 when unsolvable).
    std::uint64_t size(std::uint32_t p) const;
};

/// Every element of the affine set, in ascending enumeration order.
std::vector<ExtElement> enumerate_solutions(const FieldContext& ctx, const SolutionSet& s);

using AdditiveMap = std::function<ExtElement(ExtElement)>;

/// Matrix of an F_p-linear map on F_q: column j holds the image of X^j.
std::vector<std::vector<std::uint32_t>> additive_matrix(const FieldContext& ctx,
                                                        const AdditiveMap& map);

/// Solves map(x) = rhs by Gaussian elimination over F_p.
SolutionSet solve_additive(const FieldContext& ctx, const AdditiveMap& map, ExtElement rhs);

unsigned additive_rank(const FieldContext& ctx, const AdditiveMap& map);

/// X^{p^{2 alpha}} + X.
AdditiveMap linearized_map(const FieldContext& ctx, unsigned alpha);

/// a^{p^alpha} X^{p^{2 alpha}} + a X.
AdditiveMap twisted_linearized_map(const FieldContext& ctx, unsigned alpha, ExtElement a);

/// Solutions of X^{p^{2 alpha}} + X = -b^{p^alpha}.
SolutionSet linearized_solve(const FieldContext& ctx, unsigned alpha, ExtElement b);

/// Solutions of a^{p^alpha} X^{p^{2 alpha}} + a X = -b^{p^alpha}.
SolutionSet twisted_linearized_solve(const FieldContext& ctx, unsigned alpha, ExtElement a,
                                     ExtElement b);

/// gcd(alpha, e), with gcd(0, e) = e.
unsigned gcd_degree(unsigned alpha, unsigned e);

/**
 * gcd(p^d + 1, p^e - 1) for d = gcd(alpha, e), computed directly and
 * checked against the dichotomy 2 (e/d odd) / p^d + 1 (e/d even).
 */
std::uint64_t gcd_exponent(const FieldContext& ctx, unsigned alpha);

} // namespace tracecodes
