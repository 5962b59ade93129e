/**************************************************************************
 * cyclo.hpp
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
#include <ostream>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tracecodes {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Exact element of Z[zeta_p] for an odd prime p.
 *
 * Stored in the basis {1, zeta, ..., zeta^{p-2}}. The relation
 * 1 + zeta + ... + zeta^{p-1} = 0 is used to eliminate zeta^{p-1}, so the
 * coefficient vector is a unique canonical form and equality is
 * coefficient-wise. Values are immutable once built.
 */
class CyclotomicInteger {
public:
    /// The zero element of Z[zeta_p].
    explicit CyclotomicInteger(std::uint32_t p);

    static CyclotomicInteger from_integer(std::uint32_t p, const BigInt& n);

    /// Reduces a length-p vector indexed by exponent mod p to canonical form.
    static CyclotomicInteger canonicalize(std::uint32_t p, std::span<const BigInt> raw);

    /// Same as canonicalize, for machine-integer exponent histograms.
    static CyclotomicInteger from_exponent_counts(std::uint32_t p,
                                                  std::span<const std::int64_t> counts);

    /// zeta_p^{k mod p}.
    static CyclotomicInteger root_power(std::uint32_t p, std::int64_t k);

    std::uint32_t prime() const { return p_; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    bool is_zero() const;

    /// n when the element is the rational integer n, nothing otherwise.
    std::optional<BigInt> as_rational_integer() const;

    /// Length-p representation with a zero coefficient at zeta^{p-1}.
    std::vector<BigInt> raw() const;

    CyclotomicInteger operator-() const;
    friend CyclotomicInteger operator+(const CyclotomicInteger& x, const CyclotomicInteger& y);
    friend CyclotomicInteger operator-(const CyclotomicInteger& x, const CyclotomicInteger& y);
    friend CyclotomicInteger operator*(const CyclotomicInteger& x, const CyclotomicInteger& y);
    friend CyclotomicInteger operator*(const BigInt& s, const CyclotomicInteger& x);

    friend bool operator==(const CyclotomicInteger& x, const CyclotomicInteger& y) = default;

private:
    CyclotomicInteger(std::uint32_t p, std::vector<BigInt> coeffs);

    std::uint32_t p_;
    std::vector<BigInt> coeffs_; // size p-1
};

std::ostream& operator<<(std::ostream& os, const CyclotomicInteger& x);

} // namespace tracecodes
