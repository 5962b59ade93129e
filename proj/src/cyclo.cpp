/**************************************************************************
 * cyclo.cpp
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

#include "tracecodes/cyclo.hpp"

#include <stdexcept>
#include <string>

#include "tracecodes/arith.hpp"

namespace tracecodes {

namespace {

void require_same_prime(const CyclotomicInteger& x, const CyclotomicInteger& y)
{
    if (x.prime() != y.prime())
        throw std::invalid_argument("cyclotomic operands over different primes: " +
                                    std::to_string(x.prime()) + " vs " +
                                    std::to_string(y.prime()));
}

} // namespace

CyclotomicInteger::CyclotomicInteger(std::uint32_t p)
    : p_(p)
{
    require_odd_prime(p);
    coeffs_.assign(p - 1, BigInt(0));
}

CyclotomicInteger::CyclotomicInteger(std::uint32_t p, std::vector<BigInt> coeffs)
    : p_(p), coeffs_(std::move(coeffs))
{
}

CyclotomicInteger CyclotomicInteger::from_integer(std::uint32_t p, const BigInt& n)
{
    CyclotomicInteger r(p);
    r.coeffs_[0] = n;
    return r;
}

CyclotomicInteger CyclotomicInteger::canonicalize(std::uint32_t p, std::span<const BigInt> raw)
{
    require_odd_prime(p);
    if (raw.size() != p)
        throw std::invalid_argument("raw cyclotomic vector must have length p");
    // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
    const BigInt& top = raw[p - 1];
    std::vector<BigInt> c(p - 1);
    for (std::uint32_t i = 0; i + 1 < p; ++i)
        c[i] = raw[i] - top;
    return CyclotomicInteger(p, std::move(c));
}

CyclotomicInteger CyclotomicInteger::from_exponent_counts(std::uint32_t p,
                                                          std::span<const std::int64_t> counts)
{
    require_odd_prime(p);
    if (counts.size() != p)
        throw std::invalid_argument("exponent histogram must have length p");
    std::vector<BigInt> c(p - 1);
    for (std::uint32_t i = 0; i + 1 < p; ++i)
        c[i] = BigInt(counts[i]) - BigInt(counts[p - 1]);
    return CyclotomicInteger(p, std::move(c));
}

CyclotomicInteger CyclotomicInteger::root_power(std::uint32_t p, std::int64_t k)
{
    require_odd_prime(p);
    std::vector<std::int64_t> h(p, 0);
    h[mod_reduce(k, p)] = 1;
    return from_exponent_counts(p, h);
}

bool CyclotomicInteger::is_zero() const
{
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

std::optional<BigInt> CyclotomicInteger::as_rational_integer() const
{
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return std::nullopt;
    return coeffs_[0];
}

std::vector<BigInt> CyclotomicInteger::raw() const
{
    std::vector<BigInt> r(coeffs_);
    r.emplace_back(0);
    return r;
}

CyclotomicInteger CyclotomicInteger::operator-() const
{
    std::vector<BigInt> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
    return CyclotomicInteger(p_, std::move(c));
}

CyclotomicInteger operator+(const CyclotomicInteger& x, const CyclotomicInteger& y)
{
    require_same_prime(x, y);
    std::vector<BigInt> c(x.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.coeffs_[i] + y.coeffs_[i];
    return CyclotomicInteger(x.p_, std::move(c));
}

CyclotomicInteger operator-(const CyclotomicInteger& x, const CyclotomicInteger& y)
{
    return x + (-y);
}

CyclotomicInteger operator*(const CyclotomicInteger& x, const CyclotomicInteger& y)
{
    require_same_prime(x, y);
    const std::uint32_t p = x.p_;
    // Convolution modulo X^p - 1, then canonicalize.
    std::vector<BigInt> raw(p, BigInt(0));
    for (std::uint32_t i = 0; i + 1 < p; ++i) {
        if (x.coeffs_[i] == 0) continue;
        for (std::uint32_t j = 0; j + 1 < p; ++j) {
            if (y.coeffs_[j] == 0) continue;
            raw[(i + j) % p] += x.coeffs_[i] * y.coeffs_[j];
        }
    }
    return CyclotomicInteger::canonicalize(p, raw);
}

CyclotomicInteger operator*(const BigInt& s, const CyclotomicInteger& x)
{
    std::vector<BigInt> c(x.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * x.coeffs_[i];
    return CyclotomicInteger(x.p_, std::move(c));
}

std::ostream& operator<<(std::ostream& os, const CyclotomicInteger& x)
{
    os << "Z[z_" << x.prime() << "](";
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        if (i) os << ", ";
        os << x.coeffs()[i];
    }
    return os << ")";
}

} // namespace tracecodes
