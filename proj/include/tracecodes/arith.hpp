/**************************************************************************
 * arith.hpp
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
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tracecodes {

// Small machine-integer helpers shared by every module.

constexpr bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

constexpr bool is_odd_prime(std::uint64_t n) { return n != 2 && is_prime(n); }

inline void require_odd_prime(std::uint64_t p)
{
    if (!is_odd_prime(p))
        throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
}

// base^exp, throwing on 64-bit overflow.
inline std::uint64_t ipow(std::uint64_t base, unsigned exp)
{
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
            throw std::overflow_error("integer power overflows 64 bits");
        r *= base;
    }
    return r;
}

// Signed variant for closed-form formulas that subtract powers.
inline std::int64_t spow(std::int64_t base, int exp)
{
    if (exp < 0) throw std::domain_error("negative exponent in integer power");
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// Distinct prime factors in ascending order.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod)
{
    unsigned __int128 r = 1 % mod, b = base % mod;
    while (exp) {
        if (exp & 1) r = r * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(r);
}

// Smallest primitive root of F_p.
inline std::uint32_t smallest_primitive_root(std::uint32_t p)
{
    require_odd_prime(p);
    const auto factors = prime_factors(p - 1);
    for (std::uint32_t g = 2; g < p; ++g) {
        bool ok = true;
        for (auto r : factors)
            if (powmod(g, (p - 1) / r, p) == 1) { ok = false; break; }
        if (ok) return g;
    }
    return 1; // p = 2 never reaches here
}

inline bool is_primitive_root(std::uint32_t g, std::uint32_t p)
{
    if (g % p == 0) return false;
    for (auto r : prime_factors(p - 1))
        if (powmod(g, (p - 1) / r, p) == 1) return false;
    return true;
}

constexpr std::uint32_t mod_reduce(std::int64_t v, std::uint32_t p)
{
    const std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p)
{
    if (a % p == 0) throw std::domain_error("zero has no inverse mod p");
    return static_cast<std::uint32_t>(powmod(a, p - 2, p));
}

} // namespace tracecodes
