/**************************************************************************
 * brute.hpp
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

// Slow reference implementations for tests. They share no code with the
// library beyond the integer helpers and the cyclotomic ring: field
// arithmetic is schoolbook polynomial multiplication modulo the modulus.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "tracecodes/arith.hpp"
#include "tracecodes/codebuild.hpp"
#include "tracecodes/cyclo.hpp"

namespace brute {

using tracecodes::Composition;
using Poly = std::vector<std::uint32_t>;

class NaiveField {
public:
    NaiveField(std::uint32_t p, const Poly& monic) : p_(p), f_(monic), e_(monic.size() - 1)
    {
        q_ = static_cast<std::uint32_t>(tracecodes::ipow(p, static_cast<unsigned>(e_)));
    }

    std::uint32_t p() const { return p_; }
    std::size_t e() const { return e_; }
    std::uint32_t q() const { return q_; }

    Poly unpack(std::uint32_t idx) const
    {
        Poly c(e_);
        for (auto& v : c) {
            v = idx % p_;
            idx /= p_;
        }
        return c;
    }

    std::uint32_t pack(const Poly& c) const
    {
        std::uint32_t idx = 0;
        for (std::size_t i = e_; i-- > 0;) idx = idx * p_ + c[i];
        return idx;
    }

    std::uint32_t add(std::uint32_t x, std::uint32_t y) const
    {
        Poly a = unpack(x), b = unpack(y);
        for (std::size_t i = 0; i < e_; ++i) a[i] = (a[i] + b[i]) % p_;
        return pack(a);
    }

    std::uint32_t mul(std::uint32_t x, std::uint32_t y) const
    {
        const Poly a = unpack(x), b = unpack(y);
        std::vector<std::uint64_t> r(2 * e_, 0);
        for (std::size_t i = 0; i < e_; ++i)
            for (std::size_t j = 0; j < e_; ++j) r[i + j] += std::uint64_t{a[i]} * b[j];
        for (auto& v : r) v %= p_;
        for (std::size_t k = 2 * e_ - 1; k >= e_; --k) {
            const std::uint64_t c = r[k];
            r[k] = 0;
            if (c == 0) continue;
            for (std::size_t i = 0; i < e_; ++i)
                r[k - e_ + i] = (r[k - e_ + i] + (p_ - f_[i]) * c) % p_;
        }
        Poly out(e_);
        for (std::size_t i = 0; i < e_; ++i) out[i] = static_cast<std::uint32_t>(r[i]);
        return pack(out);
    }

    std::uint32_t pow(std::uint32_t x, std::uint64_t k) const
    {
        std::uint32_t r = 1;
        for (; k; k >>= 1) {
            if (k & 1) r = mul(r, x);
            x = mul(x, x);
        }
        return r;
    }

    /// Sum of the conjugates x^{p^i}; must land in F_p.
    std::uint32_t trace(std::uint32_t x) const
    {
        std::uint32_t t = 0, y = x;
        for (std::size_t i = 0; i < e_; ++i) {
            t = add(t, y);
            y = pow(y, p_);
        }
        if (t >= p_) throw std::logic_error("trace outside the prime field");
        return t;
    }

    std::uint32_t power_map(unsigned alpha, std::uint32_t x) const
    {
        return pow(x, tracecodes::ipow(p_, alpha) + 1);
    }

    /// Multiplicative order of X, or 0 when X is not invertible of full order.
    std::uint64_t order_of_x() const
    {
        const std::uint32_t x = e_ == 1 ? 0 : p_;
        std::uint32_t y = x;
        for (std::uint64_t k = 1; k < q_; ++k) {
            if (y == 1) return k;
            y = mul(y, x);
        }
        return 0;
    }

private:
    std::uint32_t p_;
    Poly f_;
    std::size_t e_;
    std::uint32_t q_;
};

/// First monic degree-e polynomial, tuples (c_0, ..., c_{e-1}) ascending with
/// c_0 most significant, for which X has order p^e - 1.
inline Poly smallest_primitive_modulus(std::uint32_t p, unsigned e)
{
    const std::uint64_t count = tracecodes::ipow(p, e);
    for (std::uint64_t n = 0; n < count; ++n) {
        Poly f(e + 1, 0);
        f[e] = 1;
        std::uint64_t v = n;
        for (unsigned i = 0; i < e; ++i) {
            f[e - 1 - i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        if (NaiveField(p, f).order_of_x() == count - 1) return f;
    }
    throw std::logic_error("no primitive polynomial");
}

/// sum_x zeta^{trace(g(x))} from an exponent histogram.
template <class F>
tracecodes::CyclotomicInteger character_sum(std::uint32_t p, std::uint32_t q, F&& exponent)
{
    std::vector<std::int64_t> h(p, 0);
    for (std::uint32_t x = 0; x < q; ++x) ++h[exponent(x) % p];
    return tracecodes::CyclotomicInteger::from_exponent_counts(p, h);
}

/// CWE of the code over the naive field, counting each x once (no normalization).
inline std::map<Composition, std::uint64_t> raw_cwe(const NaiveField& F, unsigned alpha,
                                                    std::uint32_t a, bool bar)
{
    std::vector<std::uint32_t> D;
    for (std::uint32_t x = 1; x < F.q(); ++x)
        if (F.trace(F.power_map(alpha, x)) == a) D.push_back(x);
    std::vector<std::uint32_t> tr(F.q());
    for (std::uint32_t x = 0; x < F.q(); ++x) tr[x] = F.trace(x);
    std::map<Composition, std::uint64_t> out;
    for (std::uint32_t x = 0; x < F.q(); ++x) {
        std::vector<std::uint32_t> word;
        for (auto d : D) word.push_back(tr[F.mul(x, d)]);
        for (std::uint32_t u = 0; u < (bar ? F.p() : 1); ++u) {
            Composition c(F.p(), 0);
            for (auto s : word) ++c[(s + u) % F.p()];
            ++out[c];
        }
    }
    return out;
}

} // namespace brute
