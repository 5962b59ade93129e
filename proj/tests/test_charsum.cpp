/**************************************************************************
 * test_charsum.cpp
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

#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "tracecodes/charsum.hpp"

using namespace tracecodes;

namespace {

CyclotomicInteger naive_weil(const brute::NaiveField& nf, unsigned alpha, std::uint32_t a,
                             std::uint32_t b)
{
    return brute::character_sum(nf.p(), nf.q(), [&](std::uint32_t x) {
        return nf.trace(nf.add(nf.mul(a, nf.power_map(alpha, x)), nf.mul(b, x)));
    });
}

// sum over y in F_p^* of zeta^{y t} for a histogram over t, shifted by -a
CyclotomicInteger naive_a(const brute::NaiveField& nf, unsigned alpha, std::uint32_t a)
{
    const std::uint32_t p = nf.p();
    std::vector<std::int64_t> h(p, 0);
    for (std::uint32_t x = 0; x < nf.q(); ++x) {
        const std::uint32_t t = nf.trace(nf.power_map(alpha, x));
        for (std::uint32_t y = 1; y < p; ++y) ++h[y * (t + p - a) % p];
    }
    return CyclotomicInteger::from_exponent_counts(p, h);
}

CyclotomicInteger naive_b(const brute::NaiveField& nf, unsigned alpha, std::uint32_t a,
                          std::uint32_t c, std::uint32_t b)
{
    const std::uint32_t p = nf.p();
    std::vector<std::int64_t> h(p, 0);
    for (std::uint32_t x = 0; x < nf.q(); ++x) {
        const std::uint32_t t1 = nf.trace(nf.power_map(alpha, x));
        const std::uint32_t t2 = nf.trace(nf.mul(b, x));
        for (std::uint32_t y = 1; y < p; ++y)
            for (std::uint32_t z = 1; z < p; ++z)
                ++h[(y * (t1 + p - a) + z * (t2 + p - c)) % p];
    }
    return CyclotomicInteger::from_exponent_counts(p, h);
}

std::vector<BigInt> big(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

} // namespace

TEST_CASE("quadratic Gauss sums over the prime field")
{
    const std::vector<std::pair<std::uint32_t, std::vector<BigInt>>> frozen{
        {3, big({1, 2})},
        {5, big({-1, 0, -2, -2})},
        {7, big({1, 2, 2, 0, 2, 0})},
        {11, big({1, 2, 0, 2, 2, 2, 0, 0, 0, 2})},
        {13, big({-1, 0, -2, 0, 0, -2, -2, -2, -2, 0, 0, -2})},
    };
    for (const auto& [p, coeffs] : frozen) {
        std::vector<std::int64_t> h(p, 0);
        for (std::uint32_t x = 0; x < p; ++x) ++h[std::uint64_t{x} * x % p];
        const auto naive = CyclotomicInteger::from_exponent_counts(p, h);

        const auto r = gauss_prime(p);
        CHECK(r.value == naive);
        CHECK(r.value.coeffs() == coeffs);
        const int sign = (p - 1) / 2 % 2 == 0 ? 1 : -1;
        CHECK((r.value * r.value).as_rational_integer() == BigInt(sign * static_cast<int>(p)));
    }
}

TEST_CASE("quadratic Gauss sums over extensions")
{
    struct Case {
        std::uint32_t p;
        unsigned e;
        int value;
    };
    for (auto [p, e, value] : {Case{3, 4, -9}, Case{3, 6, 27}, Case{5, 4, -25}, Case{7, 2, 7},
                               Case{3, 2, 3}, Case{5, 2, -5}}) {
        const auto ctx = FieldContext::build(p, e);
        const brute::NaiveField nf(p, ctx.modulus());
        const auto naive = brute::character_sum(
            p, nf.q(), [&](std::uint32_t x) { return nf.trace(nf.mul(x, x)); });
        const auto r = gauss_ext(ctx);
        CHECK(r.value == naive);
        REQUIRE(r.rational.has_value());
        CHECK(*r.rational == value);
        CHECK(r.oracle.has_value());
    }
    const auto odd = FieldContext::build(3, 3);
    const brute::NaiveField nf(3, odd.modulus());
    CHECK(gauss_ext_by_definition(odd) ==
          brute::character_sum(3, 27, [&](std::uint32_t x) { return nf.trace(nf.mul(x, x)); }));
    CHECK_THROWS_AS(gauss_ext_closed_form(odd), std::domain_error);
}

TEST_CASE("quadratic polynomial sums on random inputs")
{
    std::mt19937 rng(5);
    for (auto [p, e] : {std::pair{3u, 4u}, std::pair{5u, 2u}, std::pair{3u, 3u}, std::pair{7u, 2u}}) {
        const auto ctx = FieldContext::build(p, e);
        const brute::NaiveField nf(p, ctx.modulus());
        std::uniform_int_distribution<std::uint32_t> pick(0, ctx.q() - 1);
        for (int trial = 0; trial < 40; ++trial) {
            std::uint32_t a2 = 0;
            while (a2 == 0) a2 = pick(rng);
            const auto a1 = pick(rng), a0 = pick(rng);
            const auto naive = brute::character_sum(p, nf.q(), [&](std::uint32_t x) {
                return nf.trace(nf.add(nf.add(nf.mul(a2, nf.mul(x, x)), nf.mul(a1, x)), a0));
            });
            const auto r = quad_sum(ctx, ExtElement{a2}, ExtElement{a1}, ExtElement{a0});
            CHECK(r.value == naive);
        }
    }
    const auto ctx = FieldContext::build(3, 2);
    CHECK_THROWS_AS(quad_sum(ctx, ctx.zero(), ctx.one(), ctx.one()), std::invalid_argument);
}

TEST_CASE("Weil sums S(a, b)")
{
    struct Case {
        std::uint32_t p;
        unsigned m;
        unsigned alpha;
    };
    for (auto [p, m, alpha] : {Case{3, 2, 1}, Case{3, 2, 2}, Case{5, 2, 1}, Case{3, 3, 1}}) {
        const auto ctx = FieldContext::build(p, 2 * m);
        const brute::NaiveField nf(p, ctx.modulus());
        std::mt19937 rng(p * 100 + m * 10 + alpha);
        std::uniform_int_distribution<std::uint32_t> pick(1, ctx.q() - 1);
        for (int trial = 0; trial < 30; ++trial) {
            const auto a = pick(rng);
            const auto b = trial % 3 == 0 ? 0 : pick(rng);
            const auto r = weil_s(ctx, alpha, ExtElement{a}, ExtElement{b});
            CHECK(r.value == naive_weil(nf, alpha, a, b));
            CHECK_FALSE(r.case_tag.empty());
        }
    }
    const auto ctx = FieldContext::build(3, 4);
    CHECK_THROWS_AS(weil_s(ctx, 1, ctx.zero(), ctx.one()), std::invalid_argument);
}

TEST_CASE("A(a) and B(a, c)")
{
    const auto ctx = FieldContext::build(3, 6);
    const brute::NaiveField nf(3, ctx.modulus());

    const auto a0 = a_sum(ctx, 1, PrimeElement{0}, Check::closed_only);
    CHECK(*a0.rational == -54);
    CHECK(a0.case_tag == "Lemma16/m-d-odd");
    BigInt total = 0;
    for (std::uint32_t a = 0; a < 3; ++a) {
        const auto r = a_sum(ctx, 1, PrimeElement{a});
        CHECK(r.value == naive_a(nf, 1, a));
        CHECK(a_sum_value(3, sum_parameters(ctx, 1), PrimeElement{a}) == *r.rational);
        total += *r.rational;
    }
    CHECK(total == 0);

    const auto b = b_sum(ctx, 1, PrimeElement{0}, PrimeElement{0}, ctx.one());
    CHECK(*b.rational == -108);
    CHECK(b.case_tag == "Lemma17(1)/trace-zero");

    std::mt19937 rng(3);
    std::uniform_int_distribution<std::uint32_t> pick(1, ctx.q() - 1);
    for (int trial = 0; trial < 20; ++trial) {
        const auto bx = pick(rng);
        for (std::uint32_t a = 0; a < 3; ++a)
            for (std::uint32_t c = 0; c < 3; ++c) {
                const auto r = b_sum(ctx, 1, PrimeElement{a}, PrimeElement{c}, ExtElement{bx});
                CHECK(r.value == naive_b(nf, 1, a, c, bx));
                const auto mirrored =
                    b_sum(ctx, 1, PrimeElement{a}, PrimeElement{(3 - c) % 3}, ExtElement{bx},
                          Check::closed_only);
                CHECK(mirrored.value == r.value);
            }
    }
    CHECK_THROWS_AS(b_sum(ctx, 1, PrimeElement{0}, PrimeElement{0}, ctx.zero()),
                    std::invalid_argument);
    CHECK_THROWS_AS(a_sum(ctx, 1, PrimeElement{3}), std::invalid_argument);
}

TEST_CASE("B(a, c) through both linearized routes, m/d even")
{
    const auto ctx = FieldContext::build(3, 4);
    const brute::NaiveField nf(3, ctx.modulus());
    for (std::uint32_t bx = 1; bx < ctx.q(); ++bx)
        for (std::uint32_t a = 0; a < 3; ++a)
            for (std::uint32_t c = 0; c < 3; ++c) {
                const auto closed = b_sum_closed_form(ctx, 1, PrimeElement{a}, PrimeElement{c},
                                                      ExtElement{bx});
                const auto weil = b_sum_via_weil(ctx, 1, PrimeElement{a}, PrimeElement{c},
                                                 ExtElement{bx});
                CHECK(closed.value == weil.value);
                CHECK(closed.value == naive_b(nf, 1, a, c, bx));
            }
}

TEST_CASE("solvable counts")
{
    const auto even = solvable_count(FieldContext::build(3, 4), 1);
    CHECK(even.count == 9);
    CHECK(even.case_tag == "Lemma19/m-d-even");
    CHECK(even.oracle == std::optional<std::uint64_t>{9});
    CHECK(solvable_count(FieldContext::build(3, 6), 1).count == 729);
    CHECK(solvable_count(FieldContext::build(5, 4), 1).count == 25);
    CHECK(solvable_count(FieldContext::build(3, 4), 2).count == 81);
    CHECK(solvable_count_by_definition(FieldContext::build(3, 8), 1) == 729);
}

TEST_CASE("closed forms refuse unsupported parameters")
{
    CHECK_THROWS_AS(sum_parameters(FieldContext::build(3, 3), 1), std::domain_error);
    CHECK_THROWS_AS(sum_parameters(FieldContext::build(3, 4), 0), std::domain_error);
    CHECK_FALSE(closed_forms_apply(FieldContext::build(3, 6), 0));
    CHECK(closed_forms_apply(FieldContext::build(3, 6), 1));
    const auto sp = sum_parameters(FieldContext::build(3, 8), 2);
    CHECK(sp.m == 4);
    CHECK(sp.d == 2);
    CHECK(sp.md_even);
}
