/**************************************************************************
 * test_gfield.cpp
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
#include <set>

#include "brute.hpp"
#include "tracecodes/gfield.hpp"

using namespace tracecodes;

TEST_CASE("default modulus is the smallest primitive polynomial")
{
    struct Case {
        std::uint32_t p;
        unsigned e;
    };
    for (auto [p, e] : {Case{3, 2}, Case{3, 3}, Case{3, 4}, Case{3, 6}, Case{5, 2}, Case{5, 4},
                        Case{7, 2}, Case{11, 2}}) {
        const auto ctx = FieldContext::build(p, e);
        CHECK(ctx.modulus() == brute::smallest_primitive_modulus(p, e));
        CHECK(ctx.generator_order() == ctx.q() - 1);
    }
    CHECK(FieldContext::build(3, 2).modulus() == Polynomial{2, 1, 1});
}

TEST_CASE("modulus override")
{
    const auto ctx = FieldContext::build(3, 2, Polynomial{2, 2, 1});
    CHECK(ctx.modulus() == Polynomial{2, 2, 1});
    CHECK(ctx.generator_order() == 8);

    CHECK_THROWS_AS(FieldContext::build(3, 2, Polynomial{1, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(FieldContext::build(3, 2, Polynomial{1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(FieldContext::build(3, 2, Polynomial{2, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(FieldContext::build(3, 2, Polynomial{2, 1, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(FieldContext::build(3, 2, Polynomial{2, 3, 1}), std::invalid_argument);
}

TEST_CASE("invalid field parameters")
{
    CHECK_THROWS_AS(FieldContext::build(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(FieldContext::build(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(FieldContext::build(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(FieldContext::build(3, 20), std::invalid_argument);
}

TEST_CASE("polynomial predicates")
{
    CHECK(is_irreducible(Polynomial{1, 0, 1}, 3));
    CHECK_FALSE(is_primitive(Polynomial{1, 0, 1}, 3));
    CHECK(is_primitive(Polynomial{2, 1, 1}, 3));
    CHECK_FALSE(is_irreducible(Polynomial{2, 0, 1}, 3));
}

TEST_CASE("arithmetic agrees with schoolbook polynomials")
{
    const auto ctx = FieldContext::build(3, 4);
    const brute::NaiveField nf(3, ctx.modulus());
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::uint32_t> pick(0, ctx.q() - 1);
    for (int trial = 0; trial < 400; ++trial) {
        const auto x = pick(rng), y = pick(rng);
        CHECK(ctx.mul(ExtElement{x}, ExtElement{y}).index == nf.mul(x, y));
        CHECK(ctx.add(ExtElement{x}, ExtElement{y}).index == nf.add(x, y));
        CHECK(ctx.trace(ExtElement{x}).value == nf.trace(x));
        CHECK(power_map(ctx, 1, ExtElement{x}).index == nf.power_map(1, x));
        if (x != 0) {
            CHECK(ctx.mul(ctx.inv(ExtElement{x}), ExtElement{x}) == ctx.one());
            CHECK(ctx.exp(ctx.log(ExtElement{x})) == ExtElement{x});
        }
    }
    CHECK(ctx.generator().index == 3);
    CHECK(ctx.frobenius(ExtElement{5}, 4) == ExtElement{5});
    CHECK(ctx.coeffs(ctx.from_coeffs(std::vector<std::uint32_t>{1, 2, 0, 1})) ==
          std::vector<std::uint32_t>{1, 2, 0, 1});
    CHECK_THROWS_AS(ctx.inv(ctx.zero()), std::domain_error);
    CHECK_THROWS_AS(ctx.log(ctx.zero()), std::domain_error);
}

TEST_CASE("trace fibers are balanced")
{
    for (auto [p, e] : {std::pair{3u, 4u}, std::pair{5u, 2u}, std::pair{3u, 3u}}) {
        const auto ctx = FieldContext::build(p, e);
        std::vector<std::uint64_t> fiber(p, 0);
        for (std::uint32_t i = 0; i < ctx.q(); ++i) ++fiber[ctx.trace(ctx.element(i)).value];
        for (auto f : fiber) CHECK(f == ctx.q() / p);
        // Tr(a) = e a on F_p
        for (std::uint32_t a = 0; a < p; ++a)
            CHECK(ctx.trace(ctx.embed(PrimeElement{a})).value == a * e % p);
    }
}

TEST_CASE("power map image and the gcd dichotomy")
{
    const auto ctx = FieldContext::build(3, 6);
    std::set<std::uint32_t> image;
    for (std::uint32_t i = 1; i < ctx.q(); ++i) image.insert(power_map(ctx, 1, ctx.element(i)).index);
    CHECK(image.size() == 182);
    CHECK(gcd_exponent(ctx, 1) == 4);
    CHECK(gcd_exponent(FieldContext::build(3, 3), 1) == 2);
    CHECK(gcd_exponent(FieldContext::build(5, 4), 1) == 6);
    CHECK(gcd_degree(2, 4) == 2);
    CHECK(gcd_degree(0, 4) == 4);
}

TEST_CASE("quadratic characters")
{
    const auto ctx = FieldContext::build(3, 4);
    const brute::NaiveField nf(3, ctx.modulus());
    int sum = 0;
    for (std::uint32_t i = 1; i < ctx.q(); ++i) {
        const int v = eta(ctx, ctx.element(i));
        const bool square = nf.pow(i, (ctx.q() - 1) / 2) == 1;
        CHECK(v == (square ? 1 : -1));
        sum += v;
    }
    CHECK(sum == 0);
    CHECK(eta(ctx, ctx.zero()) == 0);
    // every element of F_p^* is a square in an even-degree extension
    for (std::uint32_t a = 1; a < 3; ++a) CHECK(eta(ctx, ctx.embed(PrimeElement{a})) == 1);

    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
        for (std::uint32_t t = 1; t < p; ++t) {
            const bool square = powmod(t, (p - 1) / 2, p) == 1;
            CHECK(legendre(PrimeElement{t}, p) == (square ? 1 : -1));
        }
        CHECK(legendre(PrimeElement{0}, p) == 0);
    }
}

TEST_CASE("linearized equations")
{
    // m/d odd: X^{p^2} + X permutes F_{3^6}
    const auto odd = FieldContext::build(3, 6);
    CHECK(additive_rank(odd, linearized_map(odd, 1)) == 6);
    for (std::uint32_t i = 0; i < odd.q(); i += 37) {
        const auto s = linearized_solve(odd, 1, odd.element(i));
        REQUIRE(s.solvable());
        CHECK(s.size(3) == 1);
        const auto x = *s.particular;
        const auto lhs = odd.add(odd.frobenius(x, 2), x);
        CHECK(lhs == odd.neg(odd.frobenius(odd.element(i), 1)));
    }

    // m/d even: kernel of size p^{2d}
    const auto even = FieldContext::build(3, 8);
    CHECK(additive_rank(even, linearized_map(even, 1)) == 6);
    std::uint64_t solvable = 0;
    for (std::uint32_t i = 0; i < even.q(); ++i) {
        const auto s = linearized_solve(even, 1, even.element(i));
        if (!s.solvable()) continue;
        ++solvable;
        CHECK(s.size(3) == 9);
        if (i % 101 == 0) {
            for (auto x : enumerate_solutions(even, s))
                CHECK(even.add(even.frobenius(x, 2), x) ==
                      even.neg(even.frobenius(even.element(i), 1)));
        }
    }
    CHECK(solvable == even.q() / 9);

    const auto ctx = FieldContext::build(3, 4);
    const auto a = ctx.element(5);
    const auto s = twisted_linearized_solve(ctx, 1, a, ctx.element(7));
    for (auto x : enumerate_solutions(ctx, s)) {
        const auto lhs = ctx.add(ctx.mul(ctx.frobenius(a, 1), ctx.frobenius(x, 2)), ctx.mul(a, x));
        CHECK(lhs == ctx.neg(ctx.frobenius(ctx.element(7), 1)));
    }
    CHECK_THROWS_AS(twisted_linearized_solve(ctx, 1, ctx.zero(), ctx.one()), std::invalid_argument);
}

TEST_CASE("squares are stable under the power map")
{
    const auto ctx = FieldContext::build(5, 4);
    for (std::uint32_t i = 1; i < ctx.q(); i += 7) {
        const auto x = ctx.element(i);
        CHECK(eta(ctx, power_map(ctx, 1, x)) == 1);
        CHECK(eta(ctx, ctx.mul(x, x)) == 1);
    }
}
