/**************************************************************************
 * test_oracle.cpp
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

#include <algorithm>

#include "tracecodes/arith.hpp"
#include "tracecodes/oracle.hpp"

using namespace tracecodes;

namespace {

CodeSpec spec_of(std::uint32_t p, unsigned m, unsigned alpha, std::uint32_t a,
                 Variant v = Variant::plain)
{
    return CodeSpec{p, m, alpha, PrimeElement{a}, v};
}

bool has_erratum(const VerifyReport& r, const std::string& needle)
{
    return std::any_of(r.errata.begin(), r.errata.end(), [&](const Erratum& e) {
        return e.detail.find(needle) != std::string::npos;
    });
}

} // namespace

TEST_CASE("applicability")
{
    CHECK(applicability(spec_of(3, 3, 1, 0)).tag == CaseTag{Theorem::T2, Variant::plain});
    CHECK(applicability(spec_of(3, 3, 1, 2, Variant::bar)).tag == CaseTag{Theorem::T4, Variant::bar});
    CHECK(applicability(spec_of(3, 4, 1, 0)).tag == CaseTag{Theorem::T6, Variant::plain});
    CHECK(applicability(spec_of(3, 4, 1, 1, Variant::bar)).tag->name() == "T8/bar");
    CHECK(applicability(spec_of(3, 2, 1, 1)).tag->name() == "T8/plain");

    const auto na = applicability(spec_of(3, 2, 1, 0));
    CHECK_FALSE(na.applicable());
    CHECK(na.reason == "m > d+1 fails (m = 2, d = 1) for a = 0 with m/d even");
    CHECK_THROWS_AS(predict_wd(spec_of(3, 2, 1, 0)), NotApplicable);
    CHECK_THROWS_AS(predict_cwe(spec_of(3, 2, 1, 0)), NotApplicable);
    CHECK_THROWS_AS(applicability(spec_of(3, 3, 2, 0)), std::invalid_argument);
}

TEST_CASE("weight tables")
{
    const auto t2 = predict_wd(spec_of(3, 3, 1, 0));
    CHECK(t2.n == 224);
    CHECK(t2.k == 6);
    CHECK(t2.entries == std::map<std::uint64_t, std::uint64_t>{{0, 1}, {144, 504}, {162, 224}});

    const auto t6 = predict_wd(spec_of(3, 4, 1, 0));
    CHECK(t6.entries ==
          std::map<std::uint64_t, std::uint64_t>{{0, 1}, {1296, 504}, {1350, 5832}, {1458, 224}});

    for (const auto& spec : verification_grid()) {
        const auto wd = predict_wd(spec);
        CHECK(wd.total() == ipow(spec.p, wd.k));
        CHECK(wd.k == spec.e() + (spec.variant == Variant::bar ? 1 : 0));
        CHECK(power_moments_check(wd));
    }
}

TEST_CASE("enumerator formulas")
{
    const auto cwe = predict_cwe(spec_of(3, 3, 1, 1));
    const std::map<Composition, std::uint64_t> expected{
        {{252, 0, 0}, 1}, {{90, 81, 81}, 476}, {{72, 90, 90}, 252}};
    CHECK(cwe.terms == expected);
    CHECK(cwe.n == 252);

    for (const auto& spec : verification_grid()) {
        if (spec.variant != Variant::plain) continue;
        auto bar = spec;
        bar.variant = Variant::bar;
        CHECK(predict_cwe(bar).terms == lift_bar(predict_cwe(spec)).terms);
    }
}

TEST_CASE("enumerator formulas do not depend on the primitive root")
{
    for (const auto& spec : {spec_of(5, 2, 1, 1), spec_of(5, 2, 1, 2, Variant::bar),
                             spec_of(7, 2, 1, 3), spec_of(7, 3, 1, 0), spec_of(5, 3, 1, 4)}) {
        const auto base = predict_cwe(spec);
        for (std::uint32_t g = 2; g < spec.p; ++g)
            if (is_primitive_root(g, spec.p)) CHECK(predict_cwe(spec, g).terms == base.terms);
        CHECK_THROWS_AS(predict_cwe(spec, 1), std::invalid_argument);
    }
}

TEST_CASE("absolute-index reading of the bar enumerator differs")
{
    const auto spec = spec_of(3, 3, 1, 1, Variant::bar);
    CHECK(predict_cwe_absolute_index(spec).terms != predict_cwe(spec).terms);
}

TEST_CASE("printed examples")
{
    CHECK(printed_examples().size() == 8);
    const auto ex = printed_example(spec_of(3, 4, 1, 1, Variant::bar));
    REQUIRE(ex.has_value());
    CHECK(ex->terms.at({810, 729, 729}) == 496);
    CHECK(ex->terms.at({756, 756, 756}) == 17496);
    CHECK_FALSE(printed_example(spec_of(5, 2, 1, 1)).has_value());
}

TEST_CASE("verification of the worked examples")
{
    const auto r = verify(spec_of(3, 3, 1, 0));
    CHECK(r.matches());
    CHECK(r.checks.ok());
    CHECK(r.exit_code(true) == 0);
    CHECK(r.wd.min_distance() == std::optional<std::uint64_t>{144});
    CHECK(has_erratum(r, "= 468"));

    const auto a1 = verify(spec_of(3, 3, 1, 1, Variant::bar), 2);
    CHECK(a1.matches());
    CHECK(a1.checks.bar_direct == std::optional<bool>{true});
    CHECK(has_erratum(a1, "relative to the shifted position"));
}

TEST_CASE("printed count 496 is reported as an erratum")
{
    const auto r = verify(spec_of(3, 4, 1, 1, Variant::bar), 4);
    CHECK(r.matches());
    CHECK(r.checks.ok());
    CHECK(r.cwe.total() == 19683);
    CHECK(r.cwe.terms.at({810, 729, 729}) == 476);
    CHECK(r.cwe.terms.at({756, 756, 756}) == 17496);
    CHECK(has_erratum(r, "(810,729,729): printed count 496, enumerated 476"));
    CHECK(has_erratum(r, "(729,810,729): printed count 496, enumerated 476"));
    CHECK(has_erratum(r, "(729,729,810): printed count 496, enumerated 476"));
}

TEST_CASE("strict exit codes")
{
    VerifyReport r = verify(spec_of(3, 3, 1, 1));
    CHECK(r.exit_code(true) == 0);
    r.cwe_match = false;
    CHECK(r.exit_code(false) == 0);
    CHECK(r.exit_code(true) == 1);
    r.checks.power_moments = false;
    CHECK(r.exit_code(false) == 1);

    const auto na = verify(spec_of(3, 2, 1, 0));
    CHECK(na.matches());
    CHECK(na.checks.ok());
    CHECK_FALSE(na.wd_match.has_value());
    CHECK(na.exit_code(true) == 0);
}

TEST_CASE("grid")
{
    const auto grid = verification_grid();
    CHECK(grid.size() == 30);
    for (const auto& spec : grid) CHECK(applicability(spec).applicable());
}
