/**************************************************************************
 * charsum.cpp
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

#include "tracecodes/charsum.hpp"

#include <sstream>
#include <vector>

#include "tracecodes/arith.hpp"

namespace tracecodes {

namespace {

using Histogram = std::vector<std::int64_t>;

CyclotomicInteger integer(std::uint32_t p, std::int64_t n)
{
    return CyclotomicInteger::from_integer(p, BigInt(n));
}

CyclotomicInteger zeta(std::uint32_t p, std::int64_t k)
{
    return CyclotomicInteger::root_power(p, k);
}

SumReport closed(CyclotomicInteger v, std::string tag)
{
    SumReport r{std::move(v), std::nullopt, SumMethod::closed_form, std::move(tag), std::nullopt};
    r.rational = r.value.as_rational_integer();
    return r;
}

SumReport by_definition(CyclotomicInteger v, std::string tag)
{
    SumReport r = closed(std::move(v), std::move(tag));
    r.method = SumMethod::by_definition;
    return r;
}

template <typename Closed, typename Direct>
SumReport checked(Closed&& closed_eval, Direct&& direct_eval, Check check, const char* what)
{
    SumReport r = closed_eval();
    if (check == Check::verify) {
        CyclotomicInteger d = direct_eval();
        if (!(d == r.value)) {
            std::ostringstream os;
            os << what << ": closed form [" << r.case_tag << "] gives " << r.value
               << " but direct summation gives " << d;
            throw ConsistencyError(os.str());
        }
        r.oracle = std::move(d);
    }
    return r;
}

void require_rational(const SumReport& r, const char* what)
{
    if (!r.rational)
        throw ConsistencyError(std::string(what) + " is expected to be a rational integer");
}

} // namespace

SumParameters sum_parameters(const FieldContext& ctx, unsigned alpha)
{
    const unsigned e = ctx.e();
    if (e % 2 != 0) throw std::domain_error("closed forms need an even extension degree");
    const unsigned d = gcd_degree(alpha, e);
    const unsigned m = e / 2;
    if (m % d != 0)
        throw std::domain_error("closed forms need e/d even (d = gcd(alpha, e) = " +
                                std::to_string(d) + ", e = " + std::to_string(e) + ")");
    return SumParameters{m, d, (m / d) % 2 == 0};
}

bool closed_forms_apply(const FieldContext& ctx, unsigned alpha)
{
    return ctx.e() % 2 == 0 && (ctx.e() / 2) % gcd_degree(alpha, ctx.e()) == 0;
}

// ---------------------------------------------------------------------------
// Direct summation
// ---------------------------------------------------------------------------

CyclotomicInteger gauss_prime_by_definition(std::uint32_t p)
{
    require_odd_prime(p);
    Histogram h(p, 0);
    for (std::uint32_t x = 1; x < p; ++x) h[x] += legendre(PrimeElement{x}, p);
    return CyclotomicInteger::from_exponent_counts(p, h);
}

CyclotomicInteger gauss_ext_by_definition(const FieldContext& ctx)
{
    Histogram h(ctx.p(), 0);
    for (std::uint32_t i = 1; i < ctx.q(); ++i) {
        const ExtElement x = ctx.element(i);
        h[ctx.trace(x).value] += eta(ctx, x);
    }
    return CyclotomicInteger::from_exponent_counts(ctx.p(), h);
}

CyclotomicInteger quad_sum_by_definition(const FieldContext& ctx, ExtElement a2, ExtElement a1,
                                         ExtElement a0)
{
    Histogram h(ctx.p(), 0);
    for (std::uint32_t i = 0; i < ctx.q(); ++i) {
        const ExtElement x = ctx.element(i);
        const ExtElement v =
            ctx.add(ctx.add(ctx.mul(a2, ctx.mul(x, x)), ctx.mul(a1, x)), a0);
        ++h[ctx.trace(v).value];
    }
    return CyclotomicInteger::from_exponent_counts(ctx.p(), h);
}

CyclotomicInteger weil_s_by_definition(const FieldContext& ctx, unsigned alpha, ExtElement a,
                                       ExtElement b)
{
    Histogram h(ctx.p(), 0);
    for (std::uint32_t i = 0; i < ctx.q(); ++i) {
        const ExtElement x = ctx.element(i);
        const ExtElement v = ctx.add(ctx.mul(a, power_map(ctx, alpha, x)), ctx.mul(b, x));
        ++h[ctx.trace(v).value];
    }
    return CyclotomicInteger::from_exponent_counts(ctx.p(), h);
}

CyclotomicInteger a_sum_by_definition(const FieldContext& ctx, unsigned alpha, PrimeElement a)
{
    const std::uint32_t p = ctx.p();
    Histogram tr(p, 0);
    for (std::uint32_t i = 0; i < ctx.q(); ++i)
        ++tr[ctx.trace(power_map(ctx, alpha, ctx.element(i))).value];
    // sum_{y != 0} zeta^{-a y} sum_t tr[t] zeta^{y t}
    Histogram h(p, 0);
    for (std::uint32_t y = 1; y < p; ++y)
        for (std::uint32_t t = 0; t < p; ++t)
            h[mod_reduce(std::int64_t{y} * (std::int64_t{t} - a.value), p)] += tr[t];
    return CyclotomicInteger::from_exponent_counts(p, h);
}

CyclotomicInteger b_sum_by_definition(const FieldContext& ctx, unsigned alpha, PrimeElement a,
                                      PrimeElement c, ExtElement b)
{
    const std::uint32_t p = ctx.p();
    // Joint distribution of (Tr(x^{p^alpha+1}), Tr(b x)) over F_q.
    std::vector<std::int64_t> joint(std::size_t{p} * p, 0);
    for (std::uint32_t i = 0; i < ctx.q(); ++i) {
        const ExtElement x = ctx.element(i);
        const auto t1 = ctx.trace(power_map(ctx, alpha, x)).value;
        const auto t2 = ctx.trace(ctx.mul(b, x)).value;
        ++joint[std::size_t{t1} * p + t2];
    }
    Histogram h(p, 0);
    for (std::uint32_t y = 1; y < p; ++y)
        for (std::uint32_t z = 1; z < p; ++z)
            for (std::uint32_t t1 = 0; t1 < p; ++t1)
                for (std::uint32_t t2 = 0; t2 < p; ++t2) {
                    const std::int64_t k = std::int64_t{y} * (std::int64_t{t1} - a.value) +
                                           std::int64_t{z} * (std::int64_t{t2} - c.value);
                    h[mod_reduce(k, p)] += joint[std::size_t{t1} * p + t2];
                }
    return CyclotomicInteger::from_exponent_counts(p, h);
}

std::uint64_t solvable_count_by_definition(const FieldContext& ctx, unsigned alpha)
{
    const AdditiveMap f = linearized_map(ctx, alpha);
    std::vector<bool> image(ctx.q(), false);
    for (std::uint32_t i = 0; i < ctx.q(); ++i) image[f(ctx.element(i)).index] = true;
    std::uint64_t n = 0;
    for (std::uint32_t i = 0; i < ctx.q(); ++i) {
        const ExtElement rhs = ctx.neg(ctx.frobenius(ctx.element(i), alpha));
        if (image[rhs.index]) ++n;
    }
    return n;
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

SumReport gauss_ext_closed_form(const FieldContext& ctx)
{
    const std::uint32_t p = ctx.p();
    const unsigned e = ctx.e();
    if (e % 2 != 0) throw std::domain_error("closed-form Gauss sum needs an even degree");
    // (-1)^{e-1} sqrt(-1)^{(p-1)^2 e / 4} sqrt(q); for even e the power of
    // sqrt(-1) is real.
    const std::uint64_t quarter = (std::uint64_t{p - 1} * (p - 1) / 4) % 4;
    const unsigned i_exp = static_cast<unsigned>((quarter * e) % 4);
    const std::int64_t i_pow = i_exp == 0 ? 1 : -1; // i_exp is 0 or 2
    const std::int64_t sign = (e - 1) % 2 == 0 ? 1 : -1;
    const std::int64_t v = sign * i_pow * spow(p, static_cast<int>(e / 2));
    return closed(integer(p, v), "Lemma10/extension-degree-e");
}

SumReport quad_sum_closed_form(const FieldContext& ctx, ExtElement a2, ExtElement a1,
                               ExtElement a0)
{
    if (a2 == ctx.zero()) throw std::invalid_argument("quadratic sum needs a2 != 0");
    const std::uint32_t p = ctx.p();
    const ExtElement four_a2 = ctx.scale(PrimeElement{4 % p}, a2);
    const ExtElement shift = ctx.sub(a0, ctx.mul(ctx.mul(a1, a1), ctx.inv(four_a2)));
    const CyclotomicInteger g =
        ctx.e() % 2 == 0 ? gauss_ext_closed_form(ctx).value : gauss_ext_by_definition(ctx);
    const CyclotomicInteger v =
        BigInt(eta(ctx, a2)) * (zeta(p, ctx.trace(shift).value) * g);
    return closed(v, eta(ctx, a2) == 1 ? "Lemma12/square" : "Lemma12/non-square");
}

SumReport weil_s_closed_form(const FieldContext& ctx, unsigned alpha, ExtElement a, ExtElement b)
{
    if (a == ctx.zero()) throw std::invalid_argument("S(a, b) needs a != 0");
    const SumParameters sp = sum_parameters(ctx, alpha);
    const std::uint32_t p = ctx.p();
    const std::int64_t pm_m = spow(p, static_cast<int>(sp.m));
    const std::int64_t pm_md = spow(p, static_cast<int>(sp.m + sp.d));
    const std::int64_t parity = sp.md_even ? 1 : -1; // (-1)^{m/d}

    if (b == ctx.zero()) {
        const std::uint64_t k = (std::uint64_t{ctx.q()} - 1) / (ipow(p, sp.d) + 1);
        const ExtElement ak = ctx.pow(a, k);
        if (sp.md_even) {
            if (ak == ctx.one()) return closed(integer(p, -pm_md), "Lemma13/m-d-even/eq-1");
            return closed(integer(p, pm_m), "Lemma13/m-d-even/ne-1");
        }
        if (ak == ctx.neg(ctx.one()))
            return closed(integer(p, pm_md), "Lemma13/m-d-odd/eq-minus-1");
        return closed(integer(p, -pm_m), "Lemma13/m-d-odd/ne-minus-1");
    }

    const SolutionSet sol = twisted_linearized_solve(ctx, alpha, a, b);
    if (!sol.solvable()) return closed(integer(p, 0), "Lemma15/unsolvable");
    const ExtElement x0 = *sol.particular;
    // chi_1(-a x0^{p^alpha+1})
    const std::int64_t t = ctx.trace(ctx.mul(a, power_map(ctx, alpha, x0))).value;
    const CyclotomicInteger phase = zeta(p, -t);
    if (sol.kernel_basis.empty())
        return closed(BigInt(parity * pm_m) * phase, "Lemma14/permutation");
    return closed(BigInt(-parity * pm_md) * phase, "Lemma15/solvable");
}

std::int64_t a_sum_value(std::uint32_t p, const SumParameters& sp, PrimeElement a)
{
    const std::int64_t pw = spow(p, static_cast<int>(sp.md_even ? sp.m + sp.d : sp.m));
    return a.value % p == 0 ? -std::int64_t{p - 1} * pw : pw;
}

SumReport a_sum_closed_form(const FieldContext& ctx, unsigned alpha, PrimeElement a)
{
    const SumParameters sp = sum_parameters(ctx, alpha);
    const std::string parity = sp.md_even ? "m-d-even" : "m-d-odd";
    const std::int64_t v = a_sum_value(ctx.p(), sp, a);
    return closed(integer(ctx.p(), v),
                  a.value == 0 ? "Lemma16/" + parity : "Lemma16/a-nonzero/" + parity);
}

SumReport b_sum_closed_form(const FieldContext& ctx, unsigned alpha, PrimeElement a,
                            PrimeElement c, ExtElement b)
{
    if (b == ctx.zero()) throw std::invalid_argument("B(a, c) needs b != 0");
    const SumParameters sp = sum_parameters(ctx, alpha);
    const std::uint32_t p = ctx.p();
    const std::string lemma = sp.md_even ? "Lemma18" : "Lemma17";
    const std::int64_t P = spow(p, static_cast<int>(sp.md_even ? sp.m + sp.d : sp.m));

    const SolutionSet sol = linearized_solve(ctx, alpha, b);
    if (!sol.solvable()) {
        if (!sp.md_even) throw ConsistencyError("X^{p^{2a}} + X is not a permutation for m/d odd");
        return closed(integer(p, 0), lemma + "/unsolvable");
    }
    const ExtElement gamma = *sol.particular;
    const std::uint32_t T = ctx.trace(power_map(ctx, alpha, gamma)).value;
    const std::int64_t pp = static_cast<std::int64_t>(p);

    auto value = [&](std::int64_t v, const std::string& branch) {
        return closed(integer(p, v), lemma + branch);
    };

    if (a.value == 0 && c.value == 0) {
        if (T == 0) return value(-P * (pp - 1) * (pp - 1), "(1)/trace-zero");
        return value(P * (pp - 1), "(1)/trace-nonzero");
    }
    if (a.value == 0) {
        if (T == 0) return value((pp - 1) * P, "(2)/trace-zero");
        return value(-P, "(2)/trace-nonzero");
    }
    if (c.value == 0) {
        if (T == 0) return value((pp - 1) * P, "(3)/trace-zero");
        const int s = legendre(PrimeElement{mod_reduce(-std::int64_t{a.value} * T, p)}, p);
        return value(-pp * P * s - P, "(3)/legendre");
    }
    if (T == 0) return value(-P, "(4)/trace-zero");
    // T = c^2 / (4a)  <=>  c^2 - 4aT = 0
    const std::uint32_t disc = mod_reduce(
        std::int64_t{c.value} * c.value - 4 * std::int64_t{a.value} * T, p);
    if (disc == 0) return value(-P, "(4)/c2-over-4a");
    return value(-pp * P * legendre(PrimeElement{disc}, p) - P, "(4)/legendre");
}

SumReport b_sum_via_weil(const FieldContext& ctx, unsigned alpha, PrimeElement a,
                         PrimeElement c, ExtElement b)
{
    if (b == ctx.zero()) throw std::invalid_argument("B(a, c) needs b != 0");
    const std::uint32_t p = ctx.p();
    CyclotomicInteger total(p);
    for (std::uint32_t y = 1; y < p; ++y) {
        for (std::uint32_t z = 1; z < p; ++z) {
            const ExtElement bz = ctx.scale(PrimeElement{z}, b);
            const SumReport s = weil_s_closed_form(ctx, alpha, ctx.embed(PrimeElement{y}), bz);
            const std::int64_t k = -std::int64_t{a.value} * y - std::int64_t{c.value} * z;
            total = total + zeta(p, k) * s.value;
        }
    }
    return closed(total, "weil-route");
}

// ---------------------------------------------------------------------------
// Checked evaluators
// ---------------------------------------------------------------------------

SumReport gauss_prime(std::uint32_t p)
{
    SumReport r = by_definition(gauss_prime_by_definition(p), "Lemma10/prime-field");
    const std::int64_t expected = ((p - 1) / 2) % 2 == 0 ? std::int64_t{p} : -std::int64_t{p};
    if (!(r.value * r.value == integer(p, expected)))
        throw ConsistencyError("quadratic Gauss sum over F_" + std::to_string(p) +
                               " does not square to (-1)^{(p-1)/2} p");
    return r;
}

SumReport gauss_ext(const FieldContext& ctx, Check check)
{
    if (ctx.e() % 2 != 0)
        return by_definition(gauss_ext_by_definition(ctx), "Lemma10/e-odd/by-definition");
    SumReport r = checked([&] { return gauss_ext_closed_form(ctx); },
                          [&] { return gauss_ext_by_definition(ctx); }, check, "G(eta, chi_1)");
    require_rational(r, "G(eta, chi_1)");
    return r;
}

SumReport quad_sum(const FieldContext& ctx, ExtElement a2, ExtElement a1, ExtElement a0,
                   Check check)
{
    return checked([&] { return quad_sum_closed_form(ctx, a2, a1, a0); },
                   [&] { return quad_sum_by_definition(ctx, a2, a1, a0); }, check,
                   "quadratic character sum");
}

SumReport weil_s(const FieldContext& ctx, unsigned alpha, ExtElement a, ExtElement b,
                 Check check)
{
    if (a == ctx.zero()) throw std::invalid_argument("S(a, b) needs a != 0");
    if (!closed_forms_apply(ctx, alpha))
        return by_definition(weil_s_by_definition(ctx, alpha, a, b), "by-definition/e-d-odd");
    return checked([&] { return weil_s_closed_form(ctx, alpha, a, b); },
                   [&] { return weil_s_by_definition(ctx, alpha, a, b); }, check, "S(a, b)");
}

SumReport a_sum(const FieldContext& ctx, unsigned alpha, PrimeElement a, Check check)
{
    if (a.value >= ctx.p()) throw std::invalid_argument("a must be a residue mod p");
    SumReport r = checked([&] { return a_sum_closed_form(ctx, alpha, a); },
                          [&] { return a_sum_by_definition(ctx, alpha, a); }, check, "A(a)");
    require_rational(r, "A(a)");
    return r;
}

SumReport b_sum(const FieldContext& ctx, unsigned alpha, PrimeElement a, PrimeElement c,
                ExtElement b, Check check)
{
    if (a.value >= ctx.p() || c.value >= ctx.p())
        throw std::invalid_argument("a and c must be residues mod p");
    SumReport r = checked([&] { return b_sum_closed_form(ctx, alpha, a, c, b); },
                          [&] { return b_sum_by_definition(ctx, alpha, a, c, b); }, check,
                          "B(a, c)");
    if (check == Check::verify) {
        const SumReport w = b_sum_via_weil(ctx, alpha, a, c, b);
        if (!(w.value == r.value))
            throw ConsistencyError("B(a, c): untwisted route [" + r.case_tag +
                                   "] disagrees with the twisted S(y, bz) route");
    }
    require_rational(r, "B(a, c)");
    return r;
}

SolvableCount solvable_count(const FieldContext& ctx, unsigned alpha, Check check)
{
    const SumParameters sp = sum_parameters(ctx, alpha);
    SolvableCount out;
    if (!sp.md_even) {
        out.count = ctx.q();
        out.case_tag = "permutation";
    } else {
        const unsigned r = additive_rank(ctx, linearized_map(ctx, alpha));
        out.count = ipow(ctx.p(), r);
        out.case_tag = "Lemma19/m-d-even";
        const std::uint64_t expected = ipow(ctx.p(), ctx.e() - 2 * sp.d);
        if (out.count != expected)
            throw ConsistencyError("solvable count " + std::to_string(out.count) +
                                   " differs from p^{e-2d} = " + std::to_string(expected));
    }
    if (check == Check::verify) {
        out.oracle = solvable_count_by_definition(ctx, alpha);
        if (*out.oracle != out.count)
            throw ConsistencyError("solvable count: rank gives " + std::to_string(out.count) +
                                   ", enumeration gives " + std::to_string(*out.oracle));
    }
    return out;
}

} // namespace tracecodes
