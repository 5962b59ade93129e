/**************************************************************************
 * codebuild.cpp
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

#include "tracecodes/codebuild.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "tracecodes/arith.hpp"

namespace tracecodes {

std::string to_string(Variant v) { return v == Variant::plain ? "plain" : "bar"; }

Variant parse_variant(const std::string& s)
{
    if (s == "plain") return Variant::plain;
    if (s == "bar") return Variant::bar;
    throw std::invalid_argument("unknown variant '" + s + "' (expected plain or bar)");
}

unsigned CodeSpec::d() const { return gcd_degree(alpha, e()); }

bool CodeSpec::md_even() const { return (m / d()) % 2 == 0; }

void CodeSpec::validate() const
{
    require_odd_prime(p);
    if (m < 2) throw std::invalid_argument("m must be at least 2");
    if (a.value >= p)
        throw std::invalid_argument("a = " + std::to_string(a.value) + " is not a residue mod " +
                                    std::to_string(p));
    if (m % d() != 0)
        throw std::invalid_argument("e/d must be even (d = gcd(alpha, 2m) = " +
                                    std::to_string(d()) + ")");
}

std::string CodeSpec::label() const
{
    std::ostringstream os;
    os << "p=" << p << " m=" << m << " alpha=" << alpha << " a=" << a.value << ' '
       << to_string(variant);
    return os.str();
}

FieldContext context_for(const CodeSpec& spec)
{
    spec.validate();
    return FieldContext::build(spec.p, spec.e());
}

DefiningSet defining_set(const FieldContext& ctx, unsigned alpha, PrimeElement a)
{
    DefiningSet out;
    out.a = a;
    for (std::uint32_t i = 1; i < ctx.q(); ++i) {
        const ExtElement x = ctx.element(i);
        if (ctx.trace(power_map(ctx, alpha, x)) == a) out.elements.push_back(x);
    }
    return out;
}

SetSize set_size_closed(const CodeSpec& spec)
{
    spec.validate();
    const SumParameters sp{spec.m, spec.d(), spec.md_even()};
    const std::int64_t A = a_sum_value(spec.p, sp, spec.a);
    const std::int64_t n_a = spow(spec.p, static_cast<int>(spec.e()) - 1) + A / spec.p;
    SetSize s;
    s.n_a = static_cast<std::uint64_t>(n_a);
    s.length = s.n_a - (spec.a.value == 0 ? 1 : 0);
    return s;
}

// ---------------------------------------------------------------------------
// Symbol counts
// ---------------------------------------------------------------------------

namespace {

void require_nonzero_b(ExtElement b)
{
    if (b == ExtElement{0}) throw std::invalid_argument("b must be nonzero");
}

} // namespace

std::uint64_t symbol_count_direct(const FieldContext& ctx, unsigned alpha, PrimeElement a,
                                  ExtElement b, PrimeElement c)
{
    require_nonzero_b(b);
    std::uint64_t count = 0;
    for (std::uint32_t i = 0; i < ctx.q(); ++i) {
        const ExtElement x = ctx.element(i);
        if (ctx.trace(power_map(ctx, alpha, x)) == a && ctx.trace(ctx.mul(b, x)) == c) ++count;
    }
    return count;
}

std::uint64_t symbol_count_from_sums(const FieldContext& ctx, unsigned alpha, PrimeElement a,
                                     ExtElement b, PrimeElement c, Check check)
{
    require_nonzero_b(b);
    const BigInt A = *a_sum(ctx, alpha, a, check).rational;
    const BigInt B = *b_sum(ctx, alpha, a, c, b, check).rational;
    const BigInt p2 = BigInt(ctx.p()) * ctx.p();
    const BigInt num = BigInt(ctx.q()) + A + B;
    if (num % p2 != 0 || num < 0)
        throw ConsistencyError("p^e + A + B is not a nonnegative multiple of p^2");
    return (num / p2).convert_to<std::uint64_t>();
}

SymbolCount symbol_count_from_lemmas(const FieldContext& ctx, unsigned alpha, PrimeElement a,
                                     ExtElement b, PrimeElement c)
{
    require_nonzero_b(b);
    const SumParameters sp = sum_parameters(ctx, alpha);
    const std::uint32_t p = ctx.p();
    const std::int64_t P2 = spow(p, static_cast<int>(ctx.e()) - 2);
    const int m = static_cast<int>(sp.m), d = static_cast<int>(sp.d);
    const std::int64_t s = sp.md_even ? spow(p, m + d - 1) : spow(p, m - 1);
    const bool a0 = a.value == 0, c0 = c.value == 0;

    const std::string lemma = !sp.md_even ? (a0 ? (c0 ? "Lemma20" : "Lemma21") : (c0 ? "Lemma23" : "Lemma24"))
                                          : (a0 ? (c0 ? "Lemma25" : "Lemma26") : (c0 ? "Lemma28" : "Lemma29"));
    auto result = [&](std::int64_t v, const char* branch) {
        return SymbolCount{static_cast<std::uint64_t>(v), lemma + "/" + branch};
    };

    const SolutionSet sol = linearized_solve(ctx, alpha, b);
    if (!sol.solvable()) {
        const std::int64_t r = spow(p, m + d - 2);
        return a0 ? result(P2 - (p - 1) * r, "unsolvable") : result(P2 + r, "unsolvable");
    }
    const std::uint32_t T = ctx.trace(power_map(ctx, alpha, *sol.particular)).value;
    if (a0) {
        if (c0) return T == 0 ? result(P2 - (p - 1) * s, "trace-zero") : result(P2, "trace-nonzero");
        return T == 0 ? result(P2, "trace-zero") : result(P2 - s, "trace-nonzero");
    }
    const std::int64_t av = a.value, cv = c.value;
    if (c0) {
        if (T == 0) return result(P2 + s, "trace-zero");
        return result(P2 - s * legendre(PrimeElement{mod_reduce(-av * T, p)}, p), "legendre");
    }
    if (T == 0) return result(P2, "trace-zero");
    const std::uint32_t disc = mod_reduce(cv * cv - 4 * av * T, p);
    if (disc == 0) return result(P2, "c2-over-4a");
    return result(P2 - s * legendre(PrimeElement{disc}, p), "legendre");
}

SymbolCount symbol_count(const FieldContext& ctx, unsigned alpha, PrimeElement a, ExtElement b,
                         PrimeElement c)
{
    const SymbolCount lemmas = symbol_count_from_lemmas(ctx, alpha, a, b, c);
    const std::uint64_t sums = symbol_count_from_sums(ctx, alpha, a, b, c);
    const std::uint64_t direct = symbol_count_direct(ctx, alpha, a, b, c);
    if (lemmas.value != sums || sums != direct)
        throw ConsistencyError("symbol count disagreement (" + lemmas.case_tag +
                               "): lemmas " + std::to_string(lemmas.value) + ", sums " +
                               std::to_string(sums) + ", direct " + std::to_string(direct));
    return lemmas;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

Composition shift_composition(const Composition& c, std::uint32_t u)
{
    const std::size_t p = c.size();
    Composition out(p, 0);
    for (std::size_t s = 0; s < p; ++s) out[(s + u) % p] = c[s];
    return out;
}

std::uint64_t CompleteWeightEnumerator::total() const
{
    std::uint64_t t = 0;
    for (const auto& [comp, count] : terms) t += count;
    return t;
}

bool CompleteWeightEnumerator::compositions_consistent() const
{
    for (const auto& [comp, count] : terms) {
        if (comp.size() != p) return false;
        if (std::accumulate(comp.begin(), comp.end(), std::uint64_t{0}) != n) return false;
    }
    return true;
}

namespace {

using TermMap = std::map<Composition, std::uint64_t>;

/// Tr(X^j d_i) for every basis power j and coordinate i.
std::vector<std::vector<std::uint16_t>> trace_rows(const FieldContext& ctx, const DefiningSet& D)
{
    std::vector<std::vector<std::uint16_t>> rows(ctx.e());
    std::uint32_t basis = 1;
    for (unsigned j = 0; j < ctx.e(); ++j, basis *= ctx.p()) {
        const ExtElement xj = ctx.element(basis);
        rows[j].reserve(D.elements.size());
        for (const ExtElement d : D.elements)
            rows[j].push_back(static_cast<std::uint16_t>(ctx.trace(ctx.mul(xj, d)).value));
    }
    return rows;
}

/// Walks x over [lo, hi) in enumeration order, keeping the codeword
/// (Tr(x d_i))_i current with one row addition per carried digit.
void walk_range(const FieldContext& ctx, const std::vector<std::vector<std::uint16_t>>& rows,
                std::size_t n, std::uint32_t lo, std::uint32_t hi, bool with_shift, TermMap& out)
{
    const std::uint32_t p = ctx.p();
    const unsigned e = ctx.e();
    std::vector<std::uint32_t> digit(e);
    std::vector<std::uint16_t> word(n, 0);
    std::uint32_t v = lo;
    for (unsigned j = 0; j < e; ++j) {
        digit[j] = v % p;
        v /= p;
        for (std::uint32_t r = 0; r < digit[j]; ++r)
            for (std::size_t i = 0; i < n; ++i)
                word[i] = static_cast<std::uint16_t>((word[i] + rows[j][i]) % p);
    }

    Composition comp(p);
    for (std::uint32_t x = lo; x < hi; ++x) {
        const std::uint32_t shifts = with_shift ? p : 1;
        for (std::uint32_t u = 0; u < shifts; ++u) {
            std::fill(comp.begin(), comp.end(), 0);
            for (std::size_t i = 0; i < n; ++i) {
                std::uint32_t sym = word[i] + u;
                if (sym >= p) sym -= p;
                ++comp[sym];
            }
            ++out[comp];
        }
        if (x + 1 == hi) break;
        for (unsigned j = 0; j < e; ++j) {
            const auto& row = rows[j];
            for (std::size_t i = 0; i < n; ++i) {
                std::uint32_t s = word[i] + row[i];
                if (s >= p) s -= p;
                word[i] = static_cast<std::uint16_t>(s);
            }
            if (digit[j] + 1 < p) {
                ++digit[j];
                break;
            }
            digit[j] = 0;
        }
    }
}

TermMap raw_terms(const FieldContext& ctx, const DefiningSet& D, unsigned threads,
                  bool with_shift)
{
    const auto rows = trace_rows(ctx, D);
    const std::size_t n = D.elements.size();
    const std::uint32_t q = ctx.q();
    const unsigned workers = std::clamp<unsigned>(threads, 1, q);
    std::vector<TermMap> partial(workers);
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            const auto lo = static_cast<std::uint32_t>(std::uint64_t{q} * w / workers);
            const auto hi = static_cast<std::uint32_t>(std::uint64_t{q} * (w + 1) / workers);
            if (lo == hi) continue;
            pool.emplace_back([&, lo, hi, w] {
                walk_range(ctx, rows, n, lo, hi, with_shift, partial[w]);
            });
        }
    }
    TermMap merged;
    for (auto& part : partial)
        for (const auto& [comp, count] : part) merged[comp] += count;
    return merged;
}

/// Divides by the multiplicity of the zero word, lowering k accordingly.
CompleteWeightEnumerator normalize(CompleteWeightEnumerator cwe)
{
    Composition zero(cwe.p, 0);
    zero[0] = cwe.n;
    const auto it = cwe.terms.find(zero);
    if (it == cwe.terms.end()) throw ConsistencyError("enumeration lacks the zero word");
    std::uint64_t kernel = it->second;
    for (auto& [comp, count] : cwe.terms) {
        if (count % kernel != 0) throw ConsistencyError("term count not divisible by kernel size");
        count /= kernel;
    }
    while (kernel > 1) {
        if (kernel % cwe.p != 0) throw ConsistencyError("kernel size is not a power of p");
        kernel /= cwe.p;
        --cwe.k;
    }
    return cwe;
}

void require_matching(const FieldContext& ctx, const CodeSpec& spec)
{
    spec.validate();
    if (ctx.p() != spec.p || ctx.e() != spec.e())
        throw std::invalid_argument("field context does not match the code parameters");
}

} // namespace

CompleteWeightEnumerator enumerate_cwe(const FieldContext& ctx, const CodeSpec& spec,
                                       unsigned threads)
{
    require_matching(ctx, spec);
    const DefiningSet D = defining_set(ctx, spec.alpha, spec.a);
    CompleteWeightEnumerator raw;
    raw.p = spec.p;
    raw.n = D.elements.size();
    raw.k = spec.e();
    raw.terms = raw_terms(ctx, D, threads, false);
    if (spec.variant == Variant::bar) return normalize(lift_bar(raw));
    return normalize(std::move(raw));
}

CompleteWeightEnumerator enumerate_bar_direct(const FieldContext& ctx, const CodeSpec& spec,
                                              unsigned threads)
{
    require_matching(ctx, spec);
    const DefiningSet D = defining_set(ctx, spec.alpha, spec.a);
    CompleteWeightEnumerator raw;
    raw.p = spec.p;
    raw.n = D.elements.size();
    raw.k = spec.e() + 1;
    raw.terms = raw_terms(ctx, D, threads, true);
    return normalize(std::move(raw));
}

CompleteWeightEnumerator lift_bar(const CompleteWeightEnumerator& cwe)
{
    CompleteWeightEnumerator out;
    out.p = cwe.p;
    out.n = cwe.n;
    out.k = cwe.k + 1;
    for (const auto& [comp, count] : cwe.terms)
        for (std::uint32_t u = 0; u < cwe.p; ++u) out.terms[shift_composition(comp, u)] += count;
    return out;
}

// ---------------------------------------------------------------------------
// Weight distributions
// ---------------------------------------------------------------------------

std::uint64_t WeightDistribution::total() const
{
    std::uint64_t t = 0;
    for (const auto& [w, count] : entries) t += count;
    return t;
}

std::optional<std::uint64_t> WeightDistribution::min_distance() const
{
    for (const auto& [w, count] : entries)
        if (w > 0 && count > 0) return w;
    return std::nullopt;
}

WeightDistribution weight_distribution(const CompleteWeightEnumerator& cwe)
{
    WeightDistribution wd;
    wd.p = cwe.p;
    wd.n = cwe.n;
    wd.k = cwe.k;
    for (const auto& [comp, count] : cwe.terms) wd.entries[cwe.n - comp.at(0)] += count;
    return wd;
}

bool power_moments_check(const WeightDistribution& wd)
{
    BigInt count = 0, moment = 0;
    for (const auto& [w, a] : wd.entries) {
        if (w == 0) continue;
        count += a;
        moment += BigInt(w) * a;
    }
    const BigInt pk = BigInt(ipow(wd.p, wd.k));
    if (count != pk - 1) return false;
    if (wd.k == 0) return moment == 0;
    return moment * wd.p == pk * (wd.p - 1) * wd.n;
}

RatioTest wmin_wmax(const WeightDistribution& wd)
{
    RatioTest r;
    bool any = false;
    for (const auto& [w, count] : wd.entries) {
        if (w == 0 || count == 0) continue;
        if (!any) r.w_min = w;
        r.w_max = w;
        any = true;
    }
    if (!any) throw std::invalid_argument("weight distribution has no nonzero weight");
    r.passes = BigInt(r.w_min) * wd.p > BigInt(r.w_max) * (wd.p - 1);
    return r;
}

} // namespace tracecodes
