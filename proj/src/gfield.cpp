/**************************************************************************
 * gfield.cpp
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

#include "tracecodes/gfield.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tracecodes/arith.hpp"

namespace tracecodes {

// ---------------------------------------------------------------------------
// Polynomials over F_p (constant term first), used only to validate and pick
// the modulus. Field arithmetic proper goes through the log tables.
// ---------------------------------------------------------------------------

namespace {

void trim(Polynomial& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Polynomial poly_mod(Polynomial a, const Polynomial& f, std::uint32_t p)
{
    trim(a);
    const std::size_t df = f.size() - 1;
    const std::uint32_t lead_inv = inv_mod(f.back(), p);
    while (a.size() > df) {
        const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i)
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * f[i] % p) % p);
        trim(a);
    }
    return a;
}

Polynomial poly_mulmod(const Polynomial& a, const Polynomial& b, const Polynomial& f,
                       std::uint32_t p)
{
    if (a.empty() || b.empty()) return {};
    Polynomial r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    return poly_mod(std::move(r), f, p);
}

Polynomial poly_powmod(Polynomial base, std::uint64_t k, const Polynomial& f, std::uint32_t p)
{
    Polynomial r{1};
    base = poly_mod(std::move(base), f, p);
    while (k) {
        if (k & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        k >>= 1;
    }
    return r;
}

Polynomial poly_gcd(Polynomial a, Polynomial b, std::uint32_t p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Polynomial r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Polynomial poly_sub(Polynomial a, const Polynomial& b, std::uint32_t p)
{
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

bool is_monic_of_degree(const Polynomial& f, unsigned e)
{
    return f.size() == e + 1 && f.back() == 1;
}

} // namespace

bool is_irreducible(const Polynomial& f, std::uint32_t p)
{
    Polynomial g = f;
    trim(g);
    if (g.size() < 2) return false;
    const std::size_t n = g.size() - 1;
    // Ben-Or: f is irreducible iff gcd(f, X^{p^i} - X) = 1 for i <= n/2.
    const Polynomial x{0, 1};
    Polynomial xp = x;
    for (std::size_t i = 1; i <= n / 2; ++i) {
        xp = poly_powmod(xp, p, g, p);
        if (poly_gcd(g, poly_sub(xp, x, p), p).size() != 1) return false;
    }
    return true;
}

bool is_primitive(const Polynomial& f, std::uint32_t p)
{
    Polynomial g = f;
    trim(g);
    if (g.size() < 2 || g[0] == 0 || !is_irreducible(g, p)) return false;
    const unsigned n = static_cast<unsigned>(g.size() - 1);
    const std::uint64_t order = ipow(p, n) - 1;
    const Polynomial x{0, 1};
    if (poly_powmod(x, order, g, p) != Polynomial{1}) return false;
    for (auto r : prime_factors(order))
        if (poly_powmod(x, order / r, g, p) == Polynomial{1}) return false;
    return true;
}

// ---------------------------------------------------------------------------
// FieldContext
// ---------------------------------------------------------------------------

struct FieldContext::Tables {
    std::uint32_t p = 0;
    unsigned e = 0;
    std::uint32_t q = 0;
    Polynomial modulus;
    std::vector<std::uint32_t> pow_p;   // p^i for i <= e
    std::vector<std::uint32_t> exp_tab; // X^k, k in [0, q-1)
    std::vector<std::uint32_t> log_tab; // log of nonzero elements
    std::vector<std::uint32_t> trace_tab;
    std::uint64_t generator_order = 0;
    PrimeElement prime_generator;
};

namespace {

Polynomial smallest_primitive(std::uint32_t p, unsigned e)
{
    // Candidate tuples (c_0, ..., c_{e-1}) in lexicographic order: c_0 is the
    // most significant digit of the counter.
    const std::uint64_t count = ipow(p, e);
    Polynomial f(e + 1, 0);
    f[e] = 1;
    for (std::uint64_t n = 0; n < count; ++n) {
        std::uint64_t v = n;
        for (unsigned i = 0; i < e; ++i) {
            f[e - 1 - i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        if (f[0] == 0) continue;
        if (is_primitive(f, p)) return f;
    }
    throw std::logic_error("no primitive polynomial found");
}

} // namespace

FieldContext FieldContext::build(std::uint32_t p, unsigned e,
                                 std::optional<Polynomial> modulus_override)
{
    require_odd_prime(p);
    if (e < 2) throw std::invalid_argument("extension degree must be at least 2");
    const std::uint64_t q64 = ipow(p, e);
    if (q64 > max_order)
        throw std::invalid_argument("field of order " + std::to_string(q64) +
                                    " exceeds the supported maximum " +
                                    std::to_string(max_order));

    Polynomial modulus;
    if (modulus_override) {
        modulus = *modulus_override;
        for (auto c : modulus)
            if (c >= p) throw std::invalid_argument("modulus coefficient out of range [0, p)");
        if (modulus.size() != e + 1)
            throw std::invalid_argument("modulus must have degree " + std::to_string(e));
        if (!is_monic_of_degree(modulus, e))
            throw std::invalid_argument("modulus must be monic");
        if (!is_irreducible(modulus, p))
            throw std::invalid_argument("modulus is not irreducible over F_p");
        if (!is_primitive(modulus, p))
            throw std::invalid_argument("modulus is irreducible but not primitive");
    } else {
        modulus = smallest_primitive(p, e);
    }

    auto t = std::make_shared<Tables>();
    t->p = p;
    t->e = e;
    t->q = static_cast<std::uint32_t>(q64);
    t->modulus = modulus;
    t->pow_p.resize(e + 1);
    for (unsigned i = 0; i <= e; ++i) t->pow_p[i] = static_cast<std::uint32_t>(ipow(p, i));

    // Antilog table by repeated multiplication by X (shift and reduce).
    const std::uint32_t q = t->q;
    t->exp_tab.resize(q - 1);
    t->log_tab.assign(q, 0);
    std::vector<std::uint32_t> v(e, 0);
    v[0] = 1;
    std::uint64_t order = 0;
    for (std::uint32_t k = 0; k < q - 1; ++k) {
        std::uint32_t packed = 0;
        for (unsigned i = 0; i < e; ++i) packed += v[i] * t->pow_p[i];
        if (k > 0 && packed == 1) break;
        t->exp_tab[k] = packed;
        t->log_tab[packed] = k;
        ++order;
        const std::uint32_t top = v[e - 1];
        for (unsigned i = e - 1; i > 0; --i)
            v[i] = (v[i - 1] + (p - top) * modulus[i] % p) % p;
        v[0] = (p - top) * modulus[0] % p;
    }
    t->generator_order = order;
    if (order != q - 1)
        throw std::logic_error("modulus generator has order " + std::to_string(order) +
                               ", expected " + std::to_string(q - 1));
    t->prime_generator = PrimeElement{smallest_primitive_root(p)};

    FieldContext ctx(t);
    // Trace by definition: sum of the e Frobenius conjugates.
    std::vector<std::uint32_t> tr(q, 0);
    for (std::uint32_t i = 0; i < q; ++i) {
        ExtElement x{i};
        ExtElement s = ctx.zero();
        for (unsigned j = 0; j < e; ++j) s = ctx.add(s, ctx.frobenius(x, j));
        if (!ctx.in_prime_field(s))
            throw std::logic_error("trace value outside the prime field");
        tr[i] = s.index;
    }
    t->trace_tab = std::move(tr);
    return ctx;
}

std::uint32_t FieldContext::p() const { return t_->p; }
unsigned FieldContext::e() const { return t_->e; }
std::uint32_t FieldContext::q() const { return t_->q; }
const Polynomial& FieldContext::modulus() const { return t_->modulus; }
ExtElement FieldContext::generator() const { return ExtElement{t_->p}; }
std::uint64_t FieldContext::generator_order() const { return t_->generator_order; }
PrimeElement FieldContext::prime_generator() const { return t_->prime_generator; }

std::vector<std::uint32_t> FieldContext::coeffs(ExtElement x) const
{
    std::vector<std::uint32_t> c(t_->e);
    std::uint32_t v = x.index;
    for (unsigned i = 0; i < t_->e; ++i) {
        c[i] = v % t_->p;
        v /= t_->p;
    }
    return c;
}

ExtElement FieldContext::from_coeffs(std::span<const std::uint32_t> c) const
{
    if (c.size() != t_->e) throw std::invalid_argument("coordinate vector must have length e");
    std::uint32_t v = 0;
    for (unsigned i = 0; i < t_->e; ++i) {
        if (c[i] >= t_->p) throw std::invalid_argument("coordinate out of range [0, p)");
        v += c[i] * t_->pow_p[i];
    }
    return ExtElement{v};
}

ExtElement FieldContext::add(ExtElement x, ExtElement y) const
{
    const std::uint32_t p = t_->p;
    std::uint32_t a = x.index, b = y.index, r = 0;
    for (unsigned i = 0; i < t_->e; ++i) {
        r += ((a % p + b % p) % p) * t_->pow_p[i];
        a /= p;
        b /= p;
    }
    return ExtElement{r};
}

ExtElement FieldContext::neg(ExtElement x) const
{
    const std::uint32_t p = t_->p;
    std::uint32_t a = x.index, r = 0;
    for (unsigned i = 0; i < t_->e; ++i) {
        r += ((p - a % p) % p) * t_->pow_p[i];
        a /= p;
    }
    return ExtElement{r};
}

ExtElement FieldContext::sub(ExtElement x, ExtElement y) const { return add(x, neg(y)); }

ExtElement FieldContext::scale(PrimeElement s, ExtElement x) const
{
    const std::uint32_t p = t_->p;
    std::uint32_t a = x.index, r = 0;
    for (unsigned i = 0; i < t_->e; ++i) {
        r += (a % p * s.value % p) * t_->pow_p[i];
        a /= p;
    }
    return ExtElement{r};
}

ExtElement FieldContext::mul(ExtElement x, ExtElement y) const
{
    if (x.index == 0 || y.index == 0) return zero();
    const std::uint64_t k = std::uint64_t{t_->log_tab[x.index]} + t_->log_tab[y.index];
    return ExtElement{t_->exp_tab[k % (t_->q - 1)]};
}

ExtElement FieldContext::inv(ExtElement x) const
{
    if (x.index == 0) throw std::domain_error("zero has no inverse in F_q");
    const std::uint32_t l = t_->log_tab[x.index];
    return ExtElement{t_->exp_tab[(t_->q - 1 - l) % (t_->q - 1)]};
}

ExtElement FieldContext::pow(ExtElement x, std::uint64_t k) const
{
    if (k == 0) return one();
    if (x.index == 0) return zero();
    const std::uint64_t n = t_->q - 1;
    const unsigned __int128 l = static_cast<unsigned __int128>(t_->log_tab[x.index]) * (k % n);
    return ExtElement{t_->exp_tab[static_cast<std::uint64_t>(l % n)]};
}

ExtElement FieldContext::frobenius(ExtElement x, std::uint64_t k) const
{
    if (x.index == 0) return zero();
    const std::uint64_t n = t_->q - 1;
    const std::uint64_t pk = powmod(t_->p, k % t_->e, n);
    return pow(x, pk == 0 ? n : pk);
}

std::uint32_t FieldContext::log(ExtElement x) const
{
    if (x.index == 0) throw std::domain_error("log of zero");
    return t_->log_tab[x.index];
}

ExtElement FieldContext::exp(std::uint64_t k) const
{
    return ExtElement{t_->exp_tab[k % (t_->q - 1)]};
}

PrimeElement FieldContext::trace(ExtElement x) const
{
    return PrimeElement{t_->trace_tab[x.index]};
}

// ---------------------------------------------------------------------------

ExtElement power_map(const FieldContext& ctx, unsigned alpha, ExtElement x)
{
    return ctx.mul(ctx.frobenius(x, alpha), x);
}

int eta(const FieldContext& ctx, ExtElement x)
{
    if (x == ctx.zero()) return 0;
    return ctx.pow(x, (std::uint64_t{ctx.q()} - 1) / 2) == ctx.one() ? 1 : -1;
}

int legendre(PrimeElement t, std::uint32_t p)
{
    const std::uint32_t v = t.value % p;
    if (v == 0) return 0;
    return powmod(v, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::uint64_t SolutionSet::size(std::uint32_t p) const
{
    if (!particular) return 0;
    return ipow(p, static_cast<unsigned>(kernel_basis.size()));
}

std::vector<ExtElement> enumerate_solutions(const FieldContext& ctx, const SolutionSet& s)
{
    std::vector<ExtElement> out;
    if (!s.particular) return out;
    const std::uint32_t p = ctx.p();
    const std::size_t k = s.kernel_basis.size();
    const std::uint64_t total = ipow(p, static_cast<unsigned>(k));
    out.reserve(total);
    for (std::uint64_t n = 0; n < total; ++n) {
        ExtElement x = *s.particular;
        std::uint64_t v = n;
        for (std::size_t i = 0; i < k; ++i) {
            x = ctx.add(x, ctx.scale(PrimeElement{static_cast<std::uint32_t>(v % p)},
                                     s.kernel_basis[i]));
            v /= p;
        }
        out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::uint32_t>> additive_matrix(const FieldContext& ctx,
                                                        const AdditiveMap& map)
{
    const unsigned e = ctx.e();
    std::vector<std::vector<std::uint32_t>> m(e, std::vector<std::uint32_t>(e, 0));
    for (unsigned j = 0; j < e; ++j) {
        std::vector<std::uint32_t> basis(e, 0);
        basis[j] = 1;
        const auto image = ctx.coeffs(map(ctx.from_coeffs(basis)));
        for (unsigned i = 0; i < e; ++i) m[i][j] = image[i];
    }
    return m;
}

namespace {

struct Reduced {
    std::vector<std::vector<std::uint32_t>> rows; // augmented, reduced row echelon
    std::vector<int> pivot_col;                   // pivot column per nonzero row
    bool consistent = true;
};

// Reduced row echelon form of [m | rhs] over F_p.
Reduced row_reduce(std::vector<std::vector<std::uint32_t>> m, std::vector<std::uint32_t> rhs,
                   std::uint32_t p)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    for (std::size_t i = 0; i < rows; ++i) m[i].push_back(rhs[i]);

    Reduced out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        const std::uint64_t inv = inv_mod(m[r][c], p);
        for (auto& v : m[r]) v = static_cast<std::uint32_t>(v * inv % p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const std::uint64_t f = m[i][c];
            for (std::size_t k = 0; k <= cols; ++k)
                m[i][k] = static_cast<std::uint32_t>((m[i][k] + (p - f) * m[r][k]) % p);
        }
        out.pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (m[i][cols] != 0) out.consistent = false;
    out.rows = std::move(m);
    return out;
}

} // namespace

SolutionSet solve_additive(const FieldContext& ctx, const AdditiveMap& map, ExtElement rhs)
{
    const std::uint32_t p = ctx.p();
    const unsigned e = ctx.e();
    const Reduced red = row_reduce(additive_matrix(ctx, map), ctx.coeffs(rhs), p);

    SolutionSet sol;
    std::vector<bool> is_pivot(e, false);
    for (int c : red.pivot_col) is_pivot[c] = true;

    // Kernel: one basis vector per free column.
    for (unsigned f = 0; f < e; ++f) {
        if (is_pivot[f]) continue;
        std::vector<std::uint32_t> v(e, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < red.pivot_col.size(); ++r)
            v[red.pivot_col[r]] = (p - red.rows[r][f]) % p;
        sol.kernel_basis.push_back(ctx.from_coeffs(v));
    }
    if (red.consistent) {
        std::vector<std::uint32_t> x(e, 0);
        for (std::size_t r = 0; r < red.pivot_col.size(); ++r)
            x[red.pivot_col[r]] = red.rows[r][e];
        sol.particular = ctx.from_coeffs(x);
    }
    return sol;
}

unsigned additive_rank(const FieldContext& ctx, const AdditiveMap& map)
{
    const Reduced red =
        row_reduce(additive_matrix(ctx, map), std::vector<std::uint32_t>(ctx.e(), 0), ctx.p());
    return static_cast<unsigned>(red.pivot_col.size());
}

AdditiveMap linearized_map(const FieldContext& ctx, unsigned alpha)
{
    return [ctx, alpha](ExtElement x) {
        return ctx.add(ctx.frobenius(x, 2 * std::uint64_t{alpha}), x);
    };
}

AdditiveMap twisted_linearized_map(const FieldContext& ctx, unsigned alpha, ExtElement a)
{
    const ExtElement a_frob = ctx.frobenius(a, alpha);
    return [ctx, alpha, a, a_frob](ExtElement x) {
        return ctx.add(ctx.mul(a_frob, ctx.frobenius(x, 2 * std::uint64_t{alpha})),
                       ctx.mul(a, x));
    };
}

SolutionSet linearized_solve(const FieldContext& ctx, unsigned alpha, ExtElement b)
{
    return solve_additive(ctx, linearized_map(ctx, alpha), ctx.neg(ctx.frobenius(b, alpha)));
}

SolutionSet twisted_linearized_solve(const FieldContext& ctx, unsigned alpha, ExtElement a,
                                     ExtElement b)
{
    if (a == ctx.zero()) throw std::invalid_argument("twisted map needs a nonzero coefficient");
    return solve_additive(ctx, twisted_linearized_map(ctx, alpha, a),
                          ctx.neg(ctx.frobenius(b, alpha)));
}

unsigned gcd_degree(unsigned alpha, unsigned e) { return std::gcd(alpha, e); }

std::uint64_t gcd_exponent(const FieldContext& ctx, unsigned alpha)
{
    const unsigned e = ctx.e();
    const unsigned d = gcd_degree(alpha, e);
    const std::uint64_t pd1 = ipow(ctx.p(), d) + 1;
    const std::uint64_t g = std::gcd(pd1, std::uint64_t{ctx.q()} - 1);
    const std::uint64_t expected = (e / d) % 2 == 1 ? 2 : pd1;
    if (g != expected)
        throw std::logic_error("gcd(p^d+1, p^e-1) = " + std::to_string(g) +
                               " contradicts the e/d parity dichotomy (expected " +
                               std::to_string(expected) + ")");
    return g;
}

} // namespace tracecodes
