/**************************************************************************
 * cli.cpp
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

#include "tracecodes/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "tracecodes/arith.hpp"
#include "tracecodes/json_io.hpp"

namespace tracecodes::cli {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    std::optional<std::uint32_t> p;
    std::optional<unsigned> m;
    std::optional<unsigned> e;
    unsigned alpha = 1;
    std::uint32_t a = 0;
    std::string variant = "plain";
    std::optional<std::string> modulus;
    std::string format = "json";
    bool strict = false;
    unsigned threads = 1;
    std::optional<std::string> out_path;

    // sums
    std::string kind;
    std::optional<std::string> b;
    std::uint32_t c = 0;
    std::optional<std::string> a_ext;
    std::string check = "verify";

    // verify
    bool grid = false;
};

void add_common(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--p", cfg.p, "Odd prime p");
    sub->add_option("--m", cfg.m, "Half the extension degree (e = 2m)");
    sub->add_option("--e", cfg.e, "Extension degree, must be even");
    sub->add_option("--alpha", cfg.alpha, "Exponent alpha in x^{p^alpha+1}");
    sub->add_option("--a", cfg.a, "Residue a in F_p");
    sub->add_option("--variant", cfg.variant, "plain or bar")
        ->check(CLI::IsMember({"plain", "bar"}));
    sub->add_option("--modulus", cfg.modulus,
                    "Field modulus as coefficients, constant term first, e.g. [2,1,1]");
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_flag("--strict", cfg.strict, "Treat prediction mismatches as failures");
    sub->add_option("--threads", cfg.threads, "Enumeration worker count")
        ->check(CLI::Range(1u, 1024u));
    sub->add_option("--out", cfg.out_path, "Write the document to this path");
}

std::uint32_t require_p(const RunConfig& cfg)
{
    if (!cfg.p) throw UsageError("--p is required");
    return *cfg.p;
}

unsigned resolve_m(const RunConfig& cfg)
{
    if (cfg.e) {
        if (*cfg.e % 2 != 0) throw UsageError("--e must be even");
        if (cfg.m && *cfg.m * 2 != *cfg.e) throw UsageError("--m and --e disagree");
        return *cfg.e / 2;
    }
    if (!cfg.m) throw UsageError("--m (or --e) is required");
    return *cfg.m;
}

CodeSpec spec_from(const RunConfig& cfg)
{
    CodeSpec s{require_p(cfg), resolve_m(cfg), cfg.alpha, PrimeElement{cfg.a},
               parse_variant(cfg.variant)};
    s.validate();
    return s;
}

FieldContext context_from(const RunConfig& cfg, std::uint32_t p, unsigned e)
{
    std::optional<Polynomial> modulus;
    if (cfg.modulus) modulus = parse_coefficients(*cfg.modulus);
    return FieldContext::build(p, e, modulus);
}

ExtElement element_from(const FieldContext& ctx, const std::string& text)
{
    Polynomial c = parse_coefficients(text);
    if (c.size() > ctx.e())
        throw std::invalid_argument("element has more than e = " + std::to_string(ctx.e()) +
                                    " coordinates");
    for (auto v : c)
        if (v >= ctx.p()) throw std::invalid_argument("element coordinate out of range [0, p)");
    c.resize(ctx.e(), 0);
    return ctx.from_coeffs(c);
}

void emit(const RunConfig& cfg, const std::string& doc, std::ostream& out)
{
    if (cfg.out_path) {
        std::ofstream f(*cfg.out_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open " + *cfg.out_path + " for writing");
        f << doc;
        return;
    }
    out << doc;
}

void merge_into(Json& j, const Json& extra)
{
    for (const auto& [k, v] : extra.items()) j[k] = v;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void require_json(const RunConfig& cfg, const char* what)
{
    if (cfg.format != "json") throw UsageError(std::string(what) + " supports --format json only");
}

// --- subcommands --------------------------------------------------------------

int field_info(const RunConfig& cfg, std::ostream& out)
{
    require_json(cfg, "field-info");
    const std::uint32_t p = require_p(cfg);
    const unsigned e = 2 * resolve_m(cfg);
    const FieldContext ctx = context_from(cfg, p, e);
    Json j;
    j["p"] = ctx.p();
    j["e"] = ctx.e();
    j["q"] = ctx.q();
    j["modulus"] = to_json(ctx.modulus());
    j["generator_order"] = ctx.generator_order();
    j["prime_generator"] = ctx.prime_generator().value;
    emit(cfg, dump(j), out);
    return ok;
}

int sums(const RunConfig& cfg, std::ostream& out)
{
    require_json(cfg, "sums");
    const std::uint32_t p = require_p(cfg);
    const Check check = cfg.check == "closed" ? Check::closed_only : Check::verify;

    Json j;
    j["kind"] = cfg.kind;
    j["p"] = p;
    if (cfg.kind == "gauss-prime") {
        const SumReport r = gauss_prime(p);
        merge_into(j, to_json(r));
        emit(cfg, dump(j), out);
        return ok;
    }

    const unsigned e = 2 * resolve_m(cfg);
    const FieldContext ctx = context_from(cfg, p, e);
    j["e"] = e;
    j["alpha"] = cfg.alpha;
    if (cfg.a >= p) throw std::invalid_argument("--a must be a residue mod p");
    const PrimeElement a{cfg.a};

    if (cfg.kind == "solvable") {
        const SolvableCount sc = solvable_count(ctx, cfg.alpha, check);
        j["count"] = sc.count;
        j["case_tag"] = sc.case_tag;
        if (sc.oracle) j["oracle"] = *sc.oracle;
        emit(cfg, dump(j), out);
        return ok;
    }

    SumReport r{CyclotomicInteger(p), std::nullopt, SumMethod::closed_form, "", std::nullopt};
    if (cfg.kind == "gauss") {
        r = gauss_ext(ctx, check);
    } else if (cfg.kind == "S") {
        if (!cfg.a_ext) throw UsageError("--kind S needs --a-ext (coefficient list)");
        const ExtElement ax = element_from(ctx, *cfg.a_ext);
        const ExtElement bx = cfg.b ? element_from(ctx, *cfg.b) : ctx.zero();
        j["a_ext"] = to_json(ctx.coeffs(ax));
        j["b"] = to_json(ctx.coeffs(bx));
        r = weil_s(ctx, cfg.alpha, ax, bx, check);
    } else if (cfg.kind == "A") {
        j["a"] = a.value;
        r = a_sum(ctx, cfg.alpha, a, check);
    } else if (cfg.kind == "B") {
        if (!cfg.b) throw UsageError("--kind B needs --b (coefficient list)");
        if (cfg.c >= p) throw std::invalid_argument("--c must be a residue mod p");
        const ExtElement bx = element_from(ctx, *cfg.b);
        j["a"] = a.value;
        j["c"] = cfg.c;
        j["b"] = to_json(ctx.coeffs(bx));
        r = b_sum(ctx, cfg.alpha, a, PrimeElement{cfg.c}, bx, check);
    } else {
        throw UsageError("unknown --kind " + cfg.kind);
    }
    merge_into(j, to_json(r));
    emit(cfg, dump(j), out);
    return ok;
}

int enumerate(const RunConfig& cfg, std::ostream& out)
{
    const CodeSpec spec = spec_from(cfg);
    const FieldContext ctx = context_from(cfg, spec.p, spec.e());
    const CompleteWeightEnumerator cwe = enumerate_cwe(ctx, spec, cfg.threads);
    emit(cfg, cfg.format == "csv" ? to_csv(cwe) : dump(to_json(spec, cwe)), out);
    return ok;
}

int predict(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const CodeSpec spec = spec_from(cfg);
    const Applicability ap = applicability(spec);
    if (!ap.applicable()) {
        err << "not applicable: " << ap.reason << '\n';
        if (cfg.format == "json")
            emit(cfg, dump(Json{{"spec", to_json(spec)}, {"case", nullptr}, {"not_applicable", ap.reason}}),
                 out);
        return not_applicable;
    }
    const CompleteWeightEnumerator cwe = predict_cwe(spec);
    if (cfg.format == "csv") {
        emit(cfg, to_csv(cwe), out);
        return ok;
    }
    Json j;
    j["spec"] = to_json(spec);
    j["case"] = ap.tag->name();
    j["weight_distribution"] = to_json(predict_wd(spec));
    j["cwe"] = to_json(spec, cwe);
    emit(cfg, dump(j), out);
    return ok;
}

int verify_grid(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    Json rows = Json::array();
    int code = ok;
    for (const CodeSpec& spec : verification_grid()) {
        const VerifyReport r = verify(spec, cfg.threads);
        const int rc = r.exit_code(cfg.strict);
        code = std::max(code, rc);
        Json row;
        row["spec"] = to_json(spec);
        row["case"] = r.applicability.tag->name();
        row["parameters"] = Json::array({r.cwe.n, r.cwe.k, r.wd.min_distance().value_or(0)});
        row["wd_match"] = r.wd_match.value_or(false);
        row["cwe_match"] = r.cwe_match.value_or(false);
        row["checks_ok"] = r.checks.ok();
        row["errata"] = r.errata.size();
        rows.push_back(std::move(row));
        if (rc != ok) err << "mismatch: " << spec.label() << '\n';
    }
    emit(cfg, dump(Json{{"grid", std::move(rows)}}), out);
    return code;
}

int verify_one(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    require_json(cfg, "verify");
    if (cfg.grid) return verify_grid(cfg, out, err);
    const CodeSpec spec = spec_from(cfg);
    const FieldContext ctx = context_from(cfg, spec.p, spec.e());
    const VerifyReport r = verify(ctx, spec, cfg.threads);
    emit(cfg, dump(to_json(r)), out);
    const int rc = r.exit_code(cfg.strict);
    if (rc != ok) err << "mismatch: " << spec.label() << '\n';
    return rc;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Trace codes from defining sets: enumeration and closed-form checks", "tracecodes"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* info = app.add_subcommand("field-info", "Describe F_{p^e}");
    auto* sums_cmd = app.add_subcommand("sums", "Evaluate a character sum");
    auto* enum_cmd = app.add_subcommand("enumerate", "Complete weight enumerator by enumeration");
    auto* pred_cmd = app.add_subcommand("predict", "Closed-form weight distribution and enumerator");
    auto* ver_cmd = app.add_subcommand("verify", "Compare enumeration with the closed forms");
    for (auto* sub : {info, sums_cmd, enum_cmd, pred_cmd, ver_cmd}) add_common(sub, cfg);

    sums_cmd->add_option("--kind", cfg.kind, "gauss, gauss-prime, S, A, B or solvable")
        ->required()
        ->check(CLI::IsMember({"gauss", "gauss-prime", "S", "A", "B", "solvable"}));
    sums_cmd->add_option("--b", cfg.b, "Extension element b as a coefficient list");
    sums_cmd->add_option("--c", cfg.c, "Residue c in F_p");
    sums_cmd->add_option("--a-ext", cfg.a_ext, "Extension element a for S as a coefficient list");
    sums_cmd->add_option("--check", cfg.check, "verify or closed")
        ->check(CLI::IsMember({"verify", "closed"}));
    ver_cmd->add_flag("--grid", cfg.grid, "Run the full verification grid");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? ok : usage;
    }

    try {
        if (info->parsed()) return field_info(cfg, out);
        if (sums_cmd->parsed()) return sums(cfg, out);
        if (enum_cmd->parsed()) return enumerate(cfg, out);
        if (pred_cmd->parsed()) return predict(cfg, out, err);
        return verify_one(cfg, out, err);
    } catch (const ConsistencyError& e) {
        err << "consistency failure: " << e.what() << '\n';
        return mismatch;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return mismatch;
    }
}

int run(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

} // namespace tracecodes::cli
