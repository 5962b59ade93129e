/**************************************************************************
 * json_io.cpp
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

#include "tracecodes/json_io.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace tracecodes {

Json to_json(const BigInt& v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

Json to_json(const CyclotomicInteger& x)
{
    Json coeffs = Json::array();
    for (const auto& c : x.coeffs()) coeffs.push_back(to_json(c));
    return Json{{"p", x.prime()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const Polynomial& f)
{
    Json out = Json::array();
    for (auto c : f) out.push_back(c);
    return out;
}

Json to_json(const SumReport& r)
{
    Json j;
    j["value"] = to_json(r.value);
    j["rational"] = r.rational ? to_json(*r.rational) : Json(nullptr);
    j["method"] = r.method == SumMethod::closed_form ? "closed-form" : "by-definition";
    j["case_tag"] = r.case_tag;
    if (r.oracle) j["oracle"] = to_json(*r.oracle);
    return j;
}

Json to_json(const CodeSpec& spec)
{
    return Json{{"p", spec.p},           {"m", spec.m},         {"e", spec.e()},
                {"alpha", spec.alpha},   {"d", spec.d()},       {"a", spec.a.value},
                {"variant", to_string(spec.variant)}};
}

namespace {

Json terms_json(const CompleteWeightEnumerator& cwe)
{
    Json terms = Json::array();
    for (const auto& [comp, count] : cwe.terms)
        terms.push_back(Json{{"composition", comp}, {"count", count}});
    return terms;
}

} // namespace

Json to_json(const CompleteWeightEnumerator& cwe)
{
    return Json{{"p", cwe.p}, {"n", cwe.n}, {"k", cwe.k}, {"terms", terms_json(cwe)}};
}

Json to_json(const CodeSpec& spec, const CompleteWeightEnumerator& cwe)
{
    return Json{{"p", spec.p},
                {"e", spec.e()},
                {"alpha", spec.alpha},
                {"a", spec.a.value},
                {"variant", to_string(spec.variant)},
                {"n", cwe.n},
                {"k", cwe.k},
                {"terms", terms_json(cwe)}};
}

Json to_json(const WeightDistribution& wd)
{
    Json entries = Json::array();
    for (const auto& [w, count] : wd.entries)
        entries.push_back(Json{{"weight", w}, {"count", count}});
    return Json{{"entries", std::move(entries)}};
}

Json to_json(const VerifyReport& r)
{
    Json j;
    j["spec"] = to_json(r.spec);
    j["case"] = r.applicability.tag ? Json(r.applicability.tag->name()) : Json(nullptr);
    if (!r.applicability.applicable()) j["not_applicable"] = r.applicability.reason;
    const Json dist = r.wd.min_distance() ? Json(*r.wd.min_distance()) : Json(nullptr);
    j["parameters"] = Json::array({r.cwe.n, r.cwe.k, dist});
    j["wd_match"] = r.wd_match ? Json(*r.wd_match) : Json(nullptr);
    j["cwe_match"] = r.cwe_match ? Json(*r.cwe_match) : Json(nullptr);

    Json checks;
    checks["cwe_total"] = r.checks.cwe_total;
    checks["compositions"] = r.checks.compositions;
    checks["power_moments"] = r.checks.power_moments;
    checks["table_total"] = r.checks.table_total ? Json(*r.checks.table_total) : Json(nullptr);
    checks["bar_direct"] = r.checks.bar_direct ? Json(*r.checks.bar_direct) : Json(nullptr);
    j["checks"] = std::move(checks);

    Json diffs = Json::array();
    for (const auto& dfx : r.wd_diffs)
        diffs.push_back(Json{{"kind", "weight"},
                             {"weight", dfx.weight},
                             {"predicted", dfx.predicted},
                             {"enumerated", dfx.enumerated}});
    for (const auto& dfx : r.cwe_diffs)
        diffs.push_back(Json{{"kind", "composition"},
                             {"composition", dfx.composition},
                             {"predicted", dfx.predicted},
                             {"enumerated", dfx.enumerated}});
    j["diffs"] = std::move(diffs);

    Json errata = Json::array();
    for (const auto& er : r.errata) errata.push_back(Json{{"source", er.source}, {"detail", er.detail}});
    j["errata"] = std::move(errata);

    j["cwe"] = to_json(r.cwe);
    j["weight_distribution"] = to_json(r.wd);
    return j;
}

std::string to_csv(const CompleteWeightEnumerator& cwe)
{
    std::ostringstream os;
    for (std::uint32_t i = 0; i < cwe.p; ++i) os << 't' << '_' << i << ',';
    os << "count\n";
    for (const auto& [comp, count] : cwe.terms) {
        for (auto t : comp) os << t << ',';
        os << count << '\n';
    }
    return os.str();
}

CompleteWeightEnumerator cwe_from_json(const Json& j)
{
    CompleteWeightEnumerator cwe;
    cwe.p = j.at("p").get<std::uint32_t>();
    cwe.n = j.at("n").get<std::uint64_t>();
    cwe.k = j.at("k").get<unsigned>();
    for (const auto& t : j.at("terms"))
        cwe.terms[t.at("composition").get<Composition>()] += t.at("count").get<std::uint64_t>();
    return cwe;
}

Polynomial parse_coefficients(const std::string& text)
{
    std::string body = text;
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw std::invalid_argument("malformed coefficient list: " + text);
        body = body.substr(1, body.size() - 2);
    }
    Polynomial out;
    std::istringstream is(body);
    std::string item;
    while (std::getline(is, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        if (first == std::string::npos)
            throw std::invalid_argument("malformed coefficient list: " + text);
        const std::string tok = item.substr(first, last - first + 1);
        if (tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 9)
            throw std::invalid_argument("malformed coefficient '" + tok + "' in " + text);
        out.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    }
    if (out.empty()) throw std::invalid_argument("empty coefficient list");
    return out;
}

} // namespace tracecodes
