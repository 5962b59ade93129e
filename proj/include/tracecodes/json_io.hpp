/**************************************************************************
 * json_io.hpp
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

#include <string>

#include <json.hpp>

#include "tracecodes/charsum.hpp"
#include "tracecodes/codebuild.hpp"
#include "tracecodes/oracle.hpp"

namespace tracecodes {

// Serialization for CLI output. Key order is fixed so that documents are
// byte-stable; maps are emitted in ascending key order.

using Json = nlohmann::ordered_json;

/// Integer when it fits in 64 bits, decimal string otherwise.
Json to_json(const BigInt& v);
Json to_json(const CyclotomicInteger& x);
Json to_json(const Polynomial& f);
Json to_json(const SumReport& r);
Json to_json(const CodeSpec& spec);
Json to_json(const CompleteWeightEnumerator& cwe);
/// CWE document carrying the code parameters alongside the terms.
Json to_json(const CodeSpec& spec, const CompleteWeightEnumerator& cwe);
Json to_json(const WeightDistribution& wd);
Json to_json(const VerifyReport& r);

/// Header t_0,...,t_{p-1},count then one row per term.
std::string to_csv(const CompleteWeightEnumerator& cwe);

CompleteWeightEnumerator cwe_from_json(const Json& j);

/// Parses "[1,0,2]" or "1,0,2" into a coefficient list; throws std::invalid_argument.
Polynomial parse_coefficients(const std::string& text);

} // namespace tracecodes
