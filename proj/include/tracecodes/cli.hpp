/**************************************************************************
 * cli.hpp
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

#include <iosfwd>
#include <string>
#include <vector>

namespace tracecodes::cli {

/// Process exit codes.
enum Exit : int {
    ok = 0,
    mismatch = 1,
    usage = 2,
    not_applicable = 3,
};

/**
 * Runs one subcommand (field-info, sums, enumerate, predict, verify).
 * args excludes the program name. The document goes to --out or to out;
 * diagnostics go to err.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

} // namespace tracecodes::cli
