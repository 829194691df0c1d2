// Copyright 2026 The polygran Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polygran {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitDomain = 1,  // a named invariant or codec failure
  kExitInput = 2,   // malformed JSON, missing fields, I/O, bad usage
};

/// Runs the tool on args (program name excluded). "-" or an absent
/// --input/--output means the given streams.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace polygran
