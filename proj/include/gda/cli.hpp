// Copyright 2026 The gda Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The gda command line, as a library call so tests can drive it in-process.
//
// Subcommands: construct, invariants, decompose, iso, classify-real,
// is-field, ff-grade, frobenius-grade, kummer-grade, verify. Every report is
// a JSON object holding "command" and "input" (the parsed request), written
// to --out when given and to standard output otherwise. Reports carry no
// timing, so equal requests give byte-identical output.

#ifndef GDA_CLI_HPP_
#define GDA_CLI_HPP_

#include <string>
#include <vector>

namespace gda {

// Exit status; errors are reported on stderr as {"error":{"code","message"}}.
enum ExitCode : int {
  kExitOk = 0,            // a verdict was computed, whatever its value
  kExitUsage = 2,         // unknown subcommand, bad flag or value
  kExitMalformedJson = 3, // unparsable or structurally invalid JSON
  kExitPrecondition = 4,  // well-formed input violating a precondition
  kExitIo = 5,            // unreadable input or unwritable output
  kExitInternal = 6,      // an internal consistency check failed
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;  // report text (empty when written to --out)
  std::string err;
};

// `args` excludes the program name.
CommandResult run(const std::vector<std::string>& args);

}  // namespace gda

#endif  // GDA_CLI_HPP_
