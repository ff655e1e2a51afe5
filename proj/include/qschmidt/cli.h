// Copyright 2026 The qschmidt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSCHMIDT_CLI_H
#define QSCHMIDT_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace qschmidt {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitInputError = 2,
    kExitInconsistent = 3,
};

/// Entry point of the `qschmidt` tool. `args` excludes the program name.
///
/// Subcommands: analyze, teleport, witness. Reports go to `out` (or the
/// --output file), diagnostics to `err`. SCHMIDT_THRESHOLD in the
/// environment replaces the default threshold; --threshold beats both.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qschmidt

#endif
