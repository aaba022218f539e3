// Copyright 2026 The Stabkit Authors
//
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

#ifndef STABKIT_CLI_H
#define STABKIT_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace stabkit {

/// Entry point of the `stabkit` command-line tool. Subcommands:
///
///   circuit FILE [--seed S] [--qubits N]
///   graph-measure FILE --vertex V --basis B --outcome O [--neighbor H]
///   surface-threshold [--lmin --lmax --lstep --pmin --pmax --steps --trials --seed --decoder --out]
///   spin z|overlap|dual FILE [--out F] [--allow-long]
///   rbim-check [--L --p --samples --seed]
///
/// Returns the process exit status: 0 on success, 1 on invalid input, 2
/// when a numerical check reports FAIL.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stabkit

#endif  // STABKIT_CLI_H
