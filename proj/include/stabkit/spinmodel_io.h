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

#ifndef STABKIT_SPINMODEL_IO_H
#define STABKIT_SPINMODEL_IO_H

#include <optional>
#include <string>

#include "stabkit/spinmodel.h"

namespace stabkit {

/// Parses the JSON model format
///
///   {"sites": n, "beta": b, "terms": [{"spins": [i, ...], "J": c}, ...]}
///
/// where b and c are numbers or {"re": .., "im": ..}. Throws
/// std::invalid_argument on malformed input.
SpinModel parse_spin_model(const std::string& text);
SpinModel read_spin_model_file(const std::string& path);

/// Inverse of parse_spin_model. Real values are written as plain numbers;
/// a prefactor, when given, is added as "prefactor".
std::string format_spin_model(const SpinModel& m, const std::optional<Complex>& prefactor = std::nullopt);

}  // namespace stabkit

#endif  // STABKIT_SPINMODEL_IO_H
