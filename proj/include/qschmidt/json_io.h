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

#ifndef QSCHMIDT_JSON_IO_H
#define QSCHMIDT_JSON_IO_H

#include <filesystem>
#include <span>

#include "json.hpp"
#include "qschmidt/linalg.h"

namespace qschmidt {

using Json = nlohmann::ordered_json;

/// {"rows": r, "cols": c, "entries": [[re, im], ...]} in row-major order.
Json matrix_to_json(const ComplexMatrix &m);
/// Throws InputError on a malformed document.
ComplexMatrix matrix_from_json(const Json &doc);
ComplexMatrix read_matrix_file(const std::filesystem::path &path);

/// [[re, im], ...].
Json complex_list(std::span<const Complex> values);

}  // namespace qschmidt

#endif
