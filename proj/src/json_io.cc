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

#include "qschmidt/json_io.h"

#include <fstream>

#include "qschmidt/error.h"

namespace qschmidt {

Json complex_list(std::span<const Complex> values) {
    Json out = Json::array();
    for (const auto &z : values) {
        out.push_back(Json::array({z.real(), z.imag()}));
    }
    return out;
}

Json matrix_to_json(const ComplexMatrix &m) {
    Json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["entries"] = complex_list(m.entries());
    return out;
}

ComplexMatrix matrix_from_json(const Json &doc) {
    if (!doc.is_object()) {
        throw InputError("matrix JSON must be an object with rows, cols, entries");
    }
    for (const char *key : {"rows", "cols", "entries"}) {
        if (!doc.contains(key)) {
            throw InputError(std::string("matrix JSON is missing \"") + key + "\"");
        }
    }
    if (!doc["rows"].is_number_unsigned() || !doc["cols"].is_number_unsigned()) {
        throw InputError("matrix JSON rows/cols must be non-negative integers");
    }
    auto rows = doc["rows"].get<size_t>();
    auto cols = doc["cols"].get<size_t>();
    const Json &entries = doc["entries"];
    if (!entries.is_array()) {
        throw InputError("matrix JSON entries must be an array");
    }
    std::vector<Complex> values;
    values.reserve(entries.size());
    for (size_t k = 0; k < entries.size(); k++) {
        const Json &e = entries[k];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
            throw InputError("matrix JSON entry " + std::to_string(k) + " must be [re, im]");
        }
        values.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return ComplexMatrix(rows, cols, std::move(values));
}

ComplexMatrix read_matrix_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open matrix file " + path.string());
    }
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw InputError("matrix file " + path.string() + " is not valid JSON: " + e.what());
    }
    return matrix_from_json(doc);
}

}  // namespace qschmidt
