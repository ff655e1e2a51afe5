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

#include "qschmidt/state.h"

#include <cmath>
#include <sstream>

#include "qschmidt/error.h"

namespace qschmidt {

namespace {

void require_length(size_t qubits, size_t length) {
    if (qubits >= 8 * sizeof(size_t) || length != (size_t{1} << qubits)) {
        std::ostringstream msg;
        msg << "a " << qubits << "-qubit state needs 2^" << qubits << " amplitudes, got " << length;
        throw DimensionError(msg.str());
    }
}

}  // namespace

StateVector::StateVector(size_t qubits, std::vector<Complex> amplitudes)
    : qubits_(qubits), amplitudes_(std::move(amplitudes)) {
    require_length(qubits_, amplitudes_.size());
    for (const auto &z : amplitudes_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw InputError("state amplitudes must be finite");
        }
    }
    double n = norm(amplitudes_);
    if (std::abs(n * n - 1) > kNormTolerance) {
        std::ostringstream msg;
        msg << "state is not normalized (squared norm " << n * n << ")";
        throw InputError(msg.str());
    }
}

StateVector StateVector::normalized(size_t qubits, std::vector<Complex> amplitudes) {
    require_length(qubits, amplitudes.size());
    double n = norm(amplitudes);
    if (!(n > 0) || !std::isfinite(n)) {
        throw InputError("cannot normalize a zero (or non-finite) vector");
    }
    for (auto &z : amplitudes) {
        z /= n;
    }
    return StateVector(qubits, std::move(amplitudes));
}

StateVector StateVector::basis(size_t qubits, size_t index) {
    std::vector<Complex> amps(size_t{1} << qubits);
    if (index >= amps.size()) {
        throw DimensionError("basis index out of range");
    }
    amps[index] = 1;
    return StateVector(qubits, std::move(amps));
}

StateVector StateVector::from_column(const ComplexMatrix &column) {
    if (!column.is_column()) {
        throw DimensionError("state must be a column vector");
    }
    size_t qubits = 0;
    while ((size_t{1} << qubits) < column.rows()) {
        qubits++;
    }
    auto values = column.entries();
    return normalized(qubits, std::vector<Complex>(values.begin(), values.end()));
}

ComplexMatrix StateVector::column() const {
    return ComplexMatrix::column(amplitudes_);
}

ComplexMatrix StateVector::density() const {
    auto c = column();
    return outer(c, c);
}

double fidelity(const StateVector &a, const StateVector &b) {
    return std::norm(inner(a.amplitudes(), b.amplitudes()));
}

Partition::Partition(size_t k, size_t qubits) : k_(k), qubits_(qubits) {
    if (qubits < 2 || k < 1 || k > qubits - 1) {
        std::ostringstream msg;
        msg << "partition k=" << k << " is invalid for " << qubits << " qubits (need 1 <= k <= " << (qubits < 1 ? 0 : qubits - 1)
            << ")";
        throw DimensionError(msg.str());
    }
}

}  // namespace qschmidt
