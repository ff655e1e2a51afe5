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

#ifndef QSCHMIDT_STATE_H
#define QSCHMIDT_STATE_H

#include <cstddef>
#include <span>
#include <vector>

#include "qschmidt/linalg.h"

namespace qschmidt {

inline constexpr double kNormTolerance = 1e-9;

/// Normalized pure state of `qubits` qubits in the computational basis.
///
/// Basis index of |b_1 b_2 ... b_n> is sum_j b_j * 2^(n-j): the leftmost bit
/// is most significant.
class StateVector {
   public:
    /// Requires amplitudes.size() == 2^qubits and unit norm within 1e-9.
    StateVector(size_t qubits, std::vector<Complex> amplitudes);

    /// Rescales to unit norm. Throws InputError on a zero vector.
    static StateVector normalized(size_t qubits, std::vector<Complex> amplitudes);
    static StateVector basis(size_t qubits, size_t index);
    /// Column vector of length 2^n, n inferred. Normalizes.
    static StateVector from_column(const ComplexMatrix &column);

    size_t qubits() const {
        return qubits_;
    }
    size_t dim() const {
        return amplitudes_.size();
    }
    std::span<const Complex> amplitudes() const {
        return amplitudes_;
    }
    Complex operator[](size_t index) const {
        return amplitudes_[index];
    }

    ComplexMatrix column() const;
    /// |psi><psi|.
    ComplexMatrix density() const;

    bool operator==(const StateVector &other) const = default;

   private:
    size_t qubits_;
    std::vector<Complex> amplitudes_;
};

/// |<a|b>|^2.
double fidelity(const StateVector &a, const StateVector &b);

/// Split of n qubits into A = the first k qubits and B = the remaining n - k.
class Partition {
   public:
    /// Requires 1 <= k <= qubits - 1; throws DimensionError otherwise.
    Partition(size_t k, size_t qubits);

    size_t k() const {
        return k_;
    }
    size_t qubits() const {
        return qubits_;
    }
    size_t dim_a() const {
        return size_t{1} << k_;
    }
    size_t dim_b() const {
        return size_t{1} << (qubits_ - k_);
    }

   private:
    size_t k_;
    size_t qubits_;
};

}  // namespace qschmidt

#endif
