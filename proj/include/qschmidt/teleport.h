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

#ifndef QSCHMIDT_TELEPORT_H
#define QSCHMIDT_TELEPORT_H

#include <array>
#include <cstdint>
#include <random>
#include <string>

#include "qschmidt/linalg.h"
#include "qschmidt/state.h"

namespace qschmidt {

/// Bell measurement outcome. The enumerator value is the 2-bit classical
/// message sent to lab B (PhiPlus = 00, PhiMinus = 01, PsiPlus = 10,
/// PsiMinus = 11).
enum class BellOutcome : uint8_t { PhiPlus = 0, PhiMinus = 1, PsiPlus = 2, PsiMinus = 3 };

enum class Pauli : uint8_t { I, X, Y, Z };

const char *to_string(BellOutcome b);
const char *to_string(Pauli p);
/// "00", "01", "10" or "11".
std::string classical_bits(BellOutcome b);
BellOutcome outcome_from_bits(uint8_t bits);

/// Seeded source for measurement sampling.
///
/// The engine is std::mt19937_64, whose output sequence the C++ standard
/// fixes for every seed. A uniform draw in [0, 1) is (next() >> 11) * 2^-53,
/// so transcripts do not depend on the standard library's distributions.
class MeasurementRng {
   public:
    explicit MeasurementRng(uint64_t seed) : engine_(seed) {
    }
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

   private:
    std::mt19937_64 engine_;
};

inline constexpr const char *kRngName = "mt19937_64";

/// PhiPlus, PhiMinus, PsiPlus, PsiMinus.
std::array<StateVector, 4> bell_basis();

ComplexMatrix pauli(Pauli p);

/// psi (x) PhiPlus; qubit order (psi, lab-A half of the pair, lab-B half).
StateVector compose_joint(const StateVector &psi);

/// One projective branch of the Bell measurement on qubits 0 and 1.
struct BellBranch {
    BellOutcome outcome;
    double probability;
    /// Lab B's qubit after the measurement, renormalized. Only meaningful
    /// when probability > 0.
    StateVector bob;
};

/// All four branches, in BellOutcome order.
std::array<BellBranch, 4> bell_branches(const StateVector &joint);

struct BellMeasurement {
    BellOutcome outcome;
    std::array<double, 4> probabilities;
    StateVector bob;
};

/// Samples one branch with rng; zero-probability branches are never chosen.
BellMeasurement bell_measure(const StateVector &joint, MeasurementRng &rng);

Pauli correction_for(BellOutcome outcome);
/// Matrix of correction_for(outcome).
ComplexMatrix correction_matrix(BellOutcome outcome);

StateVector apply(const ComplexMatrix &op, const StateVector &s);

struct TeleportTranscript {
    StateVector input_state;
    StateVector joint_state;
    BellOutcome outcome;
    std::array<double, 4> outcome_probabilities;
    Pauli correction;
    /// Lab B's qubit before correction.
    StateVector received_state;
    StateVector output_state;
    /// |<input|output>|^2.
    double fidelity;
};

/// Full protocol using a caller-owned rng (for multi-shot runs).
TeleportTranscript teleport(const StateVector &psi, MeasurementRng &rng);

/// Full protocol with a fresh rng seeded by `seed`.
TeleportTranscript run(const StateVector &psi, uint64_t seed);

/// Pearson statistic of `counts` against a uniform distribution.
double chi_square_uniform(const std::array<uint64_t, 4> &counts);

/// Upper 0.1% point of chi-square with 3 degrees of freedom.
inline constexpr double kChiSquare3DofP001 = 16.27;

}  // namespace qschmidt

#endif
