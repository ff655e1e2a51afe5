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

#include "qschmidt/teleport.h"

#include <cmath>

#include "qschmidt/error.h"

namespace qschmidt {

namespace {

void require_qubits(const StateVector &s, size_t n, const char *what) {
    if (s.qubits() != n) {
        throw DimensionError(std::string(what) + ": expected " + std::to_string(n) + " qubit" + (n == 1 ? "" : "s") + ", got " +
                             std::to_string(s.qubits()));
    }
}

}  // namespace

const char *to_string(BellOutcome b) {
    switch (b) {
        case BellOutcome::PhiPlus:
            return "PhiPlus";
        case BellOutcome::PhiMinus:
            return "PhiMinus";
        case BellOutcome::PsiPlus:
            return "PsiPlus";
        case BellOutcome::PsiMinus:
            return "PsiMinus";
    }
    return "?";
}

const char *to_string(Pauli p) {
    switch (p) {
        case Pauli::I:
            return "I";
        case Pauli::X:
            return "X";
        case Pauli::Y:
            return "Y";
        case Pauli::Z:
            return "Z";
    }
    return "?";
}

std::string classical_bits(BellOutcome b) {
    auto v = static_cast<uint8_t>(b);
    return {static_cast<char>('0' + ((v >> 1) & 1)), static_cast<char>('0' + (v & 1))};
}

BellOutcome outcome_from_bits(uint8_t bits) {
    if (bits > 3) {
        throw InputError("Bell outcome needs a 2-bit value");
    }
    return static_cast<BellOutcome>(bits);
}

std::array<StateVector, 4> bell_basis() {
    const double h = 1 / std::sqrt(2.0);
    return {
        StateVector(2, {h, 0, 0, h}),
        StateVector(2, {h, 0, 0, -h}),
        StateVector(2, {0, h, h, 0}),
        StateVector(2, {0, h, -h, 0}),
    };
}

ComplexMatrix pauli(Pauli p) {
    const Complex i(0, 1);
    switch (p) {
        case Pauli::I:
            return ComplexMatrix(2, 2, {1, 0, 0, 1});
        case Pauli::X:
            return ComplexMatrix(2, 2, {0, 1, 1, 0});
        case Pauli::Y:
            return ComplexMatrix(2, 2, {0, -i, i, 0});
        case Pauli::Z:
            return ComplexMatrix(2, 2, {1, 0, 0, -1});
    }
    throw InputError("unknown Pauli");
}

StateVector compose_joint(const StateVector &psi) {
    require_qubits(psi, 1, "compose_joint");
    auto joint = tensor(psi.column(), bell_basis()[0].column());
    auto values = joint.entries();
    return StateVector::normalized(3, std::vector<Complex>(values.begin(), values.end()));
}

std::array<BellBranch, 4> bell_branches(const StateVector &joint) {
    require_qubits(joint, 3, "bell_branches");
    auto basis = bell_basis();
    std::array<BellBranch, 4> out{
        BellBranch{BellOutcome::PhiPlus, 0, StateVector::basis(1, 0)},
        BellBranch{BellOutcome::PhiMinus, 0, StateVector::basis(1, 0)},
        BellBranch{BellOutcome::PsiPlus, 0, StateVector::basis(1, 0)},
        BellBranch{BellOutcome::PsiMinus, 0, StateVector::basis(1, 0)},
    };
    for (size_t k = 0; k < 4; k++) {
        // (<Bell_k| (x) I) |joint>: contract the first two qubits.
        std::vector<Complex> residual(2);
        for (size_t a = 0; a < 4; a++) {
            Complex bra = std::conj(basis[k][a]);
            residual[0] += bra * joint[2 * a];
            residual[1] += bra * joint[2 * a + 1];
        }
        double n = norm(residual);
        out[k].probability = n * n;
        if (n > 1e-12) {
            out[k].bob = StateVector::normalized(1, residual);
        }
    }
    return out;
}

BellMeasurement bell_measure(const StateVector &joint, MeasurementRng &rng) {
    auto branches = bell_branches(joint);
    std::array<double, 4> probs{};
    double total = 0;
    for (size_t k = 0; k < 4; k++) {
        probs[k] = branches[k].probability;
        total += probs[k];
    }
    double draw = rng.uniform() * total;
    size_t pick = 4;
    double acc = 0;
    for (size_t k = 0; k < 4; k++) {
        if (probs[k] <= 0) {
            continue;
        }
        acc += probs[k];
        pick = k;
        if (draw < acc) {
            break;
        }
    }
    if (pick == 4) {
        throw InputError("bell_measure: every branch has zero probability");
    }
    return {branches[pick].outcome, probs, branches[pick].bob};
}

Pauli correction_for(BellOutcome outcome) {
    switch (outcome) {
        case BellOutcome::PhiPlus:
            return Pauli::I;
        case BellOutcome::PhiMinus:
            return Pauli::Z;
        case BellOutcome::PsiPlus:
            return Pauli::X;
        case BellOutcome::PsiMinus:
            // Exactly ZX = iY; the leftover global phase does not affect
            // fidelity.
            return Pauli::Y;
    }
    return Pauli::I;
}

ComplexMatrix correction_matrix(BellOutcome outcome) {
    return pauli(correction_for(outcome));
}

StateVector apply(const ComplexMatrix &op, const StateVector &s) {
    auto out = op * s.column();
    return StateVector::from_column(out);
}

TeleportTranscript teleport(const StateVector &psi, MeasurementRng &rng) {
    require_qubits(psi, 1, "teleport");
    StateVector joint = compose_joint(psi);
    BellMeasurement m = bell_measure(joint, rng);
    Pauli fix = correction_for(m.outcome);
    StateVector output = apply(pauli(fix), m.bob);
    double f = fidelity(psi, output);
    return {psi, std::move(joint), m.outcome, m.probabilities, fix, m.bob, std::move(output), f};
}

TeleportTranscript run(const StateVector &psi, uint64_t seed) {
    MeasurementRng rng(seed);
    return teleport(psi, rng);
}

double chi_square_uniform(const std::array<uint64_t, 4> &counts) {
    double total = 0;
    for (auto c : counts) {
        total += static_cast<double>(c);
    }
    if (total == 0) {
        return 0;
    }
    double expected = total / 4;
    double stat = 0;
    for (auto c : counts) {
        double d = static_cast<double>(c) - expected;
        stat += d * d / expected;
    }
    return stat;
}

}  // namespace qschmidt
