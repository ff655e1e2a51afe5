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

#ifndef QSCHMIDT_WITNESS_H
#define QSCHMIDT_WITNESS_H

#include <vector>

#include "qschmidt/linalg.h"
#include "qschmidt/schmidt.h"

namespace qschmidt {

/// Negative expectations below -kWitnessTolerance count as detection.
inline constexpr double kWitnessTolerance = 1e-10;
inline constexpr double kDensityTolerance = 1e-9;

/// Operator Schmidt decomposition x = sum_i mu_i ops_a[i] (x) ops_b[i] with
/// Hilbert-Schmidt orthonormal factors on each side.
struct OperatorSchmidt {
    /// Descending, above the threshold.
    std::vector<double> coefficients;
    /// All min(dim_a^2, dim_b^2) singular values of the realigned matrix.
    std::vector<double> raw_coefficients;
    std::vector<ComplexMatrix> ops_a;
    std::vector<ComplexMatrix> ops_b;
};

/// Realignment R[(i,i'),(j,j')] = x[(i,j),(i',j')], a dim_a^2 x dim_b^2
/// matrix. Pair (p, p') flattens to p * dim + p'.
ComplexMatrix realign(const ComplexMatrix &x, size_t dim_a, size_t dim_b);

/// Inverse of realign.
ComplexMatrix unrealign(const ComplexMatrix &r, size_t dim_a, size_t dim_b);

OperatorSchmidt operator_schmidt(const ComplexMatrix &x, size_t dim_a, size_t dim_b,
                                 double threshold = kDefaultSchmidtThreshold);

/// sum_i mu_i A_i (x) B_i.
ComplexMatrix reconstruct(const OperatorSchmidt &d);

/// <a, b>_HS = tr(a^dagger b).
Complex hs_inner(const ComplexMatrix &a, const ComplexMatrix &b);

struct Witness {
    /// mu1 * I - x.
    ComplexMatrix matrix;
    double mu1;
    OperatorSchmidt decomposition;
};

/// Builds W = mu1 I - x from the largest operator Schmidt coefficient of x.
/// x must be Hermitian (NotHermitianError otherwise).
Witness build_witness(const ComplexMatrix &x, size_t dim_a, size_t dim_b, double threshold = kDefaultSchmidtThreshold);

enum class WitnessVerdict { Detected, NotDetected };
const char *to_string(WitnessVerdict v);

struct WitnessReport {
    ComplexMatrix witness;
    double mu1;
    std::vector<double> coefficients;
    /// Re tr[W rho].
    double expectation;
    /// |Im tr[W rho]|.
    double imaginary_residue;
    WitnessVerdict verdict;
};

/// Throws InputError naming the violated property when rho is not a
/// density matrix (square, Hermitian, unit trace, positive semidefinite,
/// each within 1e-9).
void validate_density_matrix(const ComplexMatrix &rho);

/// Detected iff Re tr[W rho] < -1e-10. Zero is a separable boundary value
/// and reports NotDetected.
WitnessReport evaluate_witness(const Witness &w, const ComplexMatrix &rho);

}  // namespace qschmidt

#endif
