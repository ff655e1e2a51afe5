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

#ifndef QSCHMIDT_SCHMIDT_H
#define QSCHMIDT_SCHMIDT_H

#include <optional>
#include <vector>

#include "qschmidt/error.h"
#include "qschmidt/linalg.h"
#include "qschmidt/state.h"

namespace qschmidt {

/// A Schmidt coefficient counts as nonzero above this value.
inline constexpr double kDefaultSchmidtThreshold = 1e-10;
/// analyze() fails when the two methods' coefficients differ by more.
inline constexpr double kMethodAgreementTolerance = 1e-8;

enum class Verdict { Separable, Entangled };
enum class SchmidtMethod { Svd, PartialTrace };

const char *to_string(Verdict v);
const char *to_string(SchmidtMethod m);

/// Reduced density matrices and their spectra, kept by the partial-trace route.
struct ReducedStates {
    ComplexMatrix rho_a;
    ComplexMatrix rho_b;
    std::vector<double> eigenvalues_a;
    std::vector<double> eigenvalues_b;
    /// Largest difference between the two spectra after zero padding.
    double spectrum_gap;
};

/// state = sum_k coefficients[k] * basis_a.col(k) (x) basis_b.col(k).
struct SchmidtResult {
    /// Descending, all above `threshold`.
    std::vector<double> coefficients;
    /// Every candidate coefficient before thresholding (min(N, M) values).
    std::vector<double> raw_coefficients;
    /// N x S.
    ComplexMatrix basis_a;
    /// M x S. These are the B-side Schmidt vectors themselves, i.e. the
    /// complex conjugates of the right singular vectors of the correlation
    /// matrix.
    ComplexMatrix basis_b;
    size_t schmidt_number;
    Verdict verdict;
    SchmidtMethod method;
    double threshold;
    std::optional<ReducedStates> reduced;
};

/// N x M grid with C[i][j] = amplitude of |i>_A |j>_B.
ComplexMatrix correlation_matrix(const StateVector &state, const Partition &part);

SchmidtResult decompose_svd(const StateVector &state, const Partition &part, double threshold = kDefaultSchmidtThreshold);

/// Schmidt decomposition from the reduced density matrices.
///
/// A-side vectors are eigenvectors of rho_A. B-side vectors are derived from
/// the state (b_k = C^T conj(u_k) / sigma_k), so their phases always match
/// the A side; rho_B's spectrum is only used as a consistency check. Each
/// coefficient is |C^dagger u_k|, which equals sqrt(lambda_k) but stays
/// accurate for vanishing lambda_k.
SchmidtResult decompose_ptrace(const StateVector &state, const Partition &part, double threshold = kDefaultSchmidtThreshold);

/// sum_k sigma_k u_k (x) v_k as a vector of length N*M.
std::vector<Complex> reconstruct(const SchmidtResult &result);

/// min over phi of |state - e^{i phi} reconstruct(result)|.
double reconstruction_residual(const SchmidtResult &result, const StateVector &state);

/// Largest |a_k - b_k| after zero-padding the shorter list.
double coefficient_deviation(const std::vector<double> &a, const std::vector<double> &b);

struct Analysis {
    SchmidtResult svd;
    SchmidtResult ptrace;
    double max_deviation;
    double residual_svd;
    double residual_ptrace;
};

class SchmidtInconsistencyError : public InconsistencyError {
   public:
    SchmidtInconsistencyError(const std::string &what, Analysis analysis)
        : InconsistencyError(what), analysis_(std::move(analysis)) {
    }
    const Analysis &analysis() const {
        return analysis_;
    }

   private:
    Analysis analysis_;
};

/// Runs both methods and checks that they agree.
///
/// Throws SchmidtInconsistencyError when coefficients deviate by more than
/// 1e-8, the Schmidt numbers differ, either reconstruction misses by more
/// than 1e-8, or the two reduced spectra disagree by more than 1e-8.
Analysis analyze(const StateVector &state, const Partition &part, double threshold = kDefaultSchmidtThreshold);

}  // namespace qschmidt

#endif
