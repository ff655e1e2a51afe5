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

#include "qschmidt/schmidt.h"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qschmidt {

namespace {

void require_fits(const StateVector &state, const Partition &part) {
    if (part.qubits() != state.qubits()) {
        std::ostringstream msg;
        msg << "partition is for " << part.qubits() << " qubits but the state has " << state.qubits();
        throw DimensionError(msg.str());
    }
}

SchmidtResult assemble(std::vector<double> raw, const ComplexMatrix &basis_a, const ComplexMatrix &basis_b,
                       SchmidtMethod method, double threshold) {
    size_t kept = 0;
    while (kept < raw.size() && raw[kept] > threshold) {
        kept++;
    }
    if (kept == 0) {
        throw InconsistencyError("no Schmidt coefficient above threshold; is the state normalized?");
    }
    ComplexMatrix a(basis_a.rows(), kept);
    ComplexMatrix b(basis_b.rows(), kept);
    for (size_t k = 0; k < kept; k++) {
        a.set_col(k, basis_a.col(k));
        b.set_col(k, basis_b.col(k));
    }
    std::vector<double> coefficients(raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(kept));
    return SchmidtResult{std::move(coefficients),
                         std::move(raw),
                         std::move(a),
                         std::move(b),
                         kept,
                         kept == 1 ? Verdict::Separable : Verdict::Entangled,
                         method,
                         threshold,
                         std::nullopt};
}

}  // namespace

const char *to_string(Verdict v) {
    return v == Verdict::Separable ? "separable" : "entangled";
}

const char *to_string(SchmidtMethod m) {
    return m == SchmidtMethod::Svd ? "svd" : "partial_trace";
}

ComplexMatrix correlation_matrix(const StateVector &state, const Partition &part) {
    require_fits(state, part);
    auto amps = state.amplitudes();
    // Leftmost bits are most significant, so the row-major grid is the
    // amplitude vector itself.
    return ComplexMatrix(part.dim_a(), part.dim_b(), std::vector<Complex>(amps.begin(), amps.end()));
}

SchmidtResult decompose_svd(const StateVector &state, const Partition &part, double threshold) {
    ComplexMatrix c = correlation_matrix(state, part);
    SvdResult d = svd(c);
    return assemble(std::move(d.singular_values), d.u, d.v.conj(), SchmidtMethod::Svd, threshold);
}

SchmidtResult decompose_ptrace(const StateVector &state, const Partition &part, double threshold) {
    ComplexMatrix c = correlation_matrix(state, part);
    ComplexMatrix rho = state.density();
    ComplexMatrix rho_a = partial_trace(rho, part.dim_a(), part.dim_b(), Subsystem::B);
    ComplexMatrix rho_b = partial_trace(rho, part.dim_a(), part.dim_b(), Subsystem::A);
    EigenResult eig_a = eig_hermitian(rho_a);
    EigenResult eig_b = eig_hermitian(rho_b);

    size_t n = part.dim_a();
    size_t m = part.dim_b();
    size_t r = std::min(n, m);
    ComplexMatrix ct = c.transpose();

    std::vector<double> raw(r);
    ComplexMatrix basis_a(n, r);
    ComplexMatrix basis_b(m, r);
    for (size_t k = 0; k < r; k++) {
        auto u = eig_a.eigenvectors.col(k);
        basis_a.set_col(k, u);
        std::vector<Complex> uc(u.size());
        for (size_t i = 0; i < u.size(); i++) {
            uc[i] = std::conj(u[i]);
        }
        // b_k = C^T conj(u_k); the state row-reduces to sigma_k b_k along u_k.
        auto b = (ct * ComplexMatrix::column(uc)).col(0);
        double sigma = norm(b);
        raw[k] = sigma;
        if (sigma > 1e-300) {
            for (auto &z : b) {
                z /= sigma;
            }
        }
        basis_b.set_col(k, b);
    }

    // Eigenvector order may differ from |C^dagger u_k| order by rounding
    // inside a near-degenerate cluster.
    std::vector<size_t> order(r);
    for (size_t k = 0; k < r; k++) {
        order[k] = k;
    }
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return raw[x] > raw[y];
    });
    std::vector<double> sorted_raw(r);
    ComplexMatrix sorted_a(n, r);
    ComplexMatrix sorted_b(m, r);
    for (size_t k = 0; k < r; k++) {
        sorted_raw[k] = raw[order[k]];
        sorted_a.set_col(k, basis_a.col(order[k]));
        sorted_b.set_col(k, basis_b.col(order[k]));
    }

    SchmidtResult out = assemble(std::move(sorted_raw), sorted_a, sorted_b, SchmidtMethod::PartialTrace, threshold);
    double gap = coefficient_deviation(eig_a.eigenvalues, eig_b.eigenvalues);
    out.reduced = ReducedStates{std::move(rho_a), std::move(rho_b), std::move(eig_a.eigenvalues), std::move(eig_b.eigenvalues), gap};
    return out;
}

std::vector<Complex> reconstruct(const SchmidtResult &result) {
    size_t n = result.basis_a.rows();
    size_t m = result.basis_b.rows();
    std::vector<Complex> out(n * m);
    for (size_t k = 0; k < result.coefficients.size(); k++) {
        double s = result.coefficients[k];
        for (size_t i = 0; i < n; i++) {
            Complex ua = s * result.basis_a(i, k);
            for (size_t j = 0; j < m; j++) {
                out[i * m + j] += ua * result.basis_b(j, k);
            }
        }
    }
    return out;
}

double reconstruction_residual(const SchmidtResult &result, const StateVector &state) {
    auto rebuilt = reconstruct(result);
    if (rebuilt.size() != state.dim()) {
        throw DimensionError("reconstruction size differs from the state");
    }
    Complex overlap = inner(rebuilt, state.amplitudes());
    Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex(1);
    double total = 0;
    for (size_t k = 0; k < rebuilt.size(); k++) {
        total += std::norm(state[k] - phase * rebuilt[k]);
    }
    return std::sqrt(total);
}

double coefficient_deviation(const std::vector<double> &a, const std::vector<double> &b) {
    size_t n = std::max(a.size(), b.size());
    double worst = 0;
    for (size_t k = 0; k < n; k++) {
        double x = k < a.size() ? a[k] : 0.0;
        double y = k < b.size() ? b[k] : 0.0;
        worst = std::max(worst, std::abs(x - y));
    }
    return worst;
}

namespace {

// Norm of the part of the state dropped by thresholding; the reconstruction
// cannot do better than this.
double truncation_norm(const SchmidtResult &r) {
    double total = 0;
    for (size_t k = r.coefficients.size(); k < r.raw_coefficients.size(); k++) {
        total += r.raw_coefficients[k] * r.raw_coefficients[k];
    }
    return std::sqrt(total);
}

}  // namespace

Analysis analyze(const StateVector &state, const Partition &part, double threshold) {
    SchmidtResult by_svd = decompose_svd(state, part, threshold);
    SchmidtResult by_ptrace = decompose_ptrace(state, part, threshold);
    double deviation = coefficient_deviation(by_svd.coefficients, by_ptrace.coefficients);
    double res_svd = reconstruction_residual(by_svd, state);
    double res_ptrace = reconstruction_residual(by_ptrace, state);
    double gap = by_ptrace.reduced->spectrum_gap;
    bool same_rank = by_svd.schmidt_number == by_ptrace.schmidt_number;
    bool rebuilt = res_svd <= kMethodAgreementTolerance + truncation_norm(by_svd) &&
                   res_ptrace <= kMethodAgreementTolerance + truncation_norm(by_ptrace);

    Analysis out{std::move(by_svd), std::move(by_ptrace), deviation, res_svd, res_ptrace};
    if (deviation > kMethodAgreementTolerance || !same_rank || !rebuilt || gap > kMethodAgreementTolerance) {
        std::ostringstream msg;
        msg << "Schmidt methods disagree: coefficient deviation " << deviation << ", Schmidt numbers "
            << out.svd.schmidt_number << " vs " << out.ptrace.schmidt_number << ", residuals " << res_svd << " / "
            << res_ptrace << ", reduced spectrum gap " << gap;
        throw SchmidtInconsistencyError(msg.str(), std::move(out));
    }
    return out;
}

}  // namespace qschmidt
