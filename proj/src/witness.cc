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

#include "qschmidt/witness.h"

#include <cmath>
#include <sstream>

#include "qschmidt/error.h"

namespace qschmidt {

namespace {

void require_bipartite(const ComplexMatrix &x, size_t dim_a, size_t dim_b, const char *op) {
    if (!x.is_square() || dim_a == 0 || dim_b == 0 || x.rows() != dim_a * dim_b) {
        std::ostringstream msg;
        msg << op << ": expected a square matrix of side " << dim_a << "*" << dim_b << ", got " << x.rows() << "x" << x.cols();
        throw DimensionError(msg.str());
    }
}

}  // namespace

ComplexMatrix realign(const ComplexMatrix &x, size_t dim_a, size_t dim_b) {
    require_bipartite(x, dim_a, dim_b, "realign");
    ComplexMatrix r(dim_a * dim_a, dim_b * dim_b);
    for (size_t i = 0; i < dim_a; i++) {
        for (size_t ip = 0; ip < dim_a; ip++) {
            for (size_t j = 0; j < dim_b; j++) {
                for (size_t jp = 0; jp < dim_b; jp++) {
                    r(i * dim_a + ip, j * dim_b + jp) = x(i * dim_b + j, ip * dim_b + jp);
                }
            }
        }
    }
    return r;
}

ComplexMatrix unrealign(const ComplexMatrix &r, size_t dim_a, size_t dim_b) {
    if (r.rows() != dim_a * dim_a || r.cols() != dim_b * dim_b) {
        throw DimensionError("unrealign: expected a dim_a^2 x dim_b^2 matrix");
    }
    ComplexMatrix x(dim_a * dim_b, dim_a * dim_b);
    for (size_t i = 0; i < dim_a; i++) {
        for (size_t ip = 0; ip < dim_a; ip++) {
            for (size_t j = 0; j < dim_b; j++) {
                for (size_t jp = 0; jp < dim_b; jp++) {
                    x(i * dim_b + j, ip * dim_b + jp) = r(i * dim_a + ip, j * dim_b + jp);
                }
            }
        }
    }
    return x;
}

OperatorSchmidt operator_schmidt(const ComplexMatrix &x, size_t dim_a, size_t dim_b, double threshold) {
    SvdResult d = svd(realign(x, dim_a, dim_b));
    OperatorSchmidt out;
    out.raw_coefficients = d.singular_values;
    for (size_t k = 0; k < d.singular_values.size() && d.singular_values[k] > threshold; k++) {
        out.coefficients.push_back(d.singular_values[k]);
        // R = sum mu u v^dagger, so x = sum mu reshape(u) (x) reshape(conj(v)).
        auto u = d.u.col(k);
        auto v = d.v.col(k);
        ComplexMatrix ga(dim_a, dim_a, std::move(u));
        for (auto &z : v) {
            z = std::conj(z);
        }
        ComplexMatrix gb(dim_b, dim_b, std::move(v));
        out.ops_a.push_back(std::move(ga));
        out.ops_b.push_back(std::move(gb));
    }
    return out;
}

ComplexMatrix reconstruct(const OperatorSchmidt &d) {
    if (d.coefficients.empty()) {
        throw InputError("empty operator Schmidt decomposition");
    }
    ComplexMatrix out(d.ops_a[0].rows() * d.ops_b[0].rows(), d.ops_a[0].cols() * d.ops_b[0].cols());
    for (size_t k = 0; k < d.coefficients.size(); k++) {
        out += d.coefficients[k] * tensor(d.ops_a[k], d.ops_b[k]);
    }
    return out;
}

Complex hs_inner(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("hs_inner: shape mismatch");
    }
    return inner(a.entries(), b.entries());
}

Witness build_witness(const ComplexMatrix &x, size_t dim_a, size_t dim_b, double threshold) {
    require_bipartite(x, dim_a, dim_b, "build_witness");
    double asym = hermitian_asymmetry(x);
    if (asym > kHermitianTolerance) {
        std::ostringstream msg;
        msg << "witness target must be Hermitian (max |x_ij - conj(x_ji)| = " << asym << ")";
        throw NotHermitianError(msg.str(), asym);
    }
    OperatorSchmidt d = operator_schmidt(x, dim_a, dim_b, threshold);
    double mu1 = d.raw_coefficients.empty() ? 0.0 : d.raw_coefficients[0];
    ComplexMatrix w = mu1 * ComplexMatrix::identity(x.rows()) - x;
    return {std::move(w), mu1, std::move(d)};
}

const char *to_string(WitnessVerdict v) {
    return v == WitnessVerdict::Detected ? "detected" : "not_detected";
}

void validate_density_matrix(const ComplexMatrix &rho) {
    if (!rho.is_square()) {
        throw DimensionError("density matrix must be square");
    }
    double asym = hermitian_asymmetry(rho);
    if (asym > kDensityTolerance) {
        std::ostringstream msg;
        msg << "density matrix is not Hermitian (max asymmetry " << asym << ")";
        throw NotHermitianError(msg.str(), asym);
    }
    Complex tr = trace(rho);
    if (std::abs(tr - Complex(1)) > kDensityTolerance) {
        std::ostringstream msg;
        msg << "density matrix trace is " << tr.real() << " (expected 1)";
        throw InputError(msg.str());
    }
    // Symmetrize away sub-tolerance asymmetry before the eigensolve.
    ComplexMatrix h = 0.5 * (rho + rho.adjoint());
    double lowest = eig_hermitian(h).eigenvalues.back();
    if (lowest < -kDensityTolerance) {
        std::ostringstream msg;
        msg << "density matrix is not positive semidefinite (eigenvalue " << lowest << ")";
        throw InputError(msg.str());
    }
}

WitnessReport evaluate_witness(const Witness &w, const ComplexMatrix &rho) {
    if (rho.rows() != w.matrix.rows() || rho.cols() != w.matrix.cols()) {
        std::ostringstream msg;
        msg << "test state is " << rho.rows() << "x" << rho.cols() << " but the witness is " << w.matrix.rows() << "x"
            << w.matrix.cols();
        throw DimensionError(msg.str());
    }
    validate_density_matrix(rho);
    Complex value = trace(w.matrix * rho);
    double e = value.real();
    return {w.matrix,
            w.mu1,
            w.decomposition.coefficients,
            e,
            std::abs(value.imag()),
            e < -kWitnessTolerance ? WitnessVerdict::Detected : WitnessVerdict::NotDetected};
}

}  // namespace qschmidt
