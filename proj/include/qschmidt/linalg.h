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

#ifndef QSCHMIDT_LINALG_H
#define QSCHMIDT_LINALG_H

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qschmidt {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Column vectors are n x 1 matrices.
///
/// Every constructor rejects NaN/Inf entries and empty shapes, so a live
/// ComplexMatrix always holds rows() * cols() finite values.
class ComplexMatrix {
   public:
    /// Zero matrix.
    ComplexMatrix(size_t rows, size_t cols);
    ComplexMatrix(size_t rows, size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(size_t n);
    static ComplexMatrix column(std::span<const Complex> values);
    static ComplexMatrix diagonal(std::span<const double> values);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }
    bool is_column() const {
        return cols_ == 1;
    }

    Complex &operator()(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }
    const Complex &operator()(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }

    std::span<const Complex> entries() const {
        return data_;
    }

    /// Copy of column c as a vector.
    std::vector<Complex> col(size_t c) const;
    void set_col(size_t c, std::span<const Complex> values);

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conj() const;

    double frobenius_norm() const;
    /// Largest |a_ij - b_ij|; shapes must match.
    double max_abs_diff(const ComplexMatrix &other) const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    size_t rows_;
    size_t cols_;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex s, ComplexMatrix m);

enum class Subsystem { A, B };

struct EigenResult {
    /// Descending.
    std::vector<double> eigenvalues;
    /// Orthonormal eigenvectors, one per column, in eigenvalue order.
    ComplexMatrix eigenvectors;
};

struct SvdResult {
    /// rows x r with r = min(rows, cols).
    ComplexMatrix u;
    /// Descending, non-negative, length r.
    std::vector<double> singular_values;
    /// cols x r. The input equals u * diag(singular_values) * v^dagger.
    ComplexMatrix v;
};

/// Tolerances used by the decompositions.
inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kJacobiOffDiagonalTolerance = 1e-14;
inline constexpr int kJacobiMaxSweeps = 100;

/// Kronecker product a (x) b.
ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);

/// a * b^dagger for column vectors a and b.
ComplexMatrix outer(const ComplexMatrix &a, const ComplexMatrix &b);

/// <a|b> = a^dagger b for column vectors of equal length.
Complex inner(std::span<const Complex> a, std::span<const Complex> b);
double norm(std::span<const Complex> v);

Complex trace(const ComplexMatrix &m);

/// Traces out `traced` from an operator on C^dim_a (x) C^dim_b.
///
/// Tracing B gives the dim_a x dim_a matrix sum_p rho[(i*dim_b+p),(j*dim_b+p)];
/// tracing A gives the dim_b x dim_b matrix sum_i rho[(i*dim_b+p),(i*dim_b+q)].
ComplexMatrix partial_trace(const ComplexMatrix &rho, size_t dim_a, size_t dim_b, Subsystem traced);

/// Largest |m_ij - conj(m_ji)|; m must be square.
double hermitian_asymmetry(const ComplexMatrix &m);
bool is_hermitian(const ComplexMatrix &m, double tolerance = kHermitianTolerance);

/// Scales v so its first entry with magnitude > 1e-10 is real and positive.
void fix_phase(std::span<Complex> v);

/// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
///
/// Eigenvalues are sorted descending. Eigenvectors carry the fix_phase
/// convention; within a cluster of (numerically) equal eigenvalues they are
/// ordered lexicographically descending on (re, im) of their entries.
/// Throws NotHermitianError when the input deviates from Hermitian by more
/// than `tolerance`.
EigenResult eig_hermitian(const ComplexMatrix &m, double tolerance = kHermitianTolerance);

/// Thin singular value decomposition.
///
/// Right singular vectors come from eig_hermitian(m^dagger m); each singular
/// value is then measured as |m v_k| and u_k = m v_k / sigma_k. Left vectors
/// for sigma_k <= 1e-12 are completed by Gram-Schmidt. Rank-deficient input
/// keeps its zero singular values.
SvdResult svd(const ComplexMatrix &m);

}  // namespace qschmidt

#endif
