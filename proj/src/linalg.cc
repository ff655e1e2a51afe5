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

#include "qschmidt/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qschmidt/error.h"

namespace qschmidt {

namespace {

constexpr double kPhaseMagnitude = 1e-10;
constexpr double kClusterTolerance = 1e-12;
constexpr double kLexTolerance = 1e-10;
constexpr double kZeroSingularValue = 1e-12;

std::string shape(const ComplexMatrix &m) {
    std::ostringstream out;
    out << m.rows() << "x" << m.cols();
    return out.str();
}

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(op) + ": shape mismatch " + shape(a) + " vs " + shape(b));
    }
}

void require_square(const ComplexMatrix &m, const char *op) {
    if (!m.is_square()) {
        throw DimensionError(std::string(op) + ": expected a square matrix, got " + shape(m));
    }
}

// Descending on (re, im) of each entry in order, ignoring differences below
// kLexTolerance.
bool lex_greater(std::span<const Complex> a, std::span<const Complex> b) {
    for (size_t i = 0; i < a.size(); i++) {
        double dr = a[i].real() - b[i].real();
        if (std::abs(dr) > kLexTolerance) {
            return dr > 0;
        }
        double di = a[i].imag() - b[i].imag();
        if (std::abs(di) > kLexTolerance) {
            return di > 0;
        }
    }
    return false;
}

// Orders (value, vector) pairs by descending value, breaking ties between
// numerically equal values by lex_greater on the vectors. Returns the
// permutation; `values` is rewritten so it stays exactly non-increasing.
std::vector<size_t> deterministic_order(std::vector<double> &values, const ComplexMatrix &vectors) {
    std::vector<size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return values[a] > values[b];
    });

    std::vector<std::vector<Complex>> cols(values.size());
    for (size_t k = 0; k < values.size(); k++) {
        cols[k] = vectors.col(k);
    }

    size_t start = 0;
    while (start < order.size()) {
        size_t end = start + 1;
        while (end < order.size()) {
            double prev = values[order[end - 1]];
            double cur = values[order[end]];
            if (prev - cur > kClusterTolerance * std::max(1.0, std::abs(prev))) {
                break;
            }
            end++;
        }
        // Insertion sort: tolerant comparisons are not a strict weak order.
        for (size_t i = start + 1; i < end; i++) {
            for (size_t j = i; j > start && lex_greater(cols[order[j]], cols[order[j - 1]]); j--) {
                std::swap(order[j], order[j - 1]);
            }
        }
        start = end;
    }

    std::vector<double> sorted(values.size());
    for (size_t k = 0; k < order.size(); k++) {
        sorted[k] = values[order[k]];
    }
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    values = std::move(sorted);
    return order;
}

}  // namespace

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols) : ComplexMatrix(rows, cols, std::vector<Complex>(rows * cols)) {
}

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
        throw DimensionError("matrix dimensions must be positive");
    }
    if (data_.size() != rows * cols) {
        std::ostringstream msg;
        msg << "matrix " << rows << "x" << cols << " needs " << rows * cols << " entries, got " << data_.size();
        throw DimensionError(msg.str());
    }
    for (const auto &z : data_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw InputError("matrix entries must be finite");
        }
    }
}

ComplexMatrix ComplexMatrix::identity(size_t n) {
    ComplexMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::column(std::span<const Complex> values) {
    return ComplexMatrix(values.size(), 1, std::vector<Complex>(values.begin(), values.end()));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (size_t i = 0; i < values.size(); i++) {
        m(i, i) = values[i];
    }
    return m;
}

std::vector<Complex> ComplexMatrix::col(size_t c) const {
    std::vector<Complex> out(rows_);
    for (size_t r = 0; r < rows_; r++) {
        out[r] = (*this)(r, c);
    }
    return out;
}

void ComplexMatrix::set_col(size_t c, std::span<const Complex> values) {
    if (values.size() != rows_ || c >= cols_) {
        throw DimensionError("set_col: column does not fit " + shape(*this));
    }
    for (size_t r = 0; r < rows_; r++) {
        (*this)(r, c) = values[r];
    }
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out(c, r) = (*this)(r, c);
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::conj() const {
    ComplexMatrix out = *this;
    for (auto &z : out.data_) {
        z = std::conj(z);
    }
    return out;
}

double ComplexMatrix::frobenius_norm() const {
    double total = 0;
    for (const auto &z : data_) {
        total += std::norm(z);
    }
    return std::sqrt(total);
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix &other) const {
    require_same_shape(*this, other, "max_abs_diff");
    double best = 0;
    for (size_t k = 0; k < data_.size(); k++) {
        best = std::max(best, std::abs(data_[k] - other.data_[k]));
    }
    return best;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "add");
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] += other.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "subtract");
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &z : data_) {
        z *= scale;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(Complex s, ComplexMatrix m) {
    m *= s;
    return m;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("multiply: inner dimensions differ, " + shape(a) + " * " + shape(b));
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t k = 0; k < a.cols(); k++) {
            Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (size_t j = 0; j < b.cols(); j++) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            Complex aij = a(i, j);
            for (size_t p = 0; p < b.rows(); p++) {
                for (size_t q = 0; q < b.cols(); q++) {
                    out(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
                }
            }
        }
    }
    return out;
}

ComplexMatrix outer(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (!a.is_column() || !b.is_column()) {
        throw DimensionError("outer: expected column vectors, got " + shape(a) + " and " + shape(b));
    }
    ComplexMatrix out(a.rows(), b.rows());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < b.rows(); j++) {
            out(i, j) = a(i, 0) * std::conj(b(j, 0));
        }
    }
    return out;
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw DimensionError("inner: vector lengths differ");
    }
    Complex total{};
    for (size_t k = 0; k < a.size(); k++) {
        total += std::conj(a[k]) * b[k];
    }
    return total;
}

double norm(std::span<const Complex> v) {
    double total = 0;
    for (const auto &z : v) {
        total += std::norm(z);
    }
    return std::sqrt(total);
}

Complex trace(const ComplexMatrix &m) {
    require_square(m, "trace");
    Complex total{};
    for (size_t i = 0; i < m.rows(); i++) {
        total += m(i, i);
    }
    return total;
}

ComplexMatrix partial_trace(const ComplexMatrix &rho, size_t dim_a, size_t dim_b, Subsystem traced) {
    require_square(rho, "partial_trace");
    if (dim_a == 0 || dim_b == 0 || rho.rows() != dim_a * dim_b) {
        std::ostringstream msg;
        msg << "partial_trace: matrix side " << rho.rows() << " != " << dim_a << " * " << dim_b;
        throw DimensionError(msg.str());
    }
    if (traced == Subsystem::B) {
        ComplexMatrix out(dim_a, dim_a);
        for (size_t i = 0; i < dim_a; i++) {
            for (size_t j = 0; j < dim_a; j++) {
                Complex total{};
                for (size_t p = 0; p < dim_b; p++) {
                    total += rho(i * dim_b + p, j * dim_b + p);
                }
                out(i, j) = total;
            }
        }
        return out;
    }
    ComplexMatrix out(dim_b, dim_b);
    for (size_t p = 0; p < dim_b; p++) {
        for (size_t q = 0; q < dim_b; q++) {
            Complex total{};
            for (size_t i = 0; i < dim_a; i++) {
                total += rho(i * dim_b + p, i * dim_b + q);
            }
            out(p, q) = total;
        }
    }
    return out;
}

double hermitian_asymmetry(const ComplexMatrix &m) {
    require_square(m, "hermitian_asymmetry");
    double worst = 0;
    for (size_t i = 0; i < m.rows(); i++) {
        for (size_t j = i; j < m.cols(); j++) {
            worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
        }
    }
    return worst;
}

bool is_hermitian(const ComplexMatrix &m, double tolerance) {
    return m.is_square() && hermitian_asymmetry(m) <= tolerance;
}

void fix_phase(std::span<Complex> v) {
    for (auto &lead : v) {
        double mag = std::abs(lead);
        if (mag > kPhaseMagnitude) {
            Complex rot = std::conj(lead) / mag;
            for (auto &z : v) {
                z *= rot;
            }
            lead = mag;
            return;
        }
    }
}

EigenResult eig_hermitian(const ComplexMatrix &m, double tolerance) {
    require_square(m, "eig_hermitian");
    double asym = hermitian_asymmetry(m);
    if (asym > tolerance) {
        std::ostringstream msg;
        msg << "eig_hermitian: matrix is not Hermitian (max |m_ij - conj(m_ji)| = " << asym << ")";
        throw NotHermitianError(msg.str(), asym);
    }

    size_t n = m.rows();
    ComplexMatrix a = m;
    for (size_t i = 0; i < n; i++) {
        a(i, i) = a(i, i).real();
    }
    ComplexMatrix v = ComplexMatrix::identity(n);
    double stop = kJacobiOffDiagonalTolerance * std::max(1.0, m.frobenius_norm());

    for (int sweep = 0; sweep < kJacobiMaxSweeps; sweep++) {
        double off = 0;
        for (size_t i = 0; i < n; i++) {
            for (size_t j = 0; j < n; j++) {
                if (i != j) {
                    off += std::norm(a(i, j));
                }
            }
        }
        if (std::sqrt(off) < stop) {
            break;
        }
        for (size_t p = 0; p + 1 < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                double b = std::abs(a(p, q));
                if (b < 1e-300) {
                    continue;
                }
                // Unitary Q = diag(1, conj(w)) * R, where the phase w makes
                // the pivot real and R is the classic real Jacobi rotation.
                Complex w = a(p, q) / b;
                double alpha = a(p, p).real();
                double beta = a(q, q).real();
                double theta = (beta - alpha) / (2 * b);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                Complex q00 = c;
                Complex q01 = s;
                Complex q10 = -s * std::conj(w);
                Complex q11 = c * std::conj(w);

                for (size_t i = 0; i < n; i++) {
                    Complex aip = a(i, p);
                    Complex aiq = a(i, q);
                    a(i, p) = aip * q00 + aiq * q10;
                    a(i, q) = aip * q01 + aiq * q11;
                    Complex vip = v(i, p);
                    Complex viq = v(i, q);
                    v(i, p) = vip * q00 + viq * q10;
                    v(i, q) = vip * q01 + viq * q11;
                }
                for (size_t j = 0; j < n; j++) {
                    Complex apj = a(p, j);
                    Complex aqj = a(q, j);
                    a(p, j) = std::conj(q00) * apj + std::conj(q10) * aqj;
                    a(q, j) = std::conj(q01) * apj + std::conj(q11) * aqj;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<double> values(n);
    for (size_t i = 0; i < n; i++) {
        values[i] = a(i, i).real();
        auto column = v.col(i);
        fix_phase(column);
        v.set_col(i, column);
    }
    auto order = deterministic_order(values, v);
    ComplexMatrix vectors(n, n);
    for (size_t k = 0; k < n; k++) {
        vectors.set_col(k, v.col(order[k]));
    }
    return {std::move(values), std::move(vectors)};
}

SvdResult svd(const ComplexMatrix &m) {
    size_t rows = m.rows();
    size_t cols = m.cols();
    size_t rank_cap = std::min(rows, cols);

    ComplexMatrix gram = m.adjoint() * m;
    // m^dagger m is Hermitian up to rounding; symmetrize before the check.
    for (size_t i = 0; i < cols; i++) {
        for (size_t j = i; j < cols; j++) {
            Complex avg = 0.5 * (gram(i, j) + std::conj(gram(j, i)));
            gram(i, j) = avg;
            gram(j, i) = std::conj(avg);
        }
    }
    EigenResult eig = eig_hermitian(gram);

    // |m v_k| is accurate near zero where sqrt(lambda_k) is not.
    std::vector<double> sigma(cols);
    std::vector<std::vector<Complex>> images(cols);
    for (size_t k = 0; k < cols; k++) {
        ComplexMatrix image = m * ComplexMatrix::column(eig.eigenvectors.col(k));
        images[k] = image.col(0);
        sigma[k] = norm(images[k]);
    }
    auto order = deterministic_order(sigma, eig.eigenvectors);

    SvdResult out{ComplexMatrix(rows, rank_cap), {}, ComplexMatrix(cols, rank_cap)};
    out.singular_values.assign(sigma.begin(), sigma.begin() + static_cast<std::ptrdiff_t>(rank_cap));

    std::vector<std::vector<Complex>> left;
    std::vector<size_t> missing;
    for (size_t k = 0; k < rank_cap; k++) {
        out.v.set_col(k, eig.eigenvectors.col(order[k]));
        std::vector<Complex> w = images[order[k]];
        if (out.singular_values[k] <= kZeroSingularValue) {
            missing.push_back(k);
            left.emplace_back(rows);
            continue;
        }
        for (const auto &prev : left) {
            Complex proj = inner(prev, w);
            for (size_t i = 0; i < rows; i++) {
                w[i] -= proj * prev[i];
            }
        }
        double len = norm(w);
        for (auto &z : w) {
            z /= len;
        }
        left.push_back(std::move(w));
    }

    // Complete the left basis from standard basis vectors, taking the
    // candidate with the largest component outside the current span.
    for (size_t k : missing) {
        std::vector<Complex> best;
        double best_len = -1;
        for (size_t e = 0; e < rows; e++) {
            std::vector<Complex> cand(rows);
            cand[e] = 1;
            for (int pass = 0; pass < 2; pass++) {
                for (size_t j = 0; j < left.size(); j++) {
                    if (j == k || norm(left[j]) == 0) {
                        continue;
                    }
                    Complex proj = inner(left[j], cand);
                    for (size_t i = 0; i < rows; i++) {
                        cand[i] -= proj * left[j][i];
                    }
                }
            }
            double len = norm(cand);
            if (len > best_len + 1e-12) {
                best_len = len;
                best = std::move(cand);
            }
        }
        for (auto &z : best) {
            z /= best_len;
        }
        fix_phase(best);
        left[k] = std::move(best);
    }

    for (size_t k = 0; k < rank_cap; k++) {
        out.u.set_col(k, left[k]);
    }
    return out;
}

}  // namespace qschmidt
