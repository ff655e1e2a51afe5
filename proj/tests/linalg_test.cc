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

#include <cmath>
#include <limits>

#include "gtest/gtest.h"
#include "oracles.h"
#include "qschmidt/error.h"

using namespace qschmidt;
using namespace qschmidt::testing;

namespace {

const double kInvSqrt2 = 1 / std::sqrt(2.0);

ComplexMatrix col(std::vector<Complex> v) {
    return ComplexMatrix::column(v);
}

// Density matrix of (|001> + |010> + |100>)/sqrt(3).
ComplexMatrix w_state_density() {
    double a = 1 / std::sqrt(3.0);
    return outer(col({0, a, a, 0, a, 0, 0, 0}), col({0, a, a, 0, a, 0, 0, 0}));
}

}  // namespace

TEST(ComplexMatrix, rejects_bad_shapes_and_values) {
    ASSERT_THROW(ComplexMatrix(0, 3), DimensionError);
    ASSERT_THROW(ComplexMatrix(2, 2, {1, 2, 3}), DimensionError);
    ASSERT_THROW(ComplexMatrix(1, 1, {std::numeric_limits<double>::quiet_NaN()}), InputError);
    ASSERT_THROW(ComplexMatrix(1, 1, {Complex(0, std::numeric_limits<double>::infinity())}), InputError);
    ASSERT_THROW(ComplexMatrix(2, 3) * ComplexMatrix(2, 3), DimensionError);
}

TEST(tensor, basis_vectors) {
    ASSERT_EQ(tensor(col({1, 0}), col({0, 1})), col({0, 1, 0, 0}));
}

TEST(tensor, plus_plus) {
    auto plus = col({kInvSqrt2, kInvSqrt2});
    auto zz = tensor(plus, plus);
    ASSERT_LT(zz.max_abs_diff(col({0.5, 0.5, 0.5, 0.5})), 1e-15);
}

TEST(tensor, identities) {
    ASSERT_EQ(tensor(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), ComplexMatrix::identity(4));
}

TEST(tensor, associative_and_index_layout) {
    TestRng rng(11);
    for (int trial = 0; trial < 20; trial++) {
        auto a = random_matrix(rng, 1 + rng.below(3), 1 + rng.below(3));
        auto b = random_matrix(rng, 1 + rng.below(3), 1 + rng.below(3));
        auto c = random_matrix(rng, 1 + rng.below(3), 1 + rng.below(3));
        ASSERT_LT(tensor(tensor(a, b), c).max_abs_diff(tensor(a, tensor(b, c))), 1e-13);
        auto ab = tensor(a, b);
        for (size_t i = 0; i < a.rows(); i++) {
            for (size_t j = 0; j < a.cols(); j++) {
                for (size_t p = 0; p < b.rows(); p++) {
                    for (size_t q = 0; q < b.cols(); q++) {
                        ASSERT_EQ(ab(i * b.rows() + p, j * b.cols() + q), a(i, j) * b(p, q));
                    }
                }
            }
        }
    }
}

TEST(outer, examples) {
    ASSERT_EQ(outer(col({1, 0}), col({1, 0})), ComplexMatrix(2, 2, {1, 0, 0, 0}));
    ASSERT_EQ(outer(col({1, 0}), col({0, 1})), ComplexMatrix(2, 2, {0, 1, 0, 0}));
    auto z = col({0.5, 0.5, 0.5, 0.5});
    auto rho = outer(z, z);
    for (auto e : rho.entries()) {
        ASSERT_EQ(e, Complex(0.25));
    }
}

TEST(outer, conjugates_second_argument) {
    auto rho = outer(col({1, 0}), col({0, Complex(0, 1)}));
    ASSERT_EQ(rho(0, 1), Complex(0, -1));
}

TEST(outer, rejects_non_columns) {
    ASSERT_THROW(outer(ComplexMatrix(2, 2), col({1, 0})), DimensionError);
    ASSERT_THROW(outer(col({1, 0}), ComplexMatrix(1, 2)), DimensionError);
}

TEST(trace, examples) {
    ASSERT_EQ(trace(ComplexMatrix::identity(4)), Complex(4));
    ASSERT_THROW(trace(ComplexMatrix(2, 3)), DimensionError);
    auto rho_a = partial_trace(w_state_density(), 2, 4, Subsystem::B);
    ASSERT_NEAR(std::abs(trace(rho_a) - Complex(1)), 0, 1e-15);
}

TEST(trace, outer_product_is_inner_product) {
    TestRng rng(3);
    for (int trial = 0; trial < 50; trial++) {
        size_t qubits = 1 + rng.below(3);
        auto psi = random_state(rng, qubits).column();
        auto phi = random_state(rng, qubits).column();
        Complex direct{};
        for (size_t k = 0; k < psi.rows(); k++) {
            direct += std::conj(phi(k, 0)) * psi(k, 0);
        }
        ASSERT_LT(std::abs(trace(outer(psi, phi)) - direct), 1e-14);
    }
}

TEST(partial_trace, w_state_reduced_matrices) {
    auto rho = w_state_density();
    auto rho_a = partial_trace(rho, 2, 4, Subsystem::B);
    ASSERT_LT(rho_a.max_abs_diff(ComplexMatrix(2, 2, {2.0 / 3, 0, 0, 1.0 / 3})), 1e-15);

    double t = 1.0 / 3;
    auto expected_b = ComplexMatrix(4, 4, {t, 0, 0, 0, 0, t, t, 0, 0, t, t, 0, 0, 0, 0, 0});
    ASSERT_LT(partial_trace(rho, 2, 4, Subsystem::A).max_abs_diff(expected_b), 1e-15);
}

TEST(partial_trace, product_of_densities) {
    TestRng rng(5);
    for (int trial = 0; trial < 25; trial++) {
        auto r1 = random_density(rng, 2);
        auto r2 = random_density(rng, 2);
        auto rho = tensor(r1, r2);
        ASSERT_LT(partial_trace(rho, 2, 2, Subsystem::B).max_abs_diff(r1), 1e-14);
        ASSERT_LT(partial_trace(rho, 2, 2, Subsystem::A).max_abs_diff(r2), 1e-14);
    }
}

TEST(partial_trace, matches_brute_force_and_preserves_trace) {
    TestRng rng(7);
    for (int trial = 0; trial < 30; trial++) {
        size_t da = 1 + rng.below(4);
        size_t db = 1 + rng.below(4);
        auto rho = random_matrix(rng, da * db, da * db);
        auto ta = partial_trace(rho, da, db, Subsystem::A);
        auto tb = partial_trace(rho, da, db, Subsystem::B);
        ASSERT_LT(tb.max_abs_diff(brute_trace_b(rho, da, db)), 1e-12);
        ASSERT_LT(ta.max_abs_diff(brute_trace_a(rho, da, db)), 1e-12);
        ASSERT_LT(std::abs(trace(ta) - trace(rho)), 1e-12);
        ASSERT_LT(std::abs(trace(tb) - trace(rho)), 1e-12);
    }
}

TEST(partial_trace, bra_ket_rule) {
    // tr_B |x y><x y| = |x><x| <y|y>, for unnormalized x, y.
    TestRng rng(9);
    for (int trial = 0; trial < 25; trial++) {
        auto x = random_matrix(rng, 4, 1);
        auto y = random_matrix(rng, 2, 1);
        auto xy = tensor(x, y);
        Complex yy = trace(outer(y, y));
        ASSERT_LT(partial_trace(outer(xy, xy), 4, 2, Subsystem::B).max_abs_diff(yy * outer(x, x)), 1e-12);
    }
}

TEST(partial_trace, dimension_mismatch) {
    ASSERT_THROW(partial_trace(ComplexMatrix::identity(4), 2, 3, Subsystem::A), DimensionError);
    ASSERT_THROW(partial_trace(ComplexMatrix(4, 2), 2, 2, Subsystem::A), DimensionError);
}

TEST(eig_hermitian, diagonal) {
    auto r = eig_hermitian(ComplexMatrix::diagonal(std::vector<double>{2.0 / 3, 1.0 / 3}));
    ASSERT_NEAR(r.eigenvalues[0], 2.0 / 3, 1e-15);
    ASSERT_NEAR(r.eigenvalues[1], 1.0 / 3, 1e-15);
    ASSERT_EQ(r.eigenvectors, ComplexMatrix::identity(2));
}

TEST(eig_hermitian, ascending_diagonal_is_reordered) {
    auto r = eig_hermitian(ComplexMatrix::diagonal(std::vector<double>{1, 3, 2}));
    ASSERT_EQ(r.eigenvalues, (std::vector<double>{3, 2, 1}));
    ASSERT_EQ(r.eigenvectors.col(0), (std::vector<Complex>{0, 1, 0}));
}

TEST(eig_hermitian, identity_is_deterministic) {
    auto r = eig_hermitian(ComplexMatrix::identity(2));
    ASSERT_EQ(r.eigenvalues, (std::vector<double>{1, 1}));
    ASSERT_EQ(r.eigenvectors, ComplexMatrix::identity(2));
}

TEST(eig_hermitian, w_state_rho_b) {
    auto rho_b = partial_trace(w_state_density(), 2, 4, Subsystem::A);
    auto r = eig_hermitian(rho_b);
    std::vector<double> expected{2.0 / 3, 1.0 / 3, 0, 0};
    for (size_t k = 0; k < 4; k++) {
        ASSERT_NEAR(r.eigenvalues[k], expected[k], 1e-14);
    }
}

TEST(eig_hermitian, rejects_non_hermitian_with_asymmetry) {
    ComplexMatrix m(2, 2, {1, 0.5, 0, 1});
    try {
        eig_hermitian(m);
        FAIL() << "expected NotHermitianError";
    } catch (const NotHermitianError &e) {
        ASSERT_NEAR(e.max_asymmetry(), 0.5, 1e-15);
    }
    ASSERT_THROW(eig_hermitian(ComplexMatrix(2, 3)), DimensionError);
    // Imaginary diagonal entries are not Hermitian either.
    ASSERT_THROW(eig_hermitian(ComplexMatrix(1, 1, {Complex(1, 1)})), NotHermitianError);
}

TEST(eig_hermitian, random_hermitian_properties) {
    TestRng rng(13);
    for (int trial = 0; trial < 40; trial++) {
        size_t n = 1 + rng.below(12);
        auto m = random_hermitian(rng, n);
        auto r = eig_hermitian(m);
        ASSERT_TRUE(std::is_sorted(r.eigenvalues.rbegin(), r.eigenvalues.rend()));
        ASSERT_LT(orthonormality_error(r.eigenvectors), 1e-10);
        auto rebuilt = r.eigenvectors * ComplexMatrix::diagonal(r.eigenvalues) * r.eigenvectors.adjoint();
        ASSERT_LT(rebuilt.max_abs_diff(m), 1e-10);
        ASSERT_LT(multiset_deviation(r.eigenvalues, reference_eigenvalues(m)), 1e-10);
        for (size_t k = 0; k < n; k++) {
            auto v = r.eigenvectors.col(k);
            for (auto z : v) {
                if (std::abs(z) > 1e-10) {
                    ASSERT_EQ(z.imag(), 0.0);
                    ASSERT_GT(z.real(), 0.0);
                    break;
                }
            }
        }
    }
}

TEST(eig_hermitian, psd_spectrum_is_nonnegative) {
    TestRng rng(17);
    for (int trial = 0; trial < 30; trial++) {
        size_t n = 1 + rng.below(10);
        // Rank-deficient PSD matrices stress the zero end of the spectrum.
        auto g = random_matrix(rng, n, 1 + rng.below(n));
        auto r = eig_hermitian(g * g.adjoint());
        ASSERT_GE(r.eigenvalues.back(), -1e-10);
    }
}

TEST(eig_hermitian, largest_supported_size) {
    TestRng rng(19);
    auto m = random_hermitian(rng, 64);
    auto r = eig_hermitian(m);
    auto rebuilt = r.eigenvectors * ComplexMatrix::diagonal(r.eigenvalues) * r.eigenvectors.adjoint();
    ASSERT_LT(rebuilt.max_abs_diff(m), 1e-10);
    ASSERT_LT(orthonormality_error(r.eigenvectors), 1e-10);
}

TEST(svd, plus_plus_correlation_matrix) {
    auto r = svd(ComplexMatrix(2, 2, {0.5, 0.5, 0.5, 0.5}));
    ASSERT_NEAR(r.singular_values[0], 1, 1e-15);
    ASSERT_NEAR(r.singular_values[1], 0, 1e-15);
    ASSERT_LT(ComplexMatrix::column(r.u.col(0)).max_abs_diff(col({kInvSqrt2, kInvSqrt2})), 1e-15);
    ASSERT_LT(ComplexMatrix::column(r.v.col(0)).max_abs_diff(col({kInvSqrt2, kInvSqrt2})), 1e-15);
}

TEST(svd, diagonal) {
    auto r = svd(ComplexMatrix::diagonal(std::vector<double>{kInvSqrt2, kInvSqrt2}));
    ASSERT_NEAR(r.singular_values[0], kInvSqrt2, 1e-15);
    ASSERT_NEAR(r.singular_values[1], kInvSqrt2, 1e-15);
}

TEST(svd, zero_matrix) {
    auto r = svd(ComplexMatrix(3, 2));
    ASSERT_EQ(r.singular_values, (std::vector<double>{0, 0}));
    ASSERT_LT(orthonormality_error(r.u), 1e-15);
    ASSERT_LT(orthonormality_error(r.v), 1e-15);
}

TEST(svd, random_reconstruction) {
    TestRng rng(23);
    for (int trial = 0; trial < 60; trial++) {
        size_t rows = 1 + rng.below(8);
        size_t cols = 1 + rng.below(8);
        auto m = random_matrix(rng, rows, cols);
        if (trial == 0) {
            m = random_matrix(rng, 3, 5);
        }
        auto r = svd(m);
        ASSERT_EQ(r.singular_values.size(), std::min(m.rows(), m.cols()));
        ASSERT_TRUE(std::is_sorted(r.singular_values.rbegin(), r.singular_values.rend()));
        ASSERT_GE(r.singular_values.back(), 0.0);
        ASSERT_LT(orthonormality_error(r.u), 1e-10);
        ASSERT_LT(orthonormality_error(r.v), 1e-10);
        auto rebuilt = r.u * ComplexMatrix::diagonal(r.singular_values) * r.v.adjoint();
        ASSERT_LT(rebuilt.max_abs_diff(m), 1e-10);
        ASSERT_LT(multiset_deviation(r.singular_values, reference_singular_values(m)), 1e-10);
    }
}

TEST(svd, rank_deficient_reconstruction) {
    TestRng rng(29);
    for (int trial = 0; trial < 40; trial++) {
        size_t rows = 2 + rng.below(7);
        size_t cols = 2 + rng.below(7);
        size_t rank = 1 + rng.below(std::min(rows, cols) - 1);
        auto m = random_matrix(rng, rows, rank) * random_matrix(rng, rank, cols);
        auto r = svd(m);
        ASSERT_LT(orthonormality_error(r.u), 1e-10);
        ASSERT_LT(orthonormality_error(r.v), 1e-10);
        auto rebuilt = r.u * ComplexMatrix::diagonal(r.singular_values) * r.v.adjoint();
        ASSERT_LT(rebuilt.max_abs_diff(m), 1e-10);
        for (size_t k = rank; k < r.singular_values.size(); k++) {
            ASSERT_LT(r.singular_values[k], 1e-12) << "rank " << rank << " index " << k;
        }
    }
}

TEST(svd, singular_values_are_roots_of_gram_eigenvalues) {
    TestRng rng(31);
    for (int trial = 0; trial < 40; trial++) {
        size_t n = 1 + rng.below(8);
        auto m = random_matrix(rng, n, n);
        auto s = svd(m).singular_values;
        auto lambda = eig_hermitian(m.adjoint() * m).eigenvalues;
        for (size_t k = 0; k < n; k++) {
            ASSERT_NEAR(s[k], std::sqrt(std::max(lambda[k], 0.0)), 1e-9);
        }
    }
}

TEST(svd, right_vectors_follow_phase_convention) {
    TestRng rng(37);
    auto r = svd(random_matrix(rng, 4, 4));
    for (size_t k = 0; k < 4; k++) {
        auto v = r.v.col(k);
        ASSERT_EQ(v[0].imag(), 0.0);
        ASSERT_GT(v[0].real(), 0.0);
    }
}

TEST(svd, independent_hestenes_oracle_agrees) {
    TestRng rng(41);
    for (int trial = 0; trial < 20; trial++) {
        auto m = random_matrix(rng, 1 + rng.below(6), 1 + rng.below(6));
        ASSERT_LT(multiset_deviation(hestenes_singular_values(m), reference_singular_values(m)), 1e-10);
        ASSERT_LT(multiset_deviation(hestenes_singular_values(m), svd(m).singular_values), 1e-10);
    }
}
