#pragma once

#include <vector>

#include "coh/complex_matrix.hpp"

namespace coh {

class DensityMatrix;

/// Eigendecomposition of a Hermitian matrix: A = V diag(values) V^dagger.
struct HermitianEigen {
    std::vector<double> values;  ///< ascending
    ComplexMatrix vectors;       ///< orthonormal eigenvectors as columns

    explicit HermitianEigen(int dim) : values(static_cast<std::size_t>(dim)), vectors(dim) {}
};

/// Diagonalize a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// Inputs within 1e-12 of Hermitian are symmetrized as (A + A^dagger)/2
/// before the sweeps; anything worse throws NotHermitian. Convergence is
/// declared when the off-diagonal Frobenius mass drops below
/// 1e-14 * ||A||_F; the sweep budget is 100 (NoConvergence past that,
/// which Jacobi's quadratic tail makes unreachable in practice at d <= 64).
HermitianEigen eig_hermitian(const ComplexMatrix& a);

/// Sum of absolute eigenvalues (Schatten-1 norm of a Hermitian matrix).
double trace_norm(const ComplexMatrix& a);

/// Entrywise l1 norm: sum of |A_ij| over all entries.
double l1_entrywise(const ComplexMatrix& a);

/// Hilbert-Schmidt (Frobenius) norm sqrt(Tr(A^dagger A)).
double hs_norm(const ComplexMatrix& a);

/// Principal square root of a PSD Hermitian matrix. Eigenvalues in
/// [-1e-10, 0) are clamped to 0; below that throws NotPSD. Spectral dust
/// under 1e-14 * max|eigenvalue| is also zeroed: the eigensolver cannot
/// distinguish it from 0, and taking its square root would amplify it from
/// machine noise to 1e-7-scale entries.
ComplexMatrix matrix_sqrt(const ComplexMatrix& a);

/// Sum of singular values of a general complex matrix, computed from the
/// Hermitian embedding [[0, A], [A^dagger, 0]] whose spectrum is the
/// plus-minus singular values. Stays accurate for nearly rank-deficient
/// inputs where forming A^dagger A would square away small values.
double singular_value_sum(const ComplexMatrix& a);

/// Uhlmann fidelity F(rho, sigma) = (Tr sqrt(sqrt(sigma) rho sqrt(sigma)))^2.
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// von Neumann entropy -sum lambda_i ln lambda_i (natural log, 0 ln 0 := 0).
double vn_entropy(const DensityMatrix& rho);

}  // namespace coh
