#pragma once

#include <cstdint>
#include <vector>

#include "coh/complex_matrix.hpp"

namespace coh {

/// Tolerances used when validating a candidate density matrix. The library
/// default is strict; the file-I/O boundary relaxes to 1e-8.
struct ValidationTol {
    double hermitian = 1e-12;
    double trace = 1e-10;
    double eigenvalue = 1e-10;
};

/// A validated quantum state: Hermitian, positive semidefinite, unit trace.
/// The stored matrix is the symmetrized input.
class DensityMatrix {
  public:
    DensityMatrix(const ComplexMatrix& m, const ValidationTol& tol = {});

    int dim() const { return m_.dim(); }
    const ComplexMatrix& matrix() const { return m_; }
    Complex operator()(int i, int j) const { return m_(i, j); }

    /// Tr(rho^2).
    double purity() const;

  private:
    ComplexMatrix m_;
};

/// Bloch vector (r1, r2, r3) of a qubit state, |r| <= 1.
struct BlochVector {
    double r1 = 0.0, r2 = 0.0, r3 = 0.0;
    double norm() const;
};

/// Probability vector over the fixed incoherent basis. Entries in
/// [-1e-10, 0) are clamped and the vector is renormalized to unit sum;
/// anything further from a distribution throws BadParameter.
class IncoherentState {
  public:
    explicit IncoherentState(std::vector<double> probs);

    static IncoherentState uniform(int dim);

    int dim() const { return static_cast<int>(probs_.size()); }
    double operator[](int i) const { return probs_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& probs() const { return probs_; }

    ComplexMatrix to_matrix() const { return ComplexMatrix::diagonal(probs_); }
    DensityMatrix to_density() const;

  private:
    std::vector<double> probs_;
};

/// rho = (I + r . sigma) / 2.
DensityMatrix from_bloch(const BlochVector& r);

/// Inverse of from_bloch; requires dim = 2.
BlochVector to_bloch(const DensityMatrix& rho);

/// Maximally coherent pure state |phi_d><phi_d|: every entry 1/d.
DensityMatrix max_coherent(int d);

/// Maximally coherent mixed state p |phi_d><phi_d| + (1-p)/d I, 0 < p <= 1.
DensityMatrix mcms(int d, double p);

/// Cyclic shift unitary U_n = sum_k |k+n mod d><k|.
ComplexMatrix shift_unitary(int d, int n);

/// Ginibre-induced random state: G G^dagger / Tr(G G^dagger) with G a
/// d x rank matrix of seeded standard complex Gaussians. Deterministic
/// for fixed (d, rank, seed).
DensityMatrix random_density(int d, int rank, std::uint64_t seed);

/// Diagonal part of rho in the fixed basis.
IncoherentState dephase(const DensityMatrix& rho);

}  // namespace coh
