#pragma once

#include <complex>
#include <vector>

#include "coh/errors.hpp"

namespace coh {

using Complex = std::complex<double>;

/// Dense d x d complex matrix, row-major. The workhorse carrier for
/// operators, unitaries and matrix square roots; d stays small (<= 64).
class ComplexMatrix {
  public:
    explicit ComplexMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim) {
        if (dim < 1) throw BadDimension("ComplexMatrix: dim must be >= 1");
    }

    static ComplexMatrix identity(int dim) {
        ComplexMatrix m(dim);
        for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix zero(int dim) { return ComplexMatrix(dim); }

    /// Diagonal matrix from real entries.
    static ComplexMatrix diagonal(const std::vector<double>& d);

    int dim() const { return dim_; }

    Complex& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
    const Complex& operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * dim_ + j];
    }

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }

    ComplexMatrix adjoint() const;

    Complex trace() const;

    double frobenius_norm() const;

    /// max_{i,j} |A_ij - conj(A_ji)|.
    double hermiticity_defect() const;

    bool is_hermitian(double tol = 1e-12) const { return hermiticity_defect() <= tol; }

    /// (A + A^dagger) / 2.
    ComplexMatrix symmetrized() const;

    const std::vector<Complex>& data() const { return a_; }

  private:
    int dim_;
    std::vector<Complex> a_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

// Pauli matrices sigma_x, sigma_y, sigma_z.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

}  // namespace coh
