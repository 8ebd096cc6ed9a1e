#include "coh/states.hpp"

#include <cmath>
#include <string>

#include "coh/hermitian.hpp"
#include "coh/rng.hpp"

namespace coh {

DensityMatrix::DensityMatrix(const ComplexMatrix& m, const ValidationTol& tol) : m_(m.dim()) {
    const double defect = m.hermiticity_defect();
    if (defect > tol.hermitian)
        throw InvalidDensityMatrix("density matrix invariant violated: hermiticity defect " +
                                   std::to_string(defect));
    m_ = m.symmetrized();
    const double tr = m_.trace().real();
    if (std::abs(tr - 1.0) > tol.trace)
        throw InvalidDensityMatrix("density matrix invariant violated: trace " +
                                   std::to_string(tr));
    const HermitianEigen e = eig_hermitian(m_);
    if (e.values.front() < -tol.eigenvalue)
        throw InvalidDensityMatrix("density matrix invariant violated: min eigenvalue " +
                                   std::to_string(e.values.front()));
}

double DensityMatrix::purity() const {
    const double f = m_.frobenius_norm();
    return f * f;
}

double BlochVector::norm() const { return std::sqrt(r1 * r1 + r2 * r2 + r3 * r3); }

IncoherentState::IncoherentState(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw BadParameter("IncoherentState: empty probability vector");
    double sum = 0.0;
    for (auto& p : probs_) {
        if (p < -1e-10) throw BadParameter("IncoherentState: negative entry");
        if (p < 0.0) p = 0.0;
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-8) throw BadParameter("IncoherentState: entries sum to " +
                                                       std::to_string(sum));
    for (auto& p : probs_) p /= sum;
}

IncoherentState IncoherentState::uniform(int dim) {
    if (dim < 1) throw BadDimension("IncoherentState::uniform: dim must be >= 1");
    return IncoherentState(std::vector<double>(static_cast<std::size_t>(dim), 1.0 / dim));
}

DensityMatrix IncoherentState::to_density() const { return DensityMatrix(to_matrix()); }

DensityMatrix from_bloch(const BlochVector& r) {
    if (r.norm() > 1.0 + 1e-12) throw BlochOutOfBall();
    ComplexMatrix m(2);
    m(0, 0) = 0.5 * (1.0 + r.r3);
    m(0, 1) = Complex(0.5 * r.r1, -0.5 * r.r2);
    m(1, 0) = Complex(0.5 * r.r1, 0.5 * r.r2);
    m(1, 1) = 0.5 * (1.0 - r.r3);
    // |r| = 1 gives min eigenvalue 0 up to roundoff; validation tolerances absorb it
    return DensityMatrix(m);
}

BlochVector to_bloch(const DensityMatrix& rho) {
    if (rho.dim() != 2) throw WrongDimension("to_bloch: requires a qubit state");
    BlochVector r;
    r.r1 = 2.0 * rho(0, 1).real();
    r.r2 = -2.0 * rho(0, 1).imag();
    r.r3 = rho(0, 0).real() - rho(1, 1).real();
    return r;
}

DensityMatrix max_coherent(int d) {
    if (d < 2) throw BadDimension("max_coherent: d must be >= 2");
    ComplexMatrix m(d);
    const double v = 1.0 / d;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = v;
    return DensityMatrix(m);
}

DensityMatrix mcms(int d, double p) {
    if (d < 2) throw BadDimension("mcms: d must be >= 2");
    if (!(p > 0.0 && p <= 1.0)) throw BadParameter("mcms: p must lie in (0, 1]");
    ComplexMatrix m(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = (i == j) ? 1.0 / d : p / d;
    return DensityMatrix(m);
}

ComplexMatrix shift_unitary(int d, int n) {
    if (d < 2) throw BadDimension("shift_unitary: d must be >= 2");
    if (n < 0 || n >= d) throw IndexOutOfRange("shift_unitary: need 0 <= n <= d-1");
    ComplexMatrix u(d);
    for (int k = 0; k < d; ++k) u((k + n) % d, k) = 1.0;
    return u;
}

DensityMatrix random_density(int d, int rank, std::uint64_t seed) {
    if (d < 1) throw BadDimension("random_density: d must be >= 1");
    if (rank < 1 || rank > d) throw BadRank();
    SplitMix64 rng(seed);
    // G: d x rank Ginibre block, row-major draw order
    std::vector<Complex> g(static_cast<std::size_t>(d) * rank);
    for (auto& x : g) x = rng.next_complex_gaussian();
    ComplexMatrix m(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Complex s = 0.0;
            for (int k = 0; k < rank; ++k)
                s += g[static_cast<std::size_t>(i) * rank + k] *
                     std::conj(g[static_cast<std::size_t>(j) * rank + k]);
            m(i, j) = s;
        }
    const double tr = m.trace().real();
    m *= Complex(1.0 / tr, 0.0);
    return DensityMatrix(m.symmetrized());
}

IncoherentState dephase(const DensityMatrix& rho) {
    std::vector<double> p(static_cast<std::size_t>(rho.dim()));
    for (int i = 0; i < rho.dim(); ++i) p[static_cast<std::size_t>(i)] = rho(i, i).real();
    return IncoherentState(std::move(p));
}

}  // namespace coh
