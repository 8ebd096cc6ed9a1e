#include "coh/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "coh/states.hpp"

namespace coh {

namespace {

constexpr double kHermTol = 1e-12;
constexpr int kSweepBudget = 100;

// Off-diagonal Frobenius mass sqrt(sum_{i != j} |a_ij|^2).
double offdiag_mass(const ComplexMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

HermitianEigen eig_hermitian(const ComplexMatrix& input) {
    if (!input.is_hermitian(kHermTol))
        throw NotHermitian("eig_hermitian: hermiticity defect exceeds 1e-12");

    const int d = input.dim();
    ComplexMatrix a = input.symmetrized();
    ComplexMatrix v = ComplexMatrix::identity(d);
    const double target = 1e-14 * std::max(1e-300, a.frobenius_norm());

    if (d == 1) {
        HermitianEigen e(1);
        e.values[0] = a(0, 0).real();
        e.vectors(0, 0) = 1.0;
        return e;
    }

    int sweep = 0;
    while (offdiag_mass(a) > target) {
        if (++sweep > kSweepBudget)
            throw NoConvergence("eig_hermitian: sweep budget exhausted");
        for (int p = 0; p < d - 1; ++p) {
            for (int q = p + 1; q < d; ++q) {
                const Complex apq = a(p, q);
                const double b = std::abs(apq);
                if (b == 0.0) continue;

                // Unitary plane rotation J(p,q): phase e^{i phi} = apq/|apq|
                // plus a real Jacobi angle that zeroes the (p,q) entry.
                const Complex phase = apq / b;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (app - aqq) / (2.0 * b);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex spq = s * phase;  // s * e^{i phi}

                // A <- J^dagger A J, columns then rows.
                for (int k = 0; k < d; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp + std::conj(spq) * akq;
                    a(k, q) = -spq * akp + c * akq;
                }
                for (int k = 0; k < d; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk + spq * aqk;
                    a(q, k) = -std::conj(spq) * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();

                for (int k = 0; k < d; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = c * vkp + std::conj(spq) * vkq;
                    v(k, q) = -spq * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(static_cast<std::size_t>(d));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    HermitianEigen e(d);
    for (int j = 0; j < d; ++j) {
        e.values[static_cast<std::size_t>(j)] = a(order[static_cast<std::size_t>(j)],
                                                  order[static_cast<std::size_t>(j)])
                                                    .real();
        for (int i = 0; i < d; ++i) e.vectors(i, j) = v(i, order[static_cast<std::size_t>(j)]);
    }
    return e;
}

double trace_norm(const ComplexMatrix& a) {
    const HermitianEigen e = eig_hermitian(a);
    double s = 0.0;
    for (double lam : e.values) s += std::abs(lam);
    return s;
}

double l1_entrywise(const ComplexMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) s += std::abs(a(i, j));
    return s;
}

double hs_norm(const ComplexMatrix& a) { return a.frobenius_norm(); }

ComplexMatrix matrix_sqrt(const ComplexMatrix& a) {
    const HermitianEigen e = eig_hermitian(a);
    const int d = a.dim();
    double lam_max = 0.0;
    for (double lam : e.values) lam_max = std::max(lam_max, std::abs(lam));
    const double dust = 1e-14 * lam_max;
    std::vector<double> roots(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        double lam = e.values[static_cast<std::size_t>(i)];
        if (lam < -1e-10) throw NotPSD("matrix_sqrt: eigenvalue below -1e-10");
        if (lam < dust) lam = 0.0;
        roots[static_cast<std::size_t>(i)] = std::sqrt(lam);
    }
    ComplexMatrix b(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Complex s = 0.0;
            for (int k = 0; k < d; ++k)
                s += e.vectors(i, k) * roots[static_cast<std::size_t>(k)] *
                     std::conj(e.vectors(j, k));
            b(i, j) = s;
        }
    return b.symmetrized();
}

double singular_value_sum(const ComplexMatrix& a) {
    const int d = a.dim();
    ComplexMatrix h(2 * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            h(i, d + j) = a(i, j);
            h(d + j, i) = std::conj(a(i, j));
        }
    const HermitianEigen e = eig_hermitian(h);
    double s = 0.0;
    for (double lam : e.values) s += std::abs(lam);
    return 0.5 * s;
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.dim() != sigma.dim()) throw DimensionMismatch("fidelity: dimensions differ");
    // Tr sqrt(sqrt(sigma) rho sqrt(sigma)) equals the singular-value sum of
    // sqrt(rho) sqrt(sigma); the latter does not square small eigenvalues.
    const ComplexMatrix c = matrix_sqrt(rho.matrix()) * matrix_sqrt(sigma.matrix());
    const double t = singular_value_sum(c);
    return t * t;
}

double vn_entropy(const DensityMatrix& rho) {
    const HermitianEigen e = eig_hermitian(rho.matrix());
    double s = 0.0;
    for (double lam : e.values) {
        if (lam <= 0.0) continue;  // clamped spectrum: 0 ln 0 = 0
        s -= lam * std::log(lam);
    }
    return std::max(0.0, s);
}

}  // namespace coh
