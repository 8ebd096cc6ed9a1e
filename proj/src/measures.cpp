#include "coh/measures.hpp"

#include <cmath>

#include "coh/hermitian.hpp"

namespace coh {

double c_l1(const DensityMatrix& rho) {
    double s = 0.0;
    for (int i = 0; i < rho.dim(); ++i)
        for (int j = 0; j < rho.dim(); ++j)
            if (i != j) s += std::abs(rho(i, j));
    return s;
}

double c_r(const DensityMatrix& rho) {
    const double s_diag = vn_entropy(dephase(rho).to_density());
    const double s_rho = vn_entropy(rho);
    const double v = s_diag - s_rho;
    return (v < 0.0 && v >= -1e-12) ? 0.0 : v;
}

double c_tr_qubit(const DensityMatrix& rho) {
    const BlochVector r = to_bloch(rho);  // throws WrongDimension unless d = 2
    return std::sqrt(r.r1 * r.r1 + r.r2 * r.r2);
}

ClosedFormOptimum c_tr_mcms(int d, double p) {
    if (d < 2) throw BadDimension("c_tr_mcms: d must be >= 2");
    if (!(p > 0.0 && p <= 1.0)) throw BadParameter("c_tr_mcms: p must lie in (0, 1]");
    return {p, 1.0 - p, IncoherentState::uniform(d)};
}

double m_l(const DensityMatrix& rho) {
    const int d = rho.dim();
    if (d < 2) throw WrongDimension("m_l: undefined for d = 1");
    return static_cast<double>(d) / (d - 1) * (1.0 - rho.purity());
}

double m_tr(const DensityMatrix& rho) {
    const int d = rho.dim();
    if (d < 2) throw WrongDimension("m_tr: undefined for d = 1");
    ComplexMatrix a = rho.matrix();
    for (int i = 0; i < d; ++i) a(i, i) -= 1.0 / d;
    const double v = 1.0 - static_cast<double>(d) / (2.0 * (d - 1)) * trace_norm(a);
    return (v < 0.0 && v >= -1e-10) ? 0.0 : v;
}

ClosedFormOptimum hs_bound(const DensityMatrix& rho) {
    const ComplexMatrix b = matrix_sqrt(rho.matrix());
    const int d = rho.dim();
    std::vector<double> x(static_cast<std::size_t>(d));
    double s = 0.0;
    for (int i = 0; i < d; ++i) {
        const double bii = b(i, i).real();  // diagonal of PSD Hermitian is real
        x[static_cast<std::size_t>(i)] = bii * bii;
        s += bii * bii;
    }
    for (auto& xi : x) xi /= s;
    return {1.0 - s, s, IncoherentState(std::move(x))};
}

}  // namespace coh
