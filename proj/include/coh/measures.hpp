#pragma once

#include <optional>
#include <string>

#include "coh/states.hpp"

namespace coh {

/// c_l1: sum of off-diagonal moduli.
double c_l1(const DensityMatrix& rho);

/// Relative entropy of coherence S(dephase(rho)) - S(rho), natural log.
double c_r(const DensityMatrix& rho);

/// Modified trace distance measure of a qubit: sqrt(r1^2 + r2^2).
double c_tr_qubit(const DensityMatrix& rho);

/// A measure value together with the optimizer (lambda, delta) achieving it.
struct ClosedFormOptimum {
    double value;
    double lambda;
    IncoherentState delta;
};

/// Modified trace distance measure of mcms(d, p): equals p, achieved by
/// lambda = 1 - p with the uniform incoherent state.
ClosedFormOptimum c_tr_mcms(int d, double p);

/// Normalized linear entropy d/(d-1) (1 - Tr(rho^2)).
double m_l(const DensityMatrix& rho);

/// Trace-norm mixedness 1 - d/(2(d-1)) ||rho - I/d||_tr; 0 on pure states.
double m_tr(const DensityMatrix& rho);

/// The Hilbert-Schmidt quantity 1 - sum_i b_ii^2 with b = sqrt(rho): a
/// certified lower bound on the modified trace distance measure and an
/// upper bound on the geometric measure. Also returns the incoherent
/// optimizer lambda = sum b_ii^2, x_i = b_ii^2 / lambda.
ClosedFormOptimum hs_bound(const DensityMatrix& rho);

/// Collected measure values for one state, with per-entry method tags.
struct MeasureReport {
    struct Entry {
        double value = 0.0;
        std::string method;  // closed-form | solver | optimizer
        int iterations = 0;
        std::optional<double> certificate_gap;  // solver entries only
        bool converged = true;
    };
    std::optional<Entry> c_l1, c_r, c_tr_mod, c_g, m_l, m_tr, hs_bound;
};

}  // namespace coh
