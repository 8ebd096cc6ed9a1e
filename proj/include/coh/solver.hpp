#pragma once

#include <cstdint>

#include "coh/measures.hpp"
#include "coh/states.hpp"

namespace coh {

struct SolverConfig {
    double step = 1.0;      ///< proximal step t > 0
    double tol = 1e-9;      ///< fixed-point residual ||X - Y||_F
    int max_iter = 20000;
    int restarts = 8;       ///< multi-start count for the geometric measure
    std::uint64_t seed = 1;
    int threads = 0;        ///< corpus fan-out: 0 = let OpenMP pick, 1 = serial

    void validate() const;
};

/// Outcome of the modified-trace-distance minimization for one state.
struct SolverResult {
    double value = 0.0;        ///< min ||rho - lambda delta||_tr found
    double lambda = 0.0;       ///< Tr of the optimal nonnegative diagonal
    IncoherentState delta;     ///< normalized optimal diagonal
    int iterations = 0;
    double residual = 0.0;     ///< final ||X - Y||_F
    bool converged = false;
    bool lambda_degenerate = false;  ///< Tr(D*) <= 1e-12; delta reported uniform
    double certificate_gap = 0.0;    ///< |value - ||rho - lambda diag(delta)||_tr|
};

/// Proximal operator of t ||.||_tr on Hermitian matrices: eigenvalue
/// soft-thresholding mu -> sign(mu) max(|mu| - t, 0).
ComplexMatrix prox_trace_norm(const ComplexMatrix& v, double t);

/// Euclidean projection onto the cone of real nonnegative diagonal
/// matrices: keeps max(Re(V_ii), 0) on the diagonal, zeroes the rest.
ComplexMatrix project_nonneg_diag(const ComplexMatrix& v);

/// Modified trace distance measure of coherence,
///
///     min_{lambda >= 0, delta incoherent} ||rho - lambda delta||_tr,
///
/// computed by Douglas-Rachford splitting after collapsing the bilinear
/// (lambda, delta) parametrization into the convex cone K of nonnegative
/// diagonal matrices:
///
///     X = rho - prox_trace_norm(rho - Z, t)   (prox of ||rho - .||_tr)
///     Y = project_nonneg_diag(2X - Z)
///     Z <- Z + Y - X
///
/// Y is feasible at every iteration, so the reported value is evaluated at
/// the reported optimizer and stands on its own as an upper bound. On
/// iteration-budget exhaustion the best feasible iterate seen is returned
/// with converged = false (no throw).
SolverResult c_tr_modified(const DensityMatrix& rho, const SolverConfig& cfg = {});

/// Geometric measure 1 - max_{delta incoherent} F(rho, delta) by
/// multi-start entropic mirror ascent over the probability simplex with
/// finite-difference gradients (h = 1e-6) and step halving on
/// non-improvement. Start points always include the dephased state and
/// the hs_bound optimizer, so the returned value never exceeds
/// hs_bound(rho) beyond roundoff.
double c_g(const DensityMatrix& rho, const SolverConfig& cfg = {});

/// c_g with diagnostics: best fidelity found, accepted-iteration total.
struct CgResult {
    double value = 0.0;
    double best_fidelity = 0.0;
    int iterations = 0;
};
CgResult c_g_detail(const DensityMatrix& rho, const SolverConfig& cfg = {});

/// Brute-force oracle for the modified trace distance measure: exhaustive
/// minimum over a uniform lambda grid on [0, lambda_max] (steps intervals)
/// and the uniform simplex grid of denominator steps. Feasible by
/// construction, so it upper-bounds the true minimum. dim <= 3, steps <= 60.
double grid_oracle_ctr(const DensityMatrix& rho, double lambda_max, int steps);

/// Brute-force oracle for the geometric measure: 1 - max fidelity over the
/// uniform simplex grid of denominator steps. dim <= 3, steps <= 200.
double grid_oracle_cg(const DensityMatrix& rho, int steps);

}  // namespace coh
