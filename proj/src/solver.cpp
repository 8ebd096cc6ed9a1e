#include "coh/solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "coh/hermitian.hpp"
#include "coh/rng.hpp"

namespace coh {

void SolverConfig::validate() const {
    if (!(step > 0.0)) throw BadParameter("SolverConfig: step must be > 0");
    if (!(tol > 0.0)) throw BadParameter("SolverConfig: tol must be > 0");
    if (max_iter < 1) throw BadParameter("SolverConfig: max_iter must be >= 1");
    if (restarts < 1) throw BadParameter("SolverConfig: restarts must be >= 1");
}

ComplexMatrix prox_trace_norm(const ComplexMatrix& v, double t) {
    if (!(t > 0.0)) throw BadParameter("prox_trace_norm: t must be > 0");
    const HermitianEigen e = eig_hermitian(v);  // throws NotHermitian
    const int d = v.dim();
    std::vector<double> shrunk(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        const double mu = e.values[static_cast<std::size_t>(i)];
        const double mag = std::max(std::abs(mu) - t, 0.0);
        shrunk[static_cast<std::size_t>(i)] = mu >= 0.0 ? mag : -mag;
    }
    ComplexMatrix r(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Complex s = 0.0;
            for (int k = 0; k < d; ++k)
                s += e.vectors(i, k) * shrunk[static_cast<std::size_t>(k)] *
                     std::conj(e.vectors(j, k));
            r(i, j) = s;
        }
    return r.symmetrized();
}

ComplexMatrix project_nonneg_diag(const ComplexMatrix& v) {
    ComplexMatrix r(v.dim());
    for (int i = 0; i < v.dim(); ++i) r(i, i) = std::max(v(i, i).real(), 0.0);
    return r;
}

namespace {

// ||rho - D||_tr for a nonnegative diagonal iterate D.
double objective_at(const DensityMatrix& rho, const ComplexMatrix& y) {
    return trace_norm(rho.matrix() - y);
}

SolverResult package(const DensityMatrix& rho, const ComplexMatrix& y, double value,
                     int iterations, double residual, bool converged) {
    SolverResult out{0.0, 0.0, IncoherentState::uniform(rho.dim()), 0, 0.0, false, false, 0.0};
    out.value = value;
    out.iterations = iterations;
    out.residual = residual;
    out.converged = converged;

    const int d = rho.dim();
    double lam = 0.0;
    for (int i = 0; i < d; ++i) lam += y(i, i).real();
    out.lambda = lam;
    if (lam > 1e-12) {
        std::vector<double> probs(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) probs[static_cast<std::size_t>(i)] = y(i, i).real() / lam;
        out.delta = IncoherentState(std::move(probs));
    } else {
        out.lambda_degenerate = true;  // delta stays uniform
    }

    // Re-evaluate the objective at the reported (lambda, delta) so the value
    // claim is decoupled from solver internals.
    ComplexMatrix reported(d);
    for (int i = 0; i < d; ++i) reported(i, i) = out.lambda * out.delta[i];
    out.certificate_gap = std::abs(out.value - objective_at(rho, reported));
    return out;
}

}  // namespace

SolverResult c_tr_modified(const DensityMatrix& rho, const SolverConfig& cfg) {
    cfg.validate();
    const ComplexMatrix& r = rho.matrix();

    // Z0 = dephased rho: the natural incoherent start, and already optimal
    // for qubits.
    ComplexMatrix z = dephase(rho).to_matrix();
    ComplexMatrix y = z;
    double residual = 0.0;
    int iter = 0;
    bool converged = false;

    // Track the best feasible iterate at a coarse cadence in case the
    // iteration budget runs out.
    double best_value = objective_at(rho, y);
    ComplexMatrix best_y = y;

    while (iter < cfg.max_iter) {
        ++iter;
        const ComplexMatrix x = r - prox_trace_norm(r - z, cfg.step);
        ComplexMatrix two_x_minus_z = x;
        two_x_minus_z *= 2.0;
        two_x_minus_z -= z;
        y = project_nonneg_diag(two_x_minus_z);
        z += y;
        z -= x;
        residual = (x - y).frobenius_norm();
        if (residual <= cfg.tol) {
            converged = true;
            break;
        }
        if (iter % 100 == 0) {
            const double v = objective_at(rho, y);
            if (v < best_value) {
                best_value = v;
                best_y = y;
            }
        }
    }

    const double final_value = objective_at(rho, y);
    if (!converged && best_value < final_value)
        return package(rho, best_y, best_value, iter, residual, false);
    return package(rho, y, final_value, iter, residual, converged);
}

namespace {

// Fidelity between rho and diag(x): sqrt(diag(x)) just scales the columns
// of the cached sqrt(rho), so each evaluation costs one singular-value sum.
// The grid oracle goes through the generic fidelity instead, keeping the
// two routes independent.
double fidelity_to_diagonal(const ComplexMatrix& sqrt_rho, const std::vector<double>& x) {
    const int d = sqrt_rho.dim();
    ComplexMatrix c(d);
    for (int j = 0; j < d; ++j) {
        const double sq = std::sqrt(std::max(0.0, x[static_cast<std::size_t>(j)]));
        for (int i = 0; i < d; ++i) c(i, j) = sqrt_rho(i, j) * sq;
    }
    const double t = singular_value_sum(c);
    return t * t;
}

struct AscentOutcome {
    double f = -1.0;
    int accepted = 0;
};

AscentOutcome mirror_ascent(const ComplexMatrix& sqrt_rho, std::vector<double> x) {
    constexpr double kGradStep = 1e-6;
    constexpr double kImprove = 1e-10;
    constexpr int kMaxIter = 500;

    const int d = sqrt_rho.dim();
    AscentOutcome out;
    double f = fidelity_to_diagonal(sqrt_rho, x);
    double eta = 0.5;

    for (int it = 0; it < kMaxIter; ++it) {
        // Forward differences of F along renormalized coordinate bumps.
        std::vector<double> g(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) {
            std::vector<double> probe = x;
            probe[static_cast<std::size_t>(i)] += kGradStep;
            const double norm = 1.0 + kGradStep;
            for (auto& p : probe) p /= norm;
            g[static_cast<std::size_t>(i)] = (fidelity_to_diagonal(sqrt_rho, probe) - f) / kGradStep;
        }
        const double gmax = *std::max_element(g.begin(), g.end());

        // Entropic update; coordinates at exactly 0 stay on their face.
        std::vector<double> next(static_cast<std::size_t>(d));
        double sum = 0.0;
        for (int i = 0; i < d; ++i) {
            next[static_cast<std::size_t>(i)] =
                x[static_cast<std::size_t>(i)] *
                std::exp(eta * (g[static_cast<std::size_t>(i)] - gmax));
            sum += next[static_cast<std::size_t>(i)];
        }
        if (!(sum > 0.0)) break;
        for (auto& p : next) p /= sum;

        const double fn = fidelity_to_diagonal(sqrt_rho, next);
        if (fn > f) {
            const double gain = fn - f;
            x = std::move(next);
            f = fn;
            ++out.accepted;
            eta = std::min(eta * 1.2, 64.0);
            if (gain < kImprove) break;
        } else {
            eta *= 0.5;
            if (eta < 1e-9) break;
        }
    }
    out.f = f;
    return out;
}

}  // namespace

CgResult c_g_detail(const DensityMatrix& rho, const SolverConfig& cfg) {
    cfg.validate();
    const int d = rho.dim();
    const ClosedFormOptimum hs = hs_bound(rho);

    std::vector<std::vector<double>> starts;
    starts.push_back(hs.delta.probs());       // certifies value <= hs_bound
    starts.push_back(dephase(rho).probs());
    for (int k = static_cast<int>(starts.size()); k < cfg.restarts; ++k) {
        SplitMix64 rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(k)));
        std::vector<double> x(static_cast<std::size_t>(d));
        double sum = 0.0;
        for (auto& xi : x) {
            xi = -std::log(1.0 - rng.next_double());  // Exp(1) -> Dirichlet(1,...,1)
            sum += xi;
        }
        for (auto& xi : x) xi /= sum;
        starts.push_back(std::move(x));
    }

    const ComplexMatrix sqrt_rho = matrix_sqrt(rho.matrix());
    CgResult best;
    bool any = false;
    for (const auto& start : starts) {
        try {
            const AscentOutcome o = mirror_ascent(sqrt_rho, start);
            best.iterations += o.accepted;
            if (!any || o.f > best.best_fidelity) {
                best.best_fidelity = o.f;
                any = true;
            }
        } catch (const Error&) {
            // a failed start is superseded by the others
        }
    }
    if (!any) throw NoConvergence("c_g: every ascent start failed");

    best.value = 1.0 - best.best_fidelity;
    if (best.value > hs.value + 1e-4)
        throw Error("c_g: value exceeded the Hilbert-Schmidt upper bound");
    return best;
}

double c_g(const DensityMatrix& rho, const SolverConfig& cfg) { return c_g_detail(rho, cfg).value; }

namespace {

// Enumerate the uniform simplex grid {k/steps} in dim coordinates.
void for_each_simplex_point(int dim, int steps, const std::function<void(const std::vector<double>&)>& fn) {
    std::vector<int> counts(static_cast<std::size_t>(dim));
    std::vector<double> x(static_cast<std::size_t>(dim));
    std::function<void(int, int)> rec = [&](int coord, int left) {
        if (coord == dim - 1) {
            counts[static_cast<std::size_t>(coord)] = left;
            for (int i = 0; i < dim; ++i)
                x[static_cast<std::size_t>(i)] =
                    static_cast<double>(counts[static_cast<std::size_t>(i)]) / steps;
            fn(x);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            counts[static_cast<std::size_t>(coord)] = k;
            rec(coord + 1, left - k);
        }
    };
    rec(0, steps);
}

}  // namespace

double grid_oracle_ctr(const DensityMatrix& rho, double lambda_max, int steps) {
    if (rho.dim() > 3) throw DimensionTooLarge("grid_oracle_ctr: dim must be <= 3");
    if (steps < 1 || steps > 60) throw BadParameter("grid_oracle_ctr: steps must be in [1, 60]");
    if (!(lambda_max > 0.0)) throw BadParameter("grid_oracle_ctr: lambda_max must be > 0");

    const int d = rho.dim();
    double best = trace_norm(rho.matrix());  // lambda = 0 point
    for_each_simplex_point(d, steps, [&](const std::vector<double>& x) {
        for (int k = 0; k <= steps; ++k) {
            const double lam = lambda_max * k / steps;
            ComplexMatrix a = rho.matrix();
            for (int i = 0; i < d; ++i) a(i, i) -= lam * x[static_cast<std::size_t>(i)];
            best = std::min(best, trace_norm(a));
        }
    });
    return best;
}

double grid_oracle_cg(const DensityMatrix& rho, int steps) {
    if (rho.dim() > 3) throw DimensionTooLarge("grid_oracle_cg: dim must be <= 3");
    if (steps < 1 || steps > 200) throw BadParameter("grid_oracle_cg: steps must be in [1, 200]");

    double best_f = 0.0;
    for_each_simplex_point(rho.dim(), steps, [&](const std::vector<double>& x) {
        const DensityMatrix sigma = IncoherentState(x).to_density();
        best_f = std::max(best_f, fidelity(rho, sigma));
    });
    return 1.0 - best_f;
}

}  // namespace coh
