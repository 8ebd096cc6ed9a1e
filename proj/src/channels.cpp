#include "coh/channels.hpp"

#include <cmath>

#include "coh/hermitian.hpp"
#include "coh/rng.hpp"

namespace coh {

namespace {

bool kraus_is_incoherent(const ComplexMatrix& k) {
    for (int j = 0; j < k.dim(); ++j) {
        int nonzero = 0;
        for (int i = 0; i < k.dim(); ++i)
            if (std::abs(k(i, j)) > 1e-14) ++nonzero;
        if (nonzero > 1) return false;
    }
    return true;
}

}  // namespace

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus) : kraus_(std::move(kraus)) {
    if (kraus_.empty()) throw BadParameter("KrausChannel: no Kraus operators");
    dim_ = kraus_.front().dim();
    ComplexMatrix sum(dim_);
    incoherent_ = true;
    for (const auto& k : kraus_) {
        if (k.dim() != dim_) throw DimensionMismatch("KrausChannel: mixed dimensions");
        sum += k.adjoint() * k;
        incoherent_ = incoherent_ && kraus_is_incoherent(k);
    }
    sum -= ComplexMatrix::identity(dim_);
    completeness_defect_ = sum.frobenius_norm();
    if (completeness_defect_ > 1e-10)
        throw BadParameter("KrausChannel: completeness defect " +
                           std::to_string(completeness_defect_));
}

KrausChannel random_incoherent_channel(int d, int n_kraus, std::uint64_t seed) {
    if (d < 2) throw BadParameter("random_incoherent_channel: d must be >= 2");
    if (n_kraus < 1) throw BadParameter("random_incoherent_channel: n_kraus must be >= 1");
    SplitMix64 rng(seed);

    // Row targets per Kraus operator form a random permutation. Injectivity
    // is what kills the cross terms in sum_n K_n^dagger K_n: two columns
    // landing on the same row inside one K_n would leave a residue the
    // column-wise amplitude normalization cannot cancel. (The single-Kraus
    // case forces a permutation for the same reason.)
    std::vector<std::vector<int>> row(static_cast<std::size_t>(n_kraus),
                                      std::vector<int>(static_cast<std::size_t>(d)));
    for (auto& perm : row) {
        for (int i = 0; i < d; ++i) perm[static_cast<std::size_t>(i)] = i;
        for (int i = d - 1; i > 0; --i)
            std::swap(perm[static_cast<std::size_t>(i)],
                      perm[rng.next_below(static_cast<std::uint64_t>(i) + 1)]);
    }

    std::vector<ComplexMatrix> kraus(static_cast<std::size_t>(n_kraus), ComplexMatrix(d));
    for (int j = 0; j < d; ++j) {
        std::vector<Complex> amp(static_cast<std::size_t>(n_kraus));
        double norm2 = 0.0;
        do {
            norm2 = 0.0;
            for (auto& a : amp) {
                a = rng.next_complex_gaussian();
                norm2 += std::norm(a);
            }
        } while (norm2 == 0.0);
        const double inv = 1.0 / std::sqrt(norm2);
        for (int n = 0; n < n_kraus; ++n)
            kraus[static_cast<std::size_t>(n)](
                row[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)], j) =
                amp[static_cast<std::size_t>(n)] * inv;
    }
    return KrausChannel(std::move(kraus));
}

KrausChannel dephasing_channel(int d) {
    if (d < 2) throw BadParameter("dephasing_channel: d must be >= 2");
    std::vector<ComplexMatrix> kraus(static_cast<std::size_t>(d), ComplexMatrix(d));
    for (int i = 0; i < d; ++i) kraus[static_cast<std::size_t>(i)](i, i) = 1.0;
    return KrausChannel(std::move(kraus));
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
    if (ch.dim() != rho.dim()) throw DimensionMismatch("apply: channel/state dimensions differ");
    ComplexMatrix out(ch.dim());
    for (const auto& k : ch.kraus()) out += k * rho.matrix() * k.adjoint();
    return DensityMatrix(out.symmetrized());
}

std::string audit_measure_name(AuditMeasure m) {
    switch (m) {
        case AuditMeasure::c_l1: return "c_l1";
        case AuditMeasure::c_r: return "c_r";
        case AuditMeasure::c_tr_qubit: return "c_tr_qubit";
        case AuditMeasure::c_tr_mod: return "c_tr_mod";
    }
    throw BadParameter("unknown audit measure");
}

double audit_tolerance(AuditMeasure m) {
    return m == AuditMeasure::c_tr_mod ? 1e-5 : 1e-9;
}

namespace {

// Evaluate one audited measure; fills the certificate gap for the solver.
double eval_measure(AuditMeasure m, const DensityMatrix& rho, const SolverConfig& cfg,
                    std::optional<double>& cert) {
    switch (m) {
        case AuditMeasure::c_l1: return c_l1(rho);
        case AuditMeasure::c_r: return c_r(rho);
        case AuditMeasure::c_tr_qubit: return c_tr_qubit(rho);
        case AuditMeasure::c_tr_mod: {
            const SolverResult r = c_tr_modified(rho, cfg);
            cert = r.certificate_gap;
            return r.value;
        }
    }
    throw BadParameter("unknown audit measure");
}

}  // namespace

AuditRecord monotonicity_audit(AuditMeasure measure, const DensityMatrix& rho,
                               const KrausChannel& ch, const SolverConfig& cfg) {
    if (!ch.incoherent()) throw NotIncoherent("monotonicity_audit: channel is not incoherent");
    AuditRecord rec;
    rec.measure = audit_measure_name(measure);
    rec.tol = audit_tolerance(measure);
    rec.c_in = eval_measure(measure, rho, cfg, rec.cert_in);
    rec.c_out = eval_measure(measure, apply(ch, rho), cfg, rec.cert_out);
    rec.slack = rec.c_in - rec.c_out;
    rec.pass = rec.slack >= -rec.tol;
    return rec;
}

AuditRecord strong_monotonicity_audit(AuditMeasure measure, const DensityMatrix& rho,
                                      const KrausChannel& ch, const SolverConfig& cfg) {
    if (!ch.incoherent())
        throw NotIncoherent("strong_monotonicity_audit: channel is not incoherent");
    AuditRecord rec;
    rec.measure = audit_measure_name(measure);
    rec.tol = audit_tolerance(measure);
    rec.c_in = eval_measure(measure, rho, cfg, rec.cert_in);

    double avg = 0.0;
    double worst_cert = 0.0;
    bool any_cert = false;
    for (const auto& k : ch.kraus()) {
        ComplexMatrix m = (k * rho.matrix() * k.adjoint()).symmetrized();
        const double pn = m.trace().real();
        if (pn <= 1e-12) continue;  // contributes at most p_n (d-1) -> 0
        m *= Complex(1.0 / pn, 0.0);
        std::optional<double> cert;
        avg += pn * eval_measure(measure, DensityMatrix(m), cfg, cert);
        if (cert) {
            worst_cert = std::max(worst_cert, *cert);
            any_cert = true;
        }
    }
    rec.c_out = avg;
    if (any_cert) rec.cert_out = worst_cert;
    rec.slack = rec.c_in - rec.c_out;
    rec.pass = rec.slack >= -rec.tol;
    return rec;
}

}  // namespace coh
