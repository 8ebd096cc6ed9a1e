// coh: command-line front end for the coherence/mixedness toolkit.
//
// Exit codes: 0 ok, 1 verification failure, 2 input error,
// 3 solver non-convergence, 4 bracketing failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coh/channels.hpp"
#include "coh/hermitian.hpp"
#include "coh/measures.hpp"
#include "coh/solver.hpp"
#include "coh/state_io.hpp"
#include "coh/suites.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitNoBracket = 4;

void print_entry(const char* name, const coh::MeasureReport::Entry& e) {
    std::printf("%s %.12g %s %d", name, e.value, e.method.c_str(), e.iterations);
    if (e.certificate_gap) std::printf(" cert %.3e", *e.certificate_gap);
    if (!e.converged) std::printf(" unconverged");
    std::printf("\n");
}

int cmd_compute(const std::string& state_path, std::vector<std::string> names,
                const coh::SolverConfig& cfg) {
    const coh::DensityMatrix rho = coh::load_density(state_path);
    if (names.empty()) names = {"all"};
    bool want[8] = {};  // l1, r, mod-trace, g, qubit-trace, m-l, m-tr, hs-bound
    for (const auto& n : names) {
        if (n == "all") {
            for (int k : {0, 1, 2, 3, 5, 6}) want[k] = true;
        } else if (n == "l1") {
            want[0] = true;
        } else if (n == "r") {
            want[1] = true;
        } else if (n == "mod-trace") {
            want[2] = true;
        } else if (n == "g") {
            want[3] = true;
        } else if (n == "qubit-trace") {
            want[4] = true;
        } else if (n == "m-l") {
            want[5] = true;
        } else if (n == "m-tr") {
            want[6] = true;
        } else if (n == "hs-bound") {
            want[7] = true;
        } else {
            throw coh::BadParameter("unknown measure: " + n);
        }
    }

    coh::MeasureReport rep;
    std::optional<coh::MeasureReport::Entry> c_tr_qubit_entry;
    if (want[0]) rep.c_l1 = coh::MeasureReport::Entry{coh::c_l1(rho), "closed-form"};
    if (want[1]) rep.c_r = coh::MeasureReport::Entry{coh::c_r(rho), "closed-form"};
    if (want[2]) {
        const coh::SolverResult r = coh::c_tr_modified(rho, cfg);
        rep.c_tr_mod = coh::MeasureReport::Entry{r.value, "solver", r.iterations,
                                                r.certificate_gap, r.converged};
    }
    if (want[3]) {
        const coh::CgResult r = coh::c_g_detail(rho, cfg);
        rep.c_g = coh::MeasureReport::Entry{r.value, "optimizer", r.iterations};
    }
    if (want[4]) c_tr_qubit_entry = coh::MeasureReport::Entry{coh::c_tr_qubit(rho), "closed-form"};
    if (want[5]) rep.m_l = coh::MeasureReport::Entry{coh::m_l(rho), "closed-form"};
    if (want[6]) rep.m_tr = coh::MeasureReport::Entry{coh::m_tr(rho), "closed-form"};
    if (want[7]) rep.hs_bound = coh::MeasureReport::Entry{coh::hs_bound(rho).value, "closed-form"};

    if (rep.c_l1) print_entry("c_l1", *rep.c_l1);
    if (rep.c_r) print_entry("c_r", *rep.c_r);
    if (rep.c_tr_mod) print_entry("c_tr_mod", *rep.c_tr_mod);
    if (rep.c_g) print_entry("c_g", *rep.c_g);
    if (c_tr_qubit_entry) print_entry("c_tr_qubit", *c_tr_qubit_entry);
    if (rep.m_l) print_entry("m_l", *rep.m_l);
    if (rep.m_tr) print_entry("m_tr", *rep.m_tr);
    if (rep.hs_bound) print_entry("hs_bound", *rep.hs_bound);

    const bool converged = !rep.c_tr_mod || rep.c_tr_mod->converged;
    return converged ? kExitOk : kExitNoConvergence;
}

int cmd_sweep(int d, double p_min, double p_max, int steps, const std::string& out_path,
              const coh::SolverConfig& cfg) {
    if (d < 2) throw coh::BadParameter("sweep: d must be >= 2");
    if (!(0.0 < p_min && p_min < p_max && p_max <= 1.0))
        throw coh::BadParameter("sweep: need 0 < p-min < p-max <= 1");
    if (steps < 2) throw coh::BadParameter("sweep: steps must be >= 2");

    std::ofstream out(out_path);
    if (!out) throw coh::ParseError("cannot open for writing: " + out_path);
    out << "p,c_l1,c_tr_mod,c_g,c_r\n";
    char buf[160];
    for (int i = 0; i < steps; ++i) {
        const double p = p_min + (p_max - p_min) * i / (steps - 1);
        const coh::DensityMatrix rho = coh::mcms(d, p);
        const coh::SolverResult r = coh::c_tr_modified(rho, cfg);
        std::snprintf(buf, sizeof buf, "%.9f,%.9f,%.9f,%.9f,%.9f\n", p, coh::c_l1(rho), r.value,
                      coh::c_g(rho, cfg), coh::c_r(rho));
        out << buf;
    }
    return kExitOk;
}

int cmd_crossing(int d) {
    const coh::CrossingResult r = coh::crossing_mcms(d);
    if (!r.bracketed) {
        std::fprintf(stderr,
                     "crossing: no sign change on [0.5, 1] for d=%d "
                     "(g(0.5) = %.9f, g(1) = %.9f)\n",
                     d, r.g_lo, r.g_hi);
        return kExitNoBracket;
    }
    std::printf("%.6f\n", r.p_star);
    return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int count,
               const coh::SolverConfig& cfg) {
    const coh::SuiteReport rep = coh::run_suite(coh::parse_suite(suite), seed, count, cfg);
    std::fputs(coh::format_report(rep).c_str(), stdout);
    return rep.pass() ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coherence and mixedness measures for finite-dimensional density matrices"};
    app.require_subcommand(1);

    coh::SolverConfig cfg;

    // compute
    auto* compute = app.add_subcommand("compute", "evaluate measures on a state file");
    std::string state_path;
    std::string measure_csv = "all";
    compute->add_option("--state", state_path, "state file (line 1: d; then d rows of re,im)")
        ->required();
    compute->add_option("--measure", measure_csv,
                        "comma-separated: l1,r,mod-trace,g,qubit-trace,m-l,m-tr,hs-bound,all");
    compute->add_option("--tol", cfg.tol, "solver fixed-point tolerance");
    compute->add_option("--max-iter", cfg.max_iter, "solver iteration budget");
    compute->add_option("--seed", cfg.seed, "seed for the geometric-measure restarts");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "CSV of measures over the mcms family");
    int sweep_d = 3, sweep_steps = 20;
    double p_min = 0.05, p_max = 1.0;
    std::string out_path;
    sweep->add_option("--d", sweep_d, "dimension");
    sweep->add_option("--p-min", p_min, "lower end of the p grid");
    sweep->add_option("--p-max", p_max, "upper end of the p grid");
    sweep->add_option("--steps", sweep_steps, "number of grid points");
    sweep->add_option("--out", out_path, "output CSV path")->required();
    sweep->add_option("--tol", cfg.tol, "solver fixed-point tolerance");
    sweep->add_option("--max-iter", cfg.max_iter, "solver iteration budget");
    sweep->add_option("--seed", cfg.seed, "seed for the geometric-measure restarts");

    // crossing
    auto* crossing = app.add_subcommand(
        "crossing", "p where the relative-entropy curve crosses the trace-distance value");
    int crossing_d = 3;
    crossing->add_option("--d", crossing_d, "dimension");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    std::uint64_t seed = 1;
    int count = 100;
    verify
        ->add_option("--suite", suite, "prop1 | mcms | hierarchy | tradeoff | axioms | oracle")
        ->required();
    verify->add_option("--seed", seed, "base seed; per-item seeds derive from (seed, index)");
    verify->add_option("--count", count, "corpus size per family (mcms grid ignores it)");
    verify->add_option("--threads", cfg.threads, "0 = OpenMP default, 1 = serial");
    verify->add_option("--tol", cfg.tol, "solver fixed-point tolerance");
    verify->add_option("--max-iter", cfg.max_iter, "solver iteration budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*compute) {
            std::vector<std::string> names;
            std::stringstream ss(measure_csv);
            std::string tok;
            while (std::getline(ss, tok, ','))
                if (!tok.empty()) names.push_back(tok);
            return cmd_compute(state_path, names, cfg);
        }
        if (*sweep) return cmd_sweep(sweep_d, p_min, p_max, sweep_steps, out_path, cfg);
        if (*crossing) return cmd_crossing(crossing_d);
        if (*verify) return cmd_verify(suite, seed, count, cfg);
    } catch (const coh::NoConvergence& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNoConvergence;
    } catch (const coh::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInput;
    }
    return kExitInput;
}
