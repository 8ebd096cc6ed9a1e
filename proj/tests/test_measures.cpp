#include <doctest.h>

#include <cmath>

#include "coh/hermitian.hpp"
#include "coh/measures.hpp"
#include "coh/rng.hpp"
#include "coh/solver.hpp"

using namespace coh;

TEST_SUITE_BEGIN("measures");

TEST_CASE("c_l1 closed forms") {
    CHECK(c_l1(IncoherentState({0.3, 0.3, 0.4}).to_density()) == 0.0);
    for (int d = 2; d <= 5; ++d)
        CHECK(c_l1(max_coherent(d)) == doctest::Approx(d - 1.0).epsilon(1e-12));

    const BlochVector r{0.3, -0.4, 0.2};
    CHECK(c_l1(from_bloch(r)) == doctest::Approx(0.5).epsilon(1e-12));

    CHECK(c_l1(mcms(4, 0.6)) == doctest::Approx(0.6 * 3).epsilon(1e-12));
}

TEST_CASE("c_r closed forms and the crossing-value check") {
    CHECK(c_r(IncoherentState({0.25, 0.75}).to_density()) == 0.0);
    for (int d = 2; d <= 5; ++d)
        CHECK(c_r(max_coherent(d)) == doctest::Approx(std::log(d)).epsilon(1e-10));
    // natural-log convention: at p = 0.96151 the curve meets p itself
    CHECK(std::abs(c_r(mcms(3, 0.96151)) - 0.96151) <= 1e-4);
}

TEST_CASE("c_tr_qubit") {
    CHECK(c_tr_qubit(IncoherentState::uniform(2).to_density()) == 0.0);
    CHECK(c_tr_qubit(from_bloch({0.6, 0.0, 0.3})) == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(c_tr_qubit(from_bloch({0.3, 0.4, 0.0})) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_THROWS_AS(c_tr_qubit(max_coherent(3)), WrongDimension);
}

TEST_CASE("c_tr_mcms returns p with the named optimizer") {
    const ClosedFormOptimum a = c_tr_mcms(3, 0.5);
    CHECK(a.value == 0.5);
    CHECK(a.lambda == 0.5);
    for (int i = 0; i < 3; ++i) CHECK(a.delta[i] == doctest::Approx(1.0 / 3));

    CHECK(c_tr_mcms(4, 1.0).value == 1.0);
    CHECK(c_tr_mcms(4, 1.0).lambda == 0.0);
    CHECK(c_tr_mcms(7, 0.25).value == 0.25);
    CHECK_THROWS_AS(c_tr_mcms(3, 0.0), BadParameter);
}

TEST_CASE("m_l closed forms") {
    CHECK(m_l(max_coherent(4)) == doctest::Approx(0.0).epsilon(1e-10));
    for (int d = 2; d <= 5; ++d)
        CHECK(m_l(IncoherentState::uniform(d).to_density()) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(m_l(mcms(5, 0.3)) == doctest::Approx(1.0 - 0.09).epsilon(1e-12));
}

TEST_CASE("m_tr closed forms") {
    CHECK(std::abs(m_tr(from_bloch({0.6, 0.0, 0.8}))) <= 1e-10);  // pure qubit
    CHECK(m_tr(random_density(4, 1, 3)) <= 1e-10);                // random pure qudit
    CHECK(m_tr(random_density(4, 1, 3)) >= 0.0);                  // negatives clamped
    CHECK(m_tr(IncoherentState::uniform(3).to_density()) == doctest::Approx(1.0).epsilon(1e-12));
    for (double p : {0.1, 0.5, 0.9})
        CHECK(m_tr(mcms(4, p)) == doctest::Approx(1.0 - p).epsilon(1e-10));
}

TEST_CASE("hs_bound value and optimizer") {
    const DensityMatrix diag = IncoherentState({0.2, 0.3, 0.5}).to_density();
    const ClosedFormOptimum inc = hs_bound(diag);
    CHECK(inc.value == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(inc.lambda == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(inc.delta[0] == doctest::Approx(0.2).epsilon(1e-10));

    for (int d = 2; d <= 4; ++d)
        CHECK(hs_bound(max_coherent(d)).value == doctest::Approx(1.0 - 1.0 / d).epsilon(1e-10));

    CHECK(hs_bound(from_bloch({1.0, 0.0, 0.0})).value == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("all measures vanish exactly on incoherent states, positive otherwise") {
    SplitMix64 rng(6);
    for (int k = 0; k < 10; ++k) {
        std::vector<double> p(3);
        double sum = 0.0;
        for (auto& x : p) {
            x = rng.next_double() + 0.01;
            sum += x;
        }
        for (auto& x : p) x /= sum;
        const DensityMatrix diag = IncoherentState(p).to_density();
        CHECK(c_l1(diag) == 0.0);
        CHECK(c_r(diag) <= 1e-12);
        CHECK(hs_bound(diag).value <= 1e-10);
    }
    for (std::uint64_t s = 0; s < 10; ++s) {
        const DensityMatrix rho = random_density(3, 3, 3100 + s);
        if (c_l1(rho) < 1e-6) continue;  // essentially incoherent draw
        CHECK(c_l1(rho) > 0.0);
        CHECK(c_r(rho) > 0.0);
        CHECK(hs_bound(rho).value > 0.0);
    }
}

TEST_CASE("c_l1 tops out at d-1, only at the maximally coherent state") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const DensityMatrix rho = random_density(4, 1 + static_cast<int>(s % 4), 3300 + s);
        CHECK(c_l1(rho) < 3.0 - 1e-6);
    }
    CHECK(c_l1(max_coherent(4)) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("coherence-mixedness bound holds on random states, tight on mcms") {
    for (std::uint64_t s = 0; s < 30; ++s) {
        const int d = 2 + static_cast<int>(s % 4);
        const DensityMatrix rho = random_density(d, 1 + static_cast<int>(s) % d, 3400 + s);
        const double lhs = std::pow(c_l1(rho) / (d - 1), 2) + m_l(rho);
        CHECK(lhs <= 1.0 + 1e-9);
    }
    for (double p : {0.15, 0.5, 0.85}) {
        const DensityMatrix rho = mcms(4, p);
        CHECK(std::pow(c_l1(rho) / 3.0, 2) + m_l(rho) == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("qubit trade-off: equality exactly on the r3 = 0 disk") {
    SplitMix64 rng(8);
    for (int k = 0; k < 25; ++k) {
        const double r = std::sqrt(rng.next_double());
        const double t = 6.283185307179586 * rng.next_double();
        const DensityMatrix disk = from_bloch({r * std::cos(t), r * std::sin(t), 0.0});
        CHECK(std::abs(c_tr_qubit(disk) + m_tr(disk) - 1.0) <= 1e-9);
    }
    for (int k = 0; k < 25; ++k) {
        const double z = (rng.next_double() < 0.5 ? -1 : 1) * (0.05 + 0.5 * rng.next_double());
        const double x = 0.5 * rng.next_double();
        const DensityMatrix tilted = from_bloch({x, 0.0, z});
        CHECK(c_tr_qubit(tilted) + m_tr(tilted) < 1.0 - 1e-9);
    }
}

TEST_CASE("mcms complementarity in closed form") {
    for (int d = 2; d <= 6; ++d)
        for (double p : {0.1, 0.45, 0.8, 1.0})
            CHECK(std::abs(c_tr_mcms(d, p).value + m_tr(mcms(d, p)) - 1.0) <= 1e-12);
}

TEST_CASE("hs_bound never exceeds the solver value") {
    for (std::uint64_t s = 0; s < 15; ++s) {
        const int d = 2 + static_cast<int>(s % 3);
        const DensityMatrix rho = random_density(d, d, 3600 + s);
        CHECK(hs_bound(rho).value <= c_tr_modified(rho).value + 1e-6);
    }
}

TEST_CASE("measure report ordering on random states") {
    for (std::uint64_t s = 0; s < 8; ++s) {
        const DensityMatrix rho = random_density(3, 3, 3700 + s);
        const double l1 = c_l1(rho);
        const double tr = c_tr_modified(rho).value;
        const double g = c_g(rho);
        CHECK(tr <= l1 + 1e-6);
        CHECK(g <= tr + 1e-4);
    }
}

TEST_SUITE_END();
