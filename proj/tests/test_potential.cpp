#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "kh/errors.hpp"
#include "kh/potential.hpp"
#include "oracles.hpp"

using namespace kh;
using namespace kh::potential;

TEST_CASE("fourier component: lambda_L = 0 collapses to the bare potential") {
    auto V = [](double x) { return std::exp(-x * x) + 0.2 * x; };
    for (double x : {-0.7, 0.0, 1.3}) {
        CHECK(fourier_component(V, 0.0, 0, x) == doctest::Approx(V(x)).epsilon(1e-14));
        for (int k = 1; k <= 5; ++k)
            CHECK(std::abs(fourier_component(V, 0.0, k, x)) < 1e-14);
    }
}

TEST_CASE("fourier component: quadratic potential analytic moments") {
    auto V = [](double x) { return x * x; };
    double lam = 1.7;
    for (double x : {-0.4, 0.8}) {
        CHECK(fourier_component(V, lam, 0, x) ==
              doctest::Approx(x * x + lam * lam / 2).epsilon(1e-13));
        CHECK(fourier_component(V, lam, 1, x) == doctest::Approx(-x * lam).epsilon(1e-13));
        CHECK(fourier_component(V, lam, 2, x) == doctest::Approx(lam * lam / 4).epsilon(1e-13));
        for (int k = 3; k <= 6; ++k)
            CHECK(std::abs(fourier_component(V, lam, k, x)) < 1e-13);
    }
}

TEST_CASE("gauss-chebyshev exactness for polynomials of degree <= 2N-1-k") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> uc(-1.0, 1.0);
    const int N = 12;
    for (int trial = 0; trial < 20; ++trial) {
        // random polynomial of degree 2N-2 in (x - lam x'), evaluated with k=1
        std::vector<double> c(2 * N - 1);
        for (auto& v : c) v = uc(rng);
        auto V = [&](double y) {
            double acc = 0.0, p = 1.0;
            for (double cv : c) {
                acc += cv * p;
                p *= y;
            }
            return acc;
        };
        double lam = 0.9, x = 0.3;
        double with_N = fourier_component(V, lam, 1, x, N);
        double with_4N = fourier_component(V, lam, 1, x, 4 * N);
        CHECK(with_N == doctest::Approx(with_4N).epsilon(1e-12));
    }
}

TEST_CASE("reconstruction identity for a smooth potential") {
    auto V = [](double x) { return -1.0 * std::exp(-x * x / (1.5 * 1.5)); };
    double lam = 2.0;
    std::vector<double> xs{-1.0, -0.3, 0.0, 0.6, 1.4};
    auto table = component_table(V, lam, xs, 32, 96, Exec::serial);
    double worst = 0.0;
    for (size_t ix = 0; ix < xs.size(); ++ix)
        for (double wt = 0.0; wt < 6.3; wt += 0.17) {
            double got = reconstruct(table, ix, std::sin(wt), 32);
            double want = V(xs[ix] - lam * std::sin(wt));
            worst = std::max(worst, std::abs(got - want));
        }
    CHECK(worst < 1e-10);
}

TEST_CASE("component parity on the polarization axis") {
    // spherically symmetric -> v_{2n} even, v_{2n+1} odd in x
    auto V = [](double x) { return -1.0 / std::sqrt(x * x + 0.5); };
    double lam = 1.3;
    for (double x : {0.2, 0.9, 2.2}) {
        for (int k = 0; k <= 7; ++k) {
            double plus = fourier_component(V, lam, k, x, 256);
            double minus = fourier_component(V, lam, k, -x, 256);
            if (k % 2 == 0)
                CHECK(plus == doctest::Approx(minus).epsilon(1e-11));
            else
                CHECK(plus == doctest::Approx(-minus).epsilon(1e-11));
        }
    }
}

TEST_CASE("dipole kick integral") {
    CHECK(dipole_kick_integral(2, 1e-4) == 0.0);
    CHECK(dipole_kick_integral(4, 1e-6) == 0.0);
    // frozen reference values (30-digit quadrature, eta = 1e-6)
    CHECK(dipole_kick_integral(1, 1e-6) == doctest::Approx(8.82051421463).epsilon(1e-7));
    CHECK(dipole_kick_integral(3, 1e-6) == doctest::Approx(-23.9150635545).epsilon(1e-7));
    CHECK(dipole_kick_integral(5, 1e-6) == doctest::Approx(38.1607865316).epsilon(1e-7));
    // leading-log ratios approach (2n+1)(-1)^n monotonically as eta falls
    double L = [](double eta) { return 2.0 / oracle::pi * std::log(1.0 / eta); }(1e-6);
    CHECK(dipole_kick_integral(1, 1e-6) / L == doctest::Approx(1.0).epsilon(0.1));
    CHECK(dipole_kick_integral(3, 1e-6) / L == doctest::Approx(-3.0).epsilon(0.1));
    double prev1 = 0.0, prev3 = 0.0, prev5 = 0.0;
    for (double eta : {1e-3, 1e-4, 1e-5, 1e-6}) {
        double Le = 2.0 / oracle::pi * std::log(1.0 / eta);
        double r1 = dipole_kick_integral(1, eta) / Le;
        double r3 = dipole_kick_integral(3, eta) / Le / -3.0;
        double r5 = dipole_kick_integral(5, eta) / Le / 5.0;
        if (prev1 != 0.0) {
            CHECK(std::abs(r1 - 1.0) < std::abs(prev1 - 1.0));
            CHECK(std::abs(r3 - 1.0) < std::abs(prev3 - 1.0));
            CHECK(std::abs(r5 - 1.0) < std::abs(prev5 - 1.0));
        }
        prev1 = r1;
        prev3 = r3;
        prev5 = r5;
    }
    CHECK_THROWS_AS(dipole_kick_integral(1, 0.5), RegimeError);
}

TEST_CASE("renormalized kick coefficients") {
    auto atom = HydrogenicAtom::from_z(1.0);
    auto laser = LaserField::from_au(0.1, 0.057);
    auto rr = derive_regime(laser, atom);
    double base = *rr.epsilon * atom.z_eff / (rr.quiver_au * atom.bohr_au);
    CHECK(renormalized_kick(atom, laser, 1) == doctest::Approx(-base).epsilon(1e-13));
    CHECK(renormalized_kick(atom, laser, 3) == doctest::Approx(3.0 * base).epsilon(1e-13));
    CHECK(renormalized_kick(atom, laser, 5) / renormalized_kick(atom, laser, 1) ==
          doctest::Approx(-5.0).epsilon(1e-13));
    CHECK_THROWS_AS(renormalized_kick(atom, laser, 2), ValidationError);
    auto kc = kick_coefficients(atom, laser, 7);
    CHECK(kc.orders.size() == 4);
    CHECK(kc.comb_period == doctest::Approx(oracle::pi / laser.omega_au));
}

TEST_CASE("kick series partial sums") {
    double w = 1.0;
    for (int K : {1, 10, 100}) CHECK(kick_series_partial_sum(0.0, K, w) == 0.0);
    // antisymmetry about T/2
    double T = 2.0 * oracle::pi / w;
    for (double dt : {0.1, 0.3, 0.7})
        CHECK(kick_series_partial_sum(T / 2 + dt, 25, w) ==
              doctest::Approx(-kick_series_partial_sum(T / 2 - dt, 25, w)).epsilon(1e-10));
}

TEST_CASE("comb weak action against the Gaussian oracle") {
    double w = 1.0, t0 = 2.0, sig = 0.8;
    auto f = [&](double t) { return std::exp(-(t - t0) * (t - t0) / (2 * sig * sig)); };
    auto fp = [&](double t) { return -(t - t0) / (sig * sig) * f(t); };
    auto res = comb_weak_action(f, fp, 400, w, t0 - 10 * sig, t0 + 10 * sig, Exec::serial);
    CHECK(res.rel_deviation < 0.01);
    // K-convergence trend
    auto res50 = comb_weak_action(f, fp, 50, w, t0 - 10 * sig, t0 + 10 * sig, Exec::serial);
    CHECK(res.rel_deviation <= res50.rel_deviation + 1e-12);
}

TEST_CASE("multipole expansion and dressed potential") {
    CHECK(multipole_An(0).str() == "1");
    CHECK(multipole_An(1).str() == "1/2");
    CHECK(multipole_An(2).str() == "3/8");
    CHECK(multipole_An(3).str() == "5/16");
    // A_n as Chebyshev-weight moments, by quadrature of x^{2n}/(pi sqrt(1-x^2))
    for (int n = 1; n <= 4; ++n) {
        double quad = oracle::simpson(
            [&](double th) { return std::pow(std::cos(th), 2.0 * n) / oracle::pi; }, 0.0,
            oracle::pi, 20000);
        CHECK(multipole_An(n).to_double() == doctest::Approx(quad).epsilon(1e-10));
    }
    // monotone decreasing
    for (int n = 1; n < 8; ++n)
        CHECK(multipole_An(n + 1).to_double() < multipole_An(n).to_double());

    auto atom = HydrogenicAtom::from_z(1.0);
    CHECK_THROWS_AS(dressed_potential(atom, 2.0, 0.0, 0.5, 4), NumericError);
    // r >> lambda_L decays as r^-3 (n = 1 dominates)
    double lam = 1.0;
    double v1 = dressed_potential(atom, lam, 50.0, 0.3, 6);
    double v2 = dressed_potential(atom, lam, 100.0, 0.3, 6);
    CHECK(v1 / v2 == doctest::Approx(8.0).epsilon(2e-3));
    // truncation error bounded by the first omitted term
    for (double r : {1.5, 2.0, 4.0}) {
        double full = dressed_potential(atom, lam, r, 0.4, 12);
        double trunc = dressed_potential(atom, lam, r, 0.4, 3);
        CHECK(std::abs(full - trunc) <= dressed_truncation_bound(atom, lam, r, 3) + 1e-15);
    }
}
