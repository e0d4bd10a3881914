#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "kh/constants.hpp"
#include "kh/errors.hpp"
#include "kh/units.hpp"

using namespace kh;
namespace C = kh::constants;

TEST_CASE("keldysh is 1 when I_B = 2 U_p") {
    auto laser = LaserField::from_au(0.2, 0.05);
    auto rr0 = derive_regime(laser, HydrogenicAtom::from_z(1.0));
    auto atom = HydrogenicAtom::from_z_and_ip(1.0, 2.0 * rr0.ponderomotive_au);
    auto rr = derive_regime(laser, atom);
    CHECK(*rr.keldysh == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("zero field is flagged out of regime, not an overflow") {
    auto rr = derive_regime(LaserField::from_au(0.0, 0.057), HydrogenicAtom::from_z(1.0));
    CHECK(rr.zero_field);
    CHECK(rr.ponderomotive_au == 0.0);
    CHECK(rr.quiver_au == 0.0);
    CHECK_FALSE(rr.keldysh.has_value());
}

TEST_CASE("800nm-ish atomic-unit arithmetic") {
    // independent direct evaluation of the defining formulas
    double E = 0.1, w = 0.057;
    auto rr = derive_regime(LaserField::from_au(E, w), HydrogenicAtom::from_z(1.0));
    CHECK(rr.quiver_au == doctest::Approx(E / (w * w)).epsilon(1e-15));
    CHECK(rr.ponderomotive_au == doctest::Approx(E * E / (4 * w * w)).epsilon(1e-15));
    CHECK(rr.quiver_au == doctest::Approx(30.7787011388).epsilon(1e-10));
    CHECK(rr.ponderomotive_au == doctest::Approx(0.769467528470).epsilon(1e-10));
    // gamma identity: sqrt(I_B/2U_p) = Z w/E when I_B = Z^2/2
    CHECK(*rr.keldysh == doctest::Approx(w / E).epsilon(1e-12));
}

TEST_CASE("epsilon * lambda_L = (2/pi) a_B exactly") {
    auto atom = HydrogenicAtom::from_z(2.0);
    auto rr = derive_regime(LaserField::from_au(0.3, 0.06), atom);
    CHECK(*rr.epsilon * rr.quiver_au ==
          doctest::Approx(2.0 / C::pi * atom.bohr_au).epsilon(1e-14));
}

TEST_CASE("cutoff index is the unique bracketing integer") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uw(0.005, 0.6), ui(0.05, 2.0);
    for (int trial = 0; trial < 500; ++trial) {
        double w = uw(rng), ib = ui(rng);
        auto rr = derive_regime(LaserField::from_au(0.1, w),
                                HydrogenicAtom::from_z_and_ip(1.0, ib));
        int n0 = rr.cutoff_index;
        CHECK((2 * n0 + 1) * w >= ib - 1e-12);
        CHECK((n0 == 0 || (2 * n0 - 1) * w < ib));
    }
}

TEST_CASE("squeezing shift") {
    CHECK(squeezing_shift(0.057, 1e30).omega_shifted == doctest::Approx(0.057));
    // 4 pi/V = 3 w^2  ->  Omega = 2 w
    double w = 0.11;
    double V = 4.0 * C::pi / (3.0 * w * w);
    CHECK(squeezing_shift(w, V).omega_shifted == doctest::Approx(2.0 * w).epsilon(1e-14));
    // direct arithmetic oracle
    double Vv = 1e9;
    CHECK(squeezing_shift(0.057, Vv).omega_shifted ==
          doctest::Approx(std::sqrt(0.057 * 0.057 + 4.0 * C::pi / Vv)).epsilon(1e-15));
    // monotone decreasing in V
    double prev = squeezing_shift(0.057, 1e3).omega_shifted;
    for (double V2 = 1e4; V2 < 1e12; V2 *= 10) {
        double cur = squeezing_shift(0.057, V2).omega_shifted;
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK_THROWS_AS(squeezing_shift(0.057, -1.0), ValidationError);
}

TEST_CASE("rydberg kick ratio: two algebraic forms agree to 1e-12") {
    auto r1 = rydberg_kick_ratio(98, 250.0, 12.4e9);
    auto r2 = rydberg_kick_ratio(64, 2100.0, 18e9);
    CHECK(std::abs(r1.ratio_geometric / r1.ratio_energetic - 1.0) < 1e-12);
    CHECK(std::abs(r2.ratio_geometric / r2.ratio_energetic - 1.0) < 1e-12);
    // n0 doubling at fixed laser quadruples the ratio
    auto r4 = rydberg_kick_ratio(196, 250.0, 12.4e9);
    CHECK(r4.ratio_geometric == doctest::Approx(4.0 * r1.ratio_geometric).epsilon(1e-12));
    // reconstruction with w = 2 pi f sits a common factor above the
    // published 0.0027/0.00029 pair; their mutual ratio survives
    auto p1 = rydberg_kick_ratio(98, 250.0, 12.4e9, 0.0027);
    CHECK(*p1.discrepancy_factor > 1e4);
    CHECK(r1.ratio_geometric / r2.ratio_geometric == doctest::Approx(9.31).epsilon(0.04));
}

TEST_CASE("conversion factors against two independent derivations") {
    // field from intensity: via the atomic intensity constant vs via SI
    double I = 1e14;  // W/cm^2
    double E1 = LaserField::field_from_W_cm2(I);
    double E_SI = std::sqrt(2.0 * (I * 1e4) / (C::eps0_F_m * C::c_m_s));
    double E2 = LaserField::field_from_V_m(E_SI);
    CHECK(E1 == doctest::Approx(E2).epsilon(1e-10));
    // omega from nm: via hc[eV nm] vs via Hz
    double w1 = LaserField::omega_from_nm(800.0);
    double w2 = LaserField::omega_from_Hz(C::c_m_s / 800e-9);
    CHECK(w1 == doctest::Approx(w2).epsilon(1e-7));
    // photon energy route
    CHECK(LaserField::omega_from_eV(C::hartree_eV) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("validation errors") {
    CHECK_THROWS_AS(LaserField::from_au(-1.0, 0.05), ValidationError);
    CHECK_THROWS_AS(LaserField::from_au(0.1, 0.0), ValidationError);
    CHECK_THROWS_AS(HydrogenicAtom::from_z(-2.0), ValidationError);
    CHECK_THROWS_AS(rydberg_kick_ratio(0, 250.0, 1e9), ValidationError);
}
