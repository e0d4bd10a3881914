#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kh/errors.hpp"
#include "kh/hydrogenic_exact.hpp"
#include "kh/rational.hpp"
#include "oracles.hpp"

using namespace kh;
using namespace kh::exact;

TEST_CASE("rational arithmetic") {
    Rational a(BigInt(1), BigInt(240)), b(BigInt(-1), BigInt(480));
    CHECK((a + b).str() == "1/480");
    CHECK((a * b).str() == "-1/115200");
    CHECK((a / b).str() == "-2");
    CHECK(Rational(BigInt(2), BigInt(-4)).str() == "-1/2");
    CHECK(Rational::factorial(20).str() == "2432902008176640000");
    CHECK(Rational::double_factorial(7).str() == "105");
    CHECK(Rational::binomial(10, 3).str() == "120");
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), ValidationError);
}

TEST_CASE("surd normalization and algebra") {
    Surd s(Rational(BigInt(1), BigInt(10800)), BigInt(150));
    CHECK(s.str() == "(1/2160)*sqrt(6)");  // sqrt(150) = 5 sqrt(6)
    Surd t = Surd::sqrt_of(Rational(BigInt(5), BigInt(4)));
    CHECK(t.str() == "(1/2)*sqrt(5)");
    CHECK((s * s).is_rational());
    CHECK((s * s).coeff().str() == "1/777600");
    CHECK(std::abs(s.to_double() - std::sqrt(150.0) / 10800.0) < 1e-18);
    CHECK_THROWS_AS(Surd(Rational(1), BigInt(2)) + Surd(Rational(1), BigInt(3)), NumericError);
}

TEST_CASE("legendre coefficients and phi integrals") {
    auto p2 = legendre_coeffs(2);
    CHECK(p2[0].str() == "-1/2");
    CHECK(p2[2].str() == "3/2");
    CHECK(poly_integral_m11(poly_mul(p2, p2)).str() == "2/5");
    CHECK(phi_integral_over_pi(0, 0).str() == "2");
    CHECK(phi_integral_over_pi(2, 1).str() == "1/2");   // int e^{2i phi} cos^2 = pi/2
    CHECK(phi_integral_over_pi(1, 1).is_zero());        // odd difference
    CHECK(phi_integral_over_pi(4, 1).is_zero());        // |d| > 2j
    CHECK(multipole_A(0).str() == "1");
    CHECK(multipole_A(1).str() == "1/2");
    CHECK(multipole_A(2).str() == "3/8");
    CHECK(multipole_A(3).str() == "5/16");
}

TEST_CASE("exact angular brackets match the quadrature path") {
    CHECK(angular_bracket_exact(1, 0, 1, 0, 2).str() == "-1/5");
    CHECK(angular_bracket_exact(1, 1, 1, 1, 2).str() == "1/10");
    CHECK(angular_bracket_exact(1, 1, 1, -1, 2).str() == "-3/10");
    CHECK(angular_bracket_exact(2, 0, 0, 0, 2).str() == "(-1/10)*sqrt(5)");
    CHECK(angular_bracket_exact(3, 2, 3, 2, 2).is_zero());  // x-axis accidental zero
    CHECK(angular_bracket_exact(2, 1, 0, 0, 2).is_zero());  // odd lz against Y00
    // multiplet trace rule: sum over lz of <Y|P_2m|Y> is zero
    for (int l = 1; l <= 3; ++l)
        for (int m = 1; m <= l; ++m) {
            Surd acc;
            for (int lz = -l; lz <= l; ++lz)
                acc = acc + angular_bracket_exact(l, lz, l, lz, 2 * m);
            CHECK(acc.is_zero());
        }
}

TEST_CASE("exact radial integrals vs numeric quadrature") {
    // same-n diagonal and cross-n cases
    struct Case {
        int n1, l1, n2, l2, k;
    };
    for (const Case& c : {Case{2, 1, 2, 1, -3}, Case{3, 2, 3, 2, -5}, Case{3, 2, 1, 0, -3},
                          Case{4, 2, 1, 0, -3}, Case{3, 1, 4, 1, -3}, Case{4, 3, 4, 3, -7}}) {
        Surd ex = radial_integral_exact(c.n1, c.l1, c.n2, c.l2, c.k);
        BoundState s1(c.n1, c.l1, 0), s2(c.n2, c.l2, 0);
        double quad = specfun::integrate(
            [&](double r) {
                return specfun::hydrogen_R(s1, 1.0, r) * specfun::hydrogen_R(s2, 1.0, r) *
                       std::pow(r, c.k + 2.0);
            },
            0.0, 40.0 * (c.n1 + c.n2), 1e-12);
        CHECK(ex.to_double() == doctest::Approx(quad).epsilon(1e-9));
    }
    // the same-n delta-l = 2 moment <R_n0| r^-3 |R_n2> vanishes identically
    CHECK(radial_integral_exact(3, 0, 3, 2, -3).is_zero());
    CHECK(radial_integral_exact(4, 1, 4, 3, -3).is_zero());
}

TEST_CASE("matrix elements: frozen exact values") {
    auto d210 = matrix_element_exact(BoundState(2, 1, 0), BoundState(2, 1, 0));
    REQUIRE(d210.size() == 1);
    CHECK(d210[1].str() == "1/240");
    auto d211 = matrix_element_exact(BoundState(2, 1, 1), BoundState(2, 1, 1));
    CHECK(d211[1].str() == "-1/480");
    auto c320 = matrix_element_exact(BoundState(3, 2, 0), BoundState(1, 0, 0));
    CHECK(c320[1].str() == "(1/2160)*sqrt(6)");  // = sqrt(150)/10800
    auto c322 = matrix_element_exact(BoundState(3, 2, 2), BoundState(1, 0, 0));
    CHECK(c322[1].str() == "-1/720");
    auto d433 = matrix_element_exact(BoundState(4, 3, 3), BoundState(4, 3, 3));
    CHECK(d433[1].str() == "-1/32256");
    CHECK(d433[2].str() == "-3/50462720");
    CHECK(d433[3].str() == "-25/113359454208");
}
