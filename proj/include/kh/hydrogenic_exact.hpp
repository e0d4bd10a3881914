#pragma once

#include <map>
#include <vector>

#include "kh/rational.hpp"
#include "kh/specfun.hpp"

namespace kh::exact {

using RationalPoly = std::vector<Rational>;  // coefficient of u^i at index i

// P_n(u) with exact rational coefficients.
RationalPoly legendre_coeffs(int n);

// Polynomial part of the unsigned associated Legendre function:
// P_l^m(u) = (1-u^2)^{m/2} * d^m/du^m P_l(u), m >= 0, no Condon-Shortley.
RationalPoly assoc_poly(int l, int m);

Rational poly_integral_m11(const RationalPoly& p);               // int_{-1}^{1}
RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b);
RationalPoly one_minus_u2_pow(int j);

// int_0^{2pi} e^{i d phi} cos^{2j}(phi) dphi, in units of pi (exact, real).
Rational phi_integral_over_pi(int d, int j);

// A_m = (2m-1)!!/(2m)!!, the Chebyshev-weight moment of x^{2m}.
Rational multipole_A(int m);

// <Y_{l1,m1}| P_{2n}(x/r) |Y_{l2,m2}>, polarization along x, exact.
Surd angular_bracket_exact(int l1, int m1, int l2, int m2, int order2n);

// int_0^inf R_{n1 l1} R_{n2 l2} r^{k} r^2 dr for Z = 1 (a_B = 1), exact.
// The Z-scaling of <r^k> is Z^{-k} with a_B = 1/Z.
Surd radial_integral_exact(int n1, int l1, int n2, int l2, int k);

// Coefficients of rho^m (rho = (lambda_L/a_B)^2) of <s1| dV |s2> in units of
// Z e^2/a_B, where dV = -(Ze^2/r) sum_m A_m (lambda_L/r)^{2m} P_{2m}(x/r).
// Only multipole orders allowed by the triangle rule appear; each power of
// rho is a single exact product (no cross-class surd sums arise).
std::map<int, Surd> matrix_element_exact(const BoundState& s1, const BoundState& s2,
                                         int max_order = 3);

}  // namespace kh::exact
