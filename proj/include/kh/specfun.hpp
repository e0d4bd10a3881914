#pragma once

#include <array>
#include <functional>
#include <vector>

#include "kh/units.hpp"

namespace kh {

// Bound hydrogenic state |n l lz>, quantization axis z, polarization axis x.
struct BoundState {
    int n = 1, l = 0, lz = 0;
    BoundState() = default;
    BoundState(int n_, int l_, int lz_);
    bool operator==(const BoundState&) const = default;
};

enum class QuadKind { gauss_chebyshev, gauss_legendre, adaptive };

struct QuadratureRule {
    QuadKind kind = QuadKind::gauss_legendre;
    int nodes = 64;
    double rel_tol = 1e-10;
    QuadratureRule() = default;
    QuadratureRule(QuadKind k, int n, double tol);
};

namespace specfun {

// Chebyshev T_k by three-term recurrence. Valid for any x; the recurrence is
// still evaluated for |x| > 1 but `outside_domain`, when supplied, is set.
double chebyshev_T(int k, double x, bool* outside_domain = nullptr);

// J_n(x), Miller downward recurrence with the J_0 + 2 sum J_2k = 1
// normalization. Relative accuracy ~1e-12 for |x| <= 50, n <= 60.
double bessel_J(int n, double x);

double legendre_P(int n, double u);

// |Y_{l,lz}(theta,phi)|^2; phi accepted for interface symmetry (the modulus
// is phi-independent).
double spherical_harmonic_sq(int l, int lz, double theta, double phi = 0.0);

// signed real factor S(u) with Y_{l,lz} = S(cos theta) e^{i lz phi};
// Condon-Shortley phase included for lz > 0.
double spherical_harmonic_theta(int l, int lz, double u);

// Gauss-Legendre nodes/weights on [-1, 1].
struct GaussLegendre {
    std::vector<double> x, w;
    explicit GaussLegendre(int n);
};

// Adaptive panel integration (Gauss-Legendre panels, doubling until stable).
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-10, int panel_nodes = 24);

// <r^k> for a bound state, in a.u. (a_B = 1/Z). Closed form via the exact
// Laguerre expansion; k >= -(2l+2) or the moment diverges.
double hydrogen_radial_moment(const BoundState& s, int k, double z_eff = 0.0);

// <Y_{l,lz}| P_{2n}(x/r) |Y_{l,lz}> with polarization along x, by 2D
// quadrature (Gauss-Legendre in cos(theta) x trapezoid in phi). Exactly zero
// (no quadrature) when 2n > 2l.
double angular_bracket(int l, int lz, int order2n);

// V |<0| x |p>|^2 for the 1s ground state and box-normalized plane wave:
// 1024 pi Z^5 p_x^2 / (Z^2+p^2)^6 in a.u.
double planewave_dipole_sq(const std::array<double, 3>& p, const HydrogenicAtom& atom);

// Normalized radial function R_nl(r), a.u.
double hydrogen_R(const BoundState& s, double z_eff, double r);

}  // namespace specfun
}  // namespace kh
