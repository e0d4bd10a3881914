#pragma once

// Test-side oracles, independent of the library paths they check.

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "kh/specfun.hpp"

namespace oracle {

inline constexpr double pi = 3.14159265358979323846;

// T_k(cos th) = cos(k th)
inline double chebyshev_trig(int k, double x) { return std::cos(k * std::acos(x)); }

// Bessel J_n by its power series (converges for the moderate arguments used
// in the tests; independent of the recurrence in the library).
inline double bessel_series(int n, double x) {
    double term = 1.0;
    for (int i = 1; i <= n; ++i) term *= x / (2.0 * i);
    double sum = term;
    double q = x * x / 4.0;
    for (int m = 1; m <= 200; ++m) {
        term *= -q / (m * (m + n));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum) + 1e-300) break;
    }
    return sum;
}

// composite Simpson
inline double simpson(const std::function<double(double)>& f, double a, double b, long n) {
    if (n % 2) ++n;
    double h = (b - a) / n, s = f(a) + f(b);
    for (long i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

// <bra| r^{-(2m+1)} P_{2m}(x/r) |ket> at Z = 1 by a full 3D product-grid
// quadrature in (r, u=cos th, phi); this is the independent check of the
// exact-rational pipeline (per multipole order, lambda_L = a_B = 1).
inline double shift_oracle_3d(const kh::BoundState& bra, const kh::BoundState& ket, int m,
                              int nr = 320, int nu = 48, int nphi = 48) {
    using kh::specfun::GaussLegendre;
    const double rmax = 10.0 * (bra.n + ket.n) + 20.0;
    GaussLegendre glr(nr), glu(nu);
    const int dlz = ket.lz - bra.lz;
    double total = 0.0;
    for (int ir = 0; ir < nr; ++ir) {
        double r = 0.5 * rmax * (glr.x[ir] + 1.0);
        double wr = 0.5 * rmax * glr.w[ir];
        kh::HydrogenicAtom h1 = kh::HydrogenicAtom::from_z(1.0);
        (void)h1;
        double rad = kh::specfun::hydrogen_R(bra, 1.0, r) * kh::specfun::hydrogen_R(ket, 1.0, r) *
                     std::pow(r, -(2.0 * m + 1.0)) * r * r;
        if (rad == 0.0) continue;
        double ang = 0.0;
        for (int iu = 0; iu < nu; ++iu) {
            double u = glu.x[iu];
            double st = std::sqrt(std::max(0.0, 1.0 - u * u));
            double th1 = kh::specfun::spherical_harmonic_theta(bra.l, bra.lz, u);
            double th2 = kh::specfun::spherical_harmonic_theta(ket.l, ket.lz, u);
            double inner = 0.0;
            for (int ip = 0; ip < nphi; ++ip) {
                double phi = 2.0 * pi * ip / nphi;
                inner += std::cos(dlz * phi) *
                         kh::specfun::legendre_P(2 * m, st * std::cos(phi));
            }
            ang += glu.w[iu] * th1 * th2 * inner * (2.0 * pi / nphi);
        }
        total += wr * rad * ang;
    }
    return total;
}

// |int x psi_1s e^{-i p r} d^3 r|^2 by 3D quadrature (value is purely
// imaginary; x odd); spherical grid with the polarization along x.
inline double planewave_oracle(const std::array<double, 3>& p, double Z, int nr, int nu,
                               int nphi) {
    using kh::specfun::GaussLegendre;
    const double rmax = 40.0 / Z;
    GaussLegendre glr(nr), glu(nu);
    double im = 0.0;
    const double psi_norm = std::pow(Z, 1.5) / std::sqrt(pi);
    for (int ir = 0; ir < nr; ++ir) {
        double r = 0.5 * rmax * (glr.x[ir] + 1.0);
        double wr = 0.5 * rmax * glr.w[ir];
        double psi = psi_norm * std::exp(-Z * r);
        for (int iu = 0; iu < nu; ++iu) {
            double u = glu.x[iu];
            double st = std::sqrt(std::max(0.0, 1.0 - u * u));
            for (int ip = 0; ip < nphi; ++ip) {
                double phi = 2.0 * pi * ip / nphi;
                double x = r * st * std::cos(phi), y = r * st * std::sin(phi), z = r * u;
                double pr = p[0] * x + p[1] * y + p[2] * z;
                im += wr * glu.w[iu] * (2.0 * pi / nphi) * r * r * x * psi * (-std::sin(pr));
            }
        }
    }
    return im * im;
}

}  // namespace oracle
