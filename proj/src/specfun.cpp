#include "kh/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "kh/constants.hpp"
#include "kh/errors.hpp"

namespace kh {

using constants::pi;

BoundState::BoundState(int n_, int l_, int lz_) : n(n_), l(l_), lz(lz_) {
    if (n < 1 || l < 0 || l > n - 1 || std::abs(lz) > l)
        throw ValidationError("invalid bound state quantum numbers (n,l,lz)=(" +
                              std::to_string(n_) + "," + std::to_string(l_) + "," +
                              std::to_string(lz_) + ")");
}

QuadratureRule::QuadratureRule(QuadKind k, int n, double tol) : kind(k), nodes(n), rel_tol(tol) {
    if (nodes < 2) throw ValidationError("quadrature rule needs >= 2 nodes");
    if (!(rel_tol > 0.0)) throw ValidationError("quadrature tolerance must be > 0");
}

namespace specfun {

double chebyshev_T(int k, double x, bool* outside_domain) {
    if (k < 0) throw ValidationError("chebyshev_T: k >= 0");
    if (outside_domain) *outside_domain = std::abs(x) > 1.0;
    if (k == 0) return 1.0;
    double tm = 1.0, t = x;
    for (int i = 2; i <= k; ++i) {
        double tn = 2.0 * x * t - tm;
        tm = t;
        t = tn;
    }
    return t;
}

double bessel_J(int n, double x) {
    if (n < 0) throw ValidationError("bessel_J: n >= 0");
    // parity: J_n(-x) = (-1)^n J_n(x)
    double sign = 1.0;
    if (x < 0.0) {
        x = -x;
        if (n & 1) sign = -1.0;
    }
    if (x == 0.0) return n == 0 ? 1.0 : 0.0;
    if (x < 1e-5 && n > 2) {
        // leading series term avoids underflow churn in the recurrence
        double t = 1.0;
        for (int i = 1; i <= n; ++i) t *= x / (2.0 * i);
        return sign * t;
    }

    auto miller = [&](int mstart) {
        double jp = 0.0, j = 1e-300;
        double norm = 0.0, result = 0.0;
        for (int m = mstart; m >= 0; --m) {
            double jm = (2.0 * (m + 1)) / x * j - jp;
            jp = j;
            j = jm;
            if (m == n) result = j;
            if (m > 0 && m % 2 == 0) norm += 2.0 * j;
            // rescale to dodge overflow
            if (std::abs(j) > 1e250) {
                j *= 1e-250;
                jp *= 1e-250;
                norm *= 1e-250;
                result *= 1e-250;
            }
        }
        norm += j;
        return result / norm;
    };

    int m0 = std::max(n, static_cast<int>(std::ceil(x))) + 24 +
             static_cast<int>(2.0 * std::sqrt(static_cast<double>(std::max(n, static_cast<int>(x)))));
    double v = miller(m0);
    for (int iter = 0; iter < 6; ++iter) {
        double v2 = miller(m0 + 16);
        if (std::abs(v2 - v) <= 1e-13 * std::max(1e-280, std::abs(v2))) return sign * v2;
        v = v2;
        m0 += 16;
    }
    return sign * v;
}

double legendre_P(int n, double u) {
    if (n < 0) throw ValidationError("legendre_P: n >= 0");
    if (n == 0) return 1.0;
    double pm = 1.0, p = u;
    for (int k = 2; k <= n; ++k) {
        double pn = ((2.0 * k - 1.0) * u * p - (k - 1.0) * pm) / k;
        pm = p;
        p = pn;
    }
    return p;
}

namespace {

// unsigned associated Legendre P_l^m (m >= 0), no Condon-Shortley phase
double assoc_legendre(int l, int m, double u) {
    double somx2 = std::sqrt(std::max(0.0, 1.0 - u * u));
    double pmm = 1.0;
    for (int i = 1; i <= m; ++i) pmm *= (2.0 * i - 1.0) * somx2;
    if (l == m) return pmm;
    double pmmp1 = u * (2.0 * m + 1.0) * pmm;
    if (l == m + 1) return pmmp1;
    double pll = 0.0;
    for (int ll = m + 2; ll <= l; ++ll) {
        pll = ((2.0 * ll - 1.0) * u * pmmp1 - (ll + m - 1.0) * pmm) / (ll - m);
        pmm = pmmp1;
        pmmp1 = pll;
    }
    return pll;
}

double factorial_d(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

double spherical_harmonic_sq(int l, int lz, double theta, double /*phi*/) {
    double s = spherical_harmonic_theta(l, lz, std::cos(theta));
    return s * s;
}

double spherical_harmonic_theta(int l, int lz, double u) {
    int m = std::abs(lz);
    if (m > l) throw ValidationError("spherical_harmonic_theta: |lz| <= l");
    double p = assoc_legendre(l, m, u);
    double norm = std::sqrt((2.0 * l + 1.0) / (4.0 * pi) * factorial_d(l - m) / factorial_d(l + m));
    double cs = (lz > 0 && (lz % 2)) ? -1.0 : 1.0;
    return cs * norm * p;
}

GaussLegendre::GaussLegendre(int n) {
    if (n < 1) throw ValidationError("GaussLegendre: n >= 1");
    x.resize(n);
    w.resize(n);
    const int mhalf = (n + 1) / 2;
    for (int i = 0; i < mhalf; ++i) {
        double z = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, int panel_nodes) {
    auto eval = [&](int panels) {
        GaussLegendre gl(panel_nodes);
        double sum = 0.0;
        double h = (b - a) / panels;
        for (int p = 0; p < panels; ++p) {
            double lo = a + p * h, mid = lo + 0.5 * h;
            double s = 0.0;
            for (size_t i = 0; i < gl.x.size(); ++i) s += gl.w[i] * f(mid + 0.5 * h * gl.x[i]);
            sum += 0.5 * h * s;
        }
        return sum;
    };
    int panels = 1;
    double v = eval(panels);
    for (int iter = 0; iter < 14; ++iter) {
        panels *= 2;
        double v2 = eval(panels);
        if (std::abs(v2 - v) <= rel_tol * std::max(std::abs(v2), 1e-300)) return v2;
        v = v2;
    }
    return v;
}

double hydrogen_R(const BoundState& s, double z_eff, double r) {
    const int n = s.n, l = s.l;
    const double Z = z_eff;
    double rho = 2.0 * Z * r / n;
    // L^{2l+1}_{n-l-1}(rho): term_i = (-1)^i C(n+l, n-l-1-i) rho^i / i!
    int kmax = n - l - 1;
    double lag = 0.0;
    for (int i = 0; i <= kmax; ++i) {
        double binom = 1.0;
        for (int j = 0; j < kmax - i; ++j) binom *= double(n + l - j) / double(kmax - i - j);
        lag += (i % 2 ? -1.0 : 1.0) * binom / factorial_d(i) * std::pow(rho, i);
    }
    double norm = std::sqrt(std::pow(2.0 * Z / n, 3) * factorial_d(n - l - 1) /
                            (2.0 * n * factorial_d(n + l)));
    return norm * std::pow(rho, l) * std::exp(-rho / 2.0) * lag;
}

double hydrogen_radial_moment(const BoundState& s, int k, double z_eff) {
    const int n = s.n, l = s.l;
    if (k < -(2 * l + 2))
        throw ValidationError("hydrogen_radial_moment: <r^" + std::to_string(k) +
                              "> diverges for l=" + std::to_string(l) +
                              " (need k >= -(2l+2) = " + std::to_string(-(2 * l + 2)) + ")");
    const double Z = z_eff > 0.0 ? z_eff : 1.0;
    // <r^k> = int R_nl^2 r^{k+2} dr; R_nl = N rho^l e^{-rho/2} L(rho), rho = 2Zr/n.
    // Work in x = rho: r = n x/(2Z), dr = n/(2Z) dx.
    const int kmax = n - l - 1;
    auto lag_coeff = [&](int i) {
        double binom = 1.0;
        for (int j = 0; j < kmax - i; ++j) binom *= double(n + l - j) / double(kmax - i - j);
        return (i % 2 ? -1.0 : 1.0) * binom / factorial_d(i);
    };
    double sum = 0.0;
    for (int i = 0; i <= kmax; ++i)
        for (int j = 0; j <= kmax; ++j) {
            int power = 2 * l + i + j + k + 2;  // x^power e^{-x}
            // power >= 2l+k+2 >= 0 by the convergence precondition
            sum += lag_coeff(i) * lag_coeff(j) * factorial_d(power);
        }
    double norm2 = std::pow(2.0 * Z / n, 3) * factorial_d(n - l - 1) /
                   (2.0 * n * factorial_d(n + l));
    double scale = std::pow(n / (2.0 * Z), 3 + k);  // rho^l..., dr and r^{k+2} scale
    return norm2 * scale * sum;
}

double angular_bracket(int l, int lz, int order2n) {
    if (order2n < 0 || order2n % 2 != 0)
        throw ValidationError("angular_bracket: order must be even and >= 0");
    if (order2n > 2 * l) return 0.0;  // triangle rule, structurally zero
    if (order2n == 0) return 1.0;
    // 2D quadrature: GL in u = cos(theta), trapezoid in phi (spectrally exact
    // for the trigonometric integrand); node counts doubled until 1e-10.
    auto eval = [&](int nu, int nphi) {
        GaussLegendre gl(nu);
        double sum = 0.0;
        for (int i = 0; i < nu; ++i) {
            double u = gl.x[i];
            double st = std::sqrt(std::max(0.0, 1.0 - u * u));
            double ysq = spherical_harmonic_sq(l, lz, std::acos(u));
            double inner = 0.0;
            for (int j = 0; j < nphi; ++j) {
                double phi = 2.0 * pi * j / nphi;
                inner += legendre_P(order2n, st * std::cos(phi));
            }
            sum += gl.w[i] * ysq * inner * (2.0 * pi / nphi);
        }
        return sum;
    };
    int nu = 24, nphi = 24;
    double v = eval(nu, nphi);
    for (int iter = 0; iter < 6; ++iter) {
        nu *= 2;
        nphi *= 2;
        double v2 = eval(nu, nphi);
        if (std::abs(v2 - v) <= 1e-10 * std::max(1.0, std::abs(v2))) return v2;
        v = v2;
    }
    return v;
}

double planewave_dipole_sq(const std::array<double, 3>& p, const HydrogenicAtom& atom) {
    const double Z = atom.z_eff;
    double p2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
    double d = Z * Z + p2;
    return 1024.0 * pi * std::pow(Z, 5) * p[0] * p[0] / std::pow(d, 6);
}

}  // namespace specfun
}  // namespace kh
