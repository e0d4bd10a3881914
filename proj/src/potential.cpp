#include "kh/potential.hpp"

#include <cmath>
#include <string>

#include "kh/constants.hpp"
#include "kh/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kh::potential {

using constants::pi;

double fourier_component(const Potential1D& V, double lambda_L, int k, double x, int nodes) {
    if (k < 0) throw ValidationError("fourier_component: k >= 0");
    if (nodes < 2) throw ValidationError("fourier_component: nodes >= 2");
    // Gauss-Chebyshev: (1/pi) int g(x')/sqrt(1-x'^2) = (1/N) sum g(cos th_i)
    double sum = 0.0;
    for (int i = 1; i <= nodes; ++i) {
        double th = (2.0 * i - 1.0) * pi / (2.0 * nodes);
        sum += V(x - lambda_L * std::cos(th)) * std::cos(k * th);
    }
    return sum / nodes;
}

FourierComponentTable component_table(const Potential1D& V, double lambda_L,
                                      const std::vector<double>& xs, int k_max,
                                      int nodes, Exec exec) {
    FourierComponentTable t;
    t.x = xs;
    t.lambda_L = lambda_L;
    t.quadrature_nodes = nodes;
    for (int k = 0; k <= k_max; ++k) t.k.push_back(k);
    t.v.assign(k_max + 1, std::vector<double>(xs.size(), 0.0));

    const int nx = static_cast<int>(xs.size());
    // one set of potential samples per x serves every k
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (int ix = 0; ix < nx; ++ix) {
        std::vector<double> vs(nodes);
        for (int i = 1; i <= nodes; ++i) {
            double th = (2.0 * i - 1.0) * pi / (2.0 * nodes);
            vs[i - 1] = V(xs[ix] - lambda_L * std::cos(th));
        }
        for (int k = 0; k <= k_max; ++k) {
            double sum = 0.0;
            for (int i = 1; i <= nodes; ++i)
                sum += vs[i - 1] * std::cos(k * ((2.0 * i - 1.0) * pi / (2.0 * nodes)));
            t.v[k][ix] = sum / nodes;
        }
    }
    return t;
}

double reconstruct(const FourierComponentTable& t, size_t ix, double sin_wt, int K) {
    if (ix >= t.x.size()) throw ValidationError("reconstruct: x index out of range");
    if (K >= static_cast<int>(t.v.size()))
        throw ValidationError("reconstruct: K exceeds table order");
    double s = t.v[0][ix];
    for (int k = 1; k <= K; ++k) s += 2.0 * t.v[k][ix] * specfun::chebyshev_T(k, sin_wt);
    return s;
}

double dipole_kick_integral(int k, double eta, double rel_tol) {
    if (!(eta > 0.0) || eta > 0.1)
        throw RegimeError("dipole_kick_integral: cutoff eta must be in (0, 0.1]");
    if (k < 0) throw ValidationError("dipole_kick_integral: k >= 0");
    if (k % 2 == 0) return 0.0;  // odd integrand over symmetric interval

    // substitute x' = sin(psi): the endpoint weight cancels and
    // I = (2/pi) int_0^{pi/2} T_k(sin psi) sin psi / (sin^2 psi + 2 eta^2)^{3/2} dpsi
    auto g = [&](double psi) {
        double s = std::sin(psi);
        double tk = std::cos(k * (0.5 * pi - psi));  // T_k(sin psi)
        return tk * s / std::pow(s * s + 2.0 * eta * eta, 1.5);
    };
    auto eval = [&](int gl_nodes) {
        specfun::GaussLegendre gl(gl_nodes);
        // geometric panels resolve the peak of width ~eta near the origin
        std::vector<double> edges{0.0};
        for (double e = eta / 8.0; e < 0.5 * pi; e *= 2.0) edges.push_back(e);
        edges.push_back(0.5 * pi);
        double sum = 0.0;
        for (size_t p = 0; p + 1 < edges.size(); ++p) {
            double mid = 0.5 * (edges[p] + edges[p + 1]);
            double h = 0.5 * (edges[p + 1] - edges[p]);
            double s = 0.0;
            for (size_t i = 0; i < gl.x.size(); ++i) s += gl.w[i] * g(mid + h * gl.x[i]);
            sum += h * s;
        }
        return 2.0 / pi * sum;
    };
    int nodes = 16;
    double v = eval(nodes);
    for (int iter = 0; iter < 6; ++iter) {
        nodes *= 2;
        double v2 = eval(nodes);
        if (std::abs(v2 - v) <= rel_tol * std::abs(v2)) return v2;
        v = v2;
    }
    return v;
}

double renormalized_kick(const HydrogenicAtom& atom, const LaserField& laser, int k) {
    if (k < 1 || k % 2 == 0) throw ValidationError("renormalized_kick: odd k required");
    RegimeReport r = derive_regime(laser, atom);
    if (r.zero_field) throw RegimeError("renormalized_kick: zero field");
    int n = (k - 1) / 2;
    double sgn = (n % 2) ? -1.0 : 1.0;
    return -(*r.epsilon) * atom.z_eff / r.quiver_au * sgn * (2.0 * n + 1.0) / atom.bohr_au;
}

KickCoefficients kick_coefficients(const HydrogenicAtom& atom, const LaserField& laser,
                                   int k_max, double kick_threshold) {
    RegimeReport r = derive_regime(laser, atom, kick_threshold);
    if (r.zero_field) throw RegimeError("kick_coefficients: zero field");
    KickCoefficients kc;
    kc.epsilon = *r.epsilon;
    kc.eta = atom.bohr_au / r.quiver_au;
    kc.comb_period = pi / laser.omega_au;
    kc.kick_regime = r.kick_regime;
    for (int k = 1; k <= k_max; k += 2) {
        kc.orders.push_back(k);
        kc.slope.push_back(renormalized_kick(atom, laser, k));
    }
    return kc;
}

double kick_series_partial_sum(double t, int K, double omega) {
    if (K < 1) throw ValidationError("kick_series_partial_sum: K >= 1");
    double s = 0.0;
    for (int k = 0; k <= K; ++k) s += (2.0 * k + 1.0) * std::sin((2.0 * k + 1.0) * omega * t);
    return 2.0 * s;
}

CombActionTest comb_weak_action(const std::function<double(double)>& f,
                                const std::function<double(double)>& fprime,
                                int K, double omega, double t_lo, double t_hi, Exec exec) {
    if (!(t_hi > t_lo)) throw ValidationError("comb_weak_action: empty window");
    // Simpson grid fine enough for the fastest harmonic (2K+1) w
    const double period_min = 2.0 * pi / ((2.0 * K + 1.0) * omega);
    long iv = static_cast<long>(std::ceil((t_hi - t_lo) / (period_min / 24.0)));
    if (iv % 2) ++iv;
    const double h = (t_hi - t_lo) / iv;

    std::vector<double> vals(iv + 1);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (long i = 0; i <= iv; ++i) {
        double t = t_lo + i * h;
        vals[i] = f(t) * kick_series_partial_sum(t, K, omega);
    }
    double s = vals[0] + vals[iv];
    for (long i = 1; i < iv; ++i) s += vals[i] * (i % 2 ? 4.0 : 2.0);
    CombActionTest out;
    out.series_action = s * h / 3.0;

    // (pi/w^2) sum_j (-1)^j f'(j T/2) over kicks in the window, T = 2 pi/w
    const double half_T = pi / omega;
    long j_lo = static_cast<long>(std::ceil(t_lo / half_T));
    long j_hi = static_cast<long>(std::floor(t_hi / half_T));
    double comb = 0.0;
    for (long j = j_lo; j <= j_hi; ++j) {
        double sgn = (std::llabs(j) % 2) ? -1.0 : 1.0;
        comb += sgn * fprime(j * half_T);
    }
    out.comb_action = comb * pi / (omega * omega);
    out.rel_deviation = std::abs(out.series_action - out.comb_action) /
                        std::max(std::abs(out.comb_action), 1e-300);
    return out;
}

Rational multipole_An(int n) {
    if (n < 0) throw ValidationError("multipole_An: n >= 0");
    return Rational::double_factorial(2 * n - 1) / Rational::double_factorial(2 * n);
}

MultipoleExpansion multipole_expansion(const HydrogenicAtom& atom, const LaserField& laser,
                                       int order) {
    if (order < 1) throw ValidationError("multipole_expansion: order >= 1");
    MultipoleExpansion m;
    m.order = order;
    m.z_eff = atom.z_eff;
    m.lambda_L = derive_regime(laser, atom).quiver_au;
    for (int n = 0; n <= order; ++n) m.A.push_back(multipole_An(n));
    return m;
}

double dressed_potential(const HydrogenicAtom& atom, double lambda_L, double r,
                         double x_over_r, int order) {
    if (!(r > 0.0)) throw NumericError("dressed_potential: r = 0 singularity");
    if (order < 1) throw ValidationError("dressed_potential: order >= 1");
    double sum = 0.0;
    double ratio2 = lambda_L * lambda_L / (r * r);
    double pw = 1.0;
    for (int n = 1; n <= order; ++n) {
        pw *= ratio2;
        sum += multipole_An(n).to_double() * pw * specfun::legendre_P(2 * n, x_over_r);
    }
    return -atom.z_eff / r * sum;
}

double dressed_truncation_bound(const HydrogenicAtom& atom, double lambda_L, double r,
                                int order) {
    if (!(r > lambda_L)) throw RegimeError("dressed_truncation_bound: needs r > lambda_L");
    double ratio2 = lambda_L * lambda_L / (r * r);
    return atom.z_eff / r * multipole_An(order + 1).to_double() *
           std::pow(ratio2, order + 1) / (1.0 - ratio2);
}

}  // namespace kh::potential
