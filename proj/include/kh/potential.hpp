#pragma once

#include <functional>
#include <vector>

#include "kh/exec.hpp"
#include "kh/rational.hpp"
#include "kh/specfun.hpp"
#include "kh/units.hpp"

namespace kh {

using Potential1D = std::function<double(double)>;  // V sampled along the polarization axis

// Sampled Fourier/Chebyshev components v_k(x) of the oscillating potential.
struct FourierComponentTable {
    std::vector<double> x;                   // positions (a.u.)
    std::vector<int> k;                      // harmonic indices
    std::vector<std::vector<double>> v;      // v[ik][ix]
    double lambda_L = 0.0;
    int quadrature_nodes = 0;
};

// Per-odd-harmonic dipolar slope coefficients near the origin.
struct KickCoefficients {
    double epsilon = 0.0;           // (2/pi) a_B/lambda_L
    double eta = 0.0;               // cutoff a_0/lambda_L
    std::vector<int> orders;        // odd k
    std::vector<double> slope;      // a.u. energy per a.u. length
    double comb_period = 0.0;       // T/2 = pi/omega
    bool kick_regime = false;
};

struct MultipoleExpansion {
    int order = 0;
    std::vector<Rational> A;  // A_0..A_N, exact
    double lambda_L = 0.0;
    double z_eff = 1.0;
};

namespace potential {

// v_k(x) = (1/pi) int_{-1}^{1} V(x - lambda_L x') T_k(x') / sqrt(1-x'^2) dx'
// via Gauss-Chebyshev nodes; exact to roundoff for polynomial V of degree
// <= 2*nodes - 1 - k.
double fourier_component(const Potential1D& V, double lambda_L, int k, double x,
                         int nodes = 128);

FourierComponentTable component_table(const Potential1D& V, double lambda_L,
                                      const std::vector<double>& xs, int k_max,
                                      int nodes = 128, Exec exec = Exec::parallel);

// v_0(x) + 2 sum_{k=1..K} v_k(x) T_k(sin(w t)), the series that rebuilds
// V(x - lambda_L sin(w t)).
double reconstruct(const FourierComponentTable& t, size_t ix, double sin_wt, int K);

// I_k(eta) = (1/pi) int_{-1}^{1} T_k(x') x' / [(x'^2+2 eta^2)^{3/2} sqrt(1-x'^2)] dx'.
// Exactly zero for even k (odd integrand); eta in (0, 0.1).
double dipole_kick_integral(int k, double eta, double rel_tol = 1e-8);

// Linear coefficient of v^dip_k(x) = -eps (Z e^2/lambda_L)(-1)^n (2n+1) x/a_B,
// k = 2n+1; a.u. of energy per length.
double renormalized_kick(const HydrogenicAtom& atom, const LaserField& laser, int k);

KickCoefficients kick_coefficients(const HydrogenicAtom& atom, const LaserField& laser,
                                   int k_max, double kick_threshold = 0.1);

// S_K(t) = 2 sum_{k=0..K} (2k+1) sin((2k+1) w t)
double kick_series_partial_sum(double t, int K, double omega);

// Weak test of the distributional identity: integrates f * S_K over
// [t_lo, t_hi] (composite Simpson, resolves the (2K+1)w oscillation) and the
// comb action (pi/w^2) sum_j (-1)^j f'(j T/2) over the same window.
struct CombActionTest {
    double series_action = 0.0;
    double comb_action = 0.0;
    double rel_deviation = 0.0;
};
CombActionTest comb_weak_action(const std::function<double(double)>& f,
                                const std::function<double(double)>& fprime,
                                int K, double omega, double t_lo, double t_hi,
                                Exec exec = Exec::parallel);

// A_n = (2n-1)!!/(2n)!! exact.
Rational multipole_An(int n);

MultipoleExpansion multipole_expansion(const HydrogenicAtom& atom, const LaserField& laser,
                                       int order);

// delta V_KH(r, x/r) = -(Z e^2/r) sum_{n=1..N} A_n (lambda_L/r)^{2n} P_{2n}(x/r).
double dressed_potential(const HydrogenicAtom& atom, double lambda_L, double r,
                         double x_over_r, int order);

// First-omitted-term bound for the truncation error at r > lambda_L.
double dressed_truncation_bound(const HydrogenicAtom& atom, double lambda_L, double r,
                                int order);

}  // namespace potential
}  // namespace kh
