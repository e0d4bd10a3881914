#include "kh/twolevel.hpp"

#include <cmath>

#include "kh/constants.hpp"
#include "kh/errors.hpp"
#include "kh/specfun.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kh::twolevel {

using constants::pi;
using specfun::bessel_J;

int default_n_max(double z) {
    // |J_n(z)| decays fast past n ~ z; march until below 1e-12
    int n = static_cast<int>(std::ceil(std::abs(z))) + 2;
    while (n < 2000 && std::abs(bessel_J(n, z)) >= 1e-12) ++n;
    return n;
}

TransformedCoeffs transformed_hamiltonian_coeffs(const TwoLevelParams& p, int n_max) {
    if (!(p.omega > 0.0)) throw ValidationError("two-level: omega > 0");
    const double z = p.bessel_argument();
    if (n_max <= 0) n_max = default_n_max(z);
    TransformedCoeffs c;
    c.static_term = 0.5 * p.splitting * bessel_J(0, z);
    for (int n = 1; 2 * n <= n_max; ++n) c.sigma3_cos.push_back(p.splitting * bessel_J(2 * n, z));
    for (int n = 0; 2 * n + 1 <= n_max; ++n)
        c.sigma2_sin.push_back(p.splitting * bessel_J(2 * n + 1, z));
    c.tail_bound = std::abs(p.splitting) * std::abs(bessel_J(n_max, z)) * 2.0;
    return c;
}

std::pair<Eigen::Vector2cd, Eigen::Vector2cd> birkhoff_basis_2lvl(const TwoLevelParams& p,
                                                                  double t) {
    const Complex i(0.0, 1.0);
    const double S = (p.drive / p.omega) * std::sin(p.omega * t);
    const Complex eD = std::exp(i * p.splitting * t);
    const Complex half = std::exp(-i * 0.5 * p.splitting * t);
    Eigen::Vector2cd b1, b2;
    b1 << 1.0, -eD;
    b2 << 1.0, eD;
    b1 *= half * std::exp(i * S) / std::sqrt(2.0);
    b2 *= half * std::exp(-i * S) / std::sqrt(2.0);
    return {b1, b2};
}

MatrixC amplitude_matrix(const TwoLevelParams& p, double t) {
    const Complex i(0.0, 1.0);
    MatrixC A(2, 2);
    const double c = p.drive * std::cos(p.omega * t);
    A << 0.0, c * std::exp(-i * p.splitting * t), c * std::exp(i * p.splitting * t), 0.0;
    return A;
}

SpectrumSeries sigma1_spectrum(const TwoLevelParams& p, const std::vector<double>& grid,
                               int n_max, Exec exec) {
    if (!(p.omega > 0.0)) throw ValidationError("two-level: omega > 0");
    const double z = p.bessel_argument();
    if (n_max <= 0) n_max = default_n_max(z);

    SpectrumSeries s;
    s.delta_R = p.splitting * bessel_J(0, z);
    s.beat_coeff = p.a2 * std::conj(p.a1);
    s.population_factor = std::norm(p.a1) - std::norm(p.a2);
    s.coherence_factor = std::conj(p.a2) * p.a1;
    for (int n = 0; 2 * n + 1 <= n_max; ++n)
        s.odd_coeffs.push_back(p.splitting * bessel_J(2 * n + 1, z) / ((n + 0.5) * p.omega));
    for (int n = 1; 2 * n <= n_max; ++n)
        s.even_coeffs.push_back(p.splitting * bessel_J(2 * n, z) / (n * p.omega));
    s.tail_bound = std::abs(p.splitting) * std::abs(bessel_J(n_max, z)) / (0.5 * n_max * p.omega);

    s.t = grid;
    s.sigma1.resize(grid.size());
    const long n_pts = static_cast<long>(grid.size());
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (long it = 0; it < n_pts; ++it) {
        const double t = grid[it];
        const Complex i(0.0, 1.0);
        const Complex eR = std::exp(i * s.delta_R * t);
        double v = 2.0 * (s.beat_coeff * std::conj(eR)).real();
        if (s.population_factor != 0.0) {
            double acc = 0.0;
            for (size_t n = 0; n < s.odd_coeffs.size(); ++n)
                acc += s.odd_coeffs[n] * (std::cos((2.0 * n + 1.0) * p.omega * t) - 1.0);
            v += s.population_factor * acc;
        }
        if (s.coherence_factor != Complex(0.0, 0.0)) {
            double mod = (i * (s.coherence_factor * eR - std::conj(s.coherence_factor * eR))).real();
            double acc = 0.0;
            for (size_t n = 1; n <= s.even_coeffs.size(); ++n)
                acc += s.even_coeffs[n - 1] * std::sin(2.0 * n * p.omega * t);
            v += mod * acc;
        }
        s.sigma1[it] = v;
    }
    return s;
}

std::vector<double> sigma1_direct(const TwoLevelParams& p, const std::vector<double>& grid) {
    // Schroedinger picture in the sigma3 basis: psi = (up, dn), a1 -> dn
    auto H = [&](double t) -> MatrixC {
        MatrixC m(2, 2);
        const double c = p.drive * std::cos(p.omega * t);
        m << 0.5 * p.splitting, c, c, -0.5 * p.splitting;
        return m;
    };
    VectorC psi0(2);
    psi0 << p.a2, p.a1;
    auto traj = direct_integrate(H, 1.0, psi0, grid, 1e-11, 1e-13);
    std::vector<double> out(grid.size());
    for (size_t k = 0; k < grid.size(); ++k)
        out[k] = 2.0 * (std::conj(traj[k](0)) * traj[k](1)).real();
    return out;
}

ValidationReport validate_against_direct(const TwoLevelParams& p,
                                         const std::vector<double>& grid) {
    auto series = sigma1_spectrum(p, grid);
    auto direct = sigma1_direct(p, grid);
    ValidationReport r;
    double se = 0.0, sd = 0.0;
    for (size_t k = 0; k < grid.size(); ++k) {
        double d = series.sigma1[k] - direct[k];
        se += d * d;
        sd += direct[k] * direct[k];
        r.max_abs = std::max(r.max_abs, std::abs(d));
    }
    r.series_rms = std::sqrt(sd / grid.size());
    r.l2_rel = std::sqrt(se / std::max(sd, 1e-300));
    return r;
}

double dft_amplitude(const std::vector<double>& t, const std::vector<double>& y,
                     double omega) {
    if (t.size() != y.size() || t.size() < 2)
        throw ValidationError("dft_amplitude: mismatched or short series");
    double mean = 0.0;
    for (double v : y) mean += v;
    mean /= y.size();
    // trapezoid quadrature of (y - mean) e^{-i w t}
    Complex acc(0.0, 0.0);
    const Complex i(0.0, 1.0);
    for (size_t k = 0; k + 1 < t.size(); ++k) {
        double h = t[k + 1] - t[k];
        Complex f0 = (y[k] - mean) * std::exp(-i * omega * t[k]);
        Complex f1 = (y[k + 1] - mean) * std::exp(-i * omega * t[k + 1]);
        acc += 0.5 * h * (f0 + f1);
    }
    return std::abs(acc) / (t.back() - t.front());
}

void fft(std::vector<Complex>& a, bool inverse) {
    const size_t n = a.size();
    if (n == 0 || (n & (n - 1)))
        throw ValidationError("fft: size must be a power of two");
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        double ang = 2.0 * pi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
        Complex wl(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            Complex w(1.0, 0.0);
            for (size_t j = 0; j < len / 2; ++j) {
                Complex u = a[i + j], v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
    if (inverse)
        for (auto& x : a) x /= static_cast<double>(n);
}

BinTable harmonic_bins(const std::vector<double>& t, const std::vector<double>& y,
                       double omega, int k_max, Exec exec) {
    BinTable b;
    b.harmonic.resize(k_max);
    b.amplitude.resize(k_max);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (int k = 1; k <= k_max; ++k) {
        b.harmonic[k - 1] = k;
        b.amplitude[k - 1] = dft_amplitude(t, y, k * omega);
    }
    return b;
}

}  // namespace kh::twolevel
