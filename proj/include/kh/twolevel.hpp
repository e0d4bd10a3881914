#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "kh/birkhoff.hpp"
#include "kh/exec.hpp"

namespace kh {

using Complex = std::complex<double>;

// H = (Delta/2) sigma3 + Omega sigma1 cos(w t); a1 is the lower-level
// amplitude, a2 the upper. |a1|^2 + |a2|^2 = 1.
struct TwoLevelParams {
    double splitting = 0.0;       // Delta
    double drive = 0.0;           // Omega
    double omega = 0.0;           // drive frequency
    Complex a1{1.0, 0.0};
    Complex a2{0.0, 0.0};

    bool regime_splitting_ok() const { return splitting < 0.5 * drive; }   // Delta << Omega
    bool regime_frequency_ok() const { return omega < 0.5 * drive; }       // w << Omega
    double bessel_argument() const { return 2.0 * drive / omega; }
};

// Coefficients of the unitarily transformed Hamiltonian:
// (Delta/2) J0(z) sigma3 + Delta sigma3 sum J_{2n}(z) cos(2n w t)
//                        + Delta sigma2 sum J_{2n+1}(z) sin((2n+1) w t),  z = 2 Omega/w.
struct TransformedCoeffs {
    double static_term = 0.0;            // Delta J0(z)/2
    std::vector<double> sigma3_cos;      // Delta J_{2n}(z), n = 1..
    std::vector<double> sigma2_sin;      // Delta J_{2n+1}(z), n = 0..
    double tail_bound = 0.0;
};

// The three-block <sigma1>(t) series: beat line at Delta_R, odd harmonics
// weighted by the initial population difference, even harmonics by the
// initial coherence.
struct SpectrumSeries {
    double delta_R = 0.0;
    Complex beat_coeff{0.0, 0.0};              // a2(0) a1*(0)
    double population_factor = 0.0;            // |a1|^2 - |a2|^2, exact zero kills odd block
    Complex coherence_factor{0.0, 0.0};        // a2*(0) a1(0), exact zero kills even block
    std::vector<double> odd_coeffs;            // per 2n+1: Delta J_{2n+1}(z)/((n+1/2) w)
    std::vector<double> even_coeffs;           // per 2n:   Delta J_{2n}(z)/(n w)
    std::vector<double> t;
    std::vector<double> sigma1;
    double tail_bound = 0.0;
};

struct ValidationReport {
    double l2_rel = 0.0;
    double max_abs = 0.0;
    double series_rms = 0.0;
};

namespace twolevel {

int default_n_max(double bessel_arg);  // smallest cutoff with |J_n| < 1e-12 beyond

TransformedCoeffs transformed_hamiltonian_coeffs(const TwoLevelParams& p, int n_max = 0);

// Closed-form leading-order fundamental pair; phase conventions fixed so the
// generic solver applied to amplitude_matrix() reproduces these vectors.
std::pair<Eigen::Vector2cd, Eigen::Vector2cd> birkhoff_basis_2lvl(const TwoLevelParams& p,
                                                                  double t);

// Interaction-picture amplitude matrix of the model (a1 lower, a2 upper).
MatrixC amplitude_matrix(const TwoLevelParams& p, double t);

SpectrumSeries sigma1_spectrum(const TwoLevelParams& p, const std::vector<double>& grid,
                               int n_max = 0, Exec exec = Exec::parallel);

// <sigma1>(t) from direct integration of the Schroedinger equation.
std::vector<double> sigma1_direct(const TwoLevelParams& p, const std::vector<double>& grid);

ValidationReport validate_against_direct(const TwoLevelParams& p,
                                         const std::vector<double>& grid);

// DFT amplitude |(1/T) int y e^{-i w t} dt| of a mean-removed series.
double dft_amplitude(const std::vector<double>& t, const std::vector<double>& y,
                     double omega);

// radix-2 FFT (in-place, size power of two), used for the padded bin table
void fft(std::vector<Complex>& a, bool inverse = false);

struct BinTable {
    std::vector<int> harmonic;  // multiples of the drive frequency
    std::vector<double> amplitude;
};
BinTable harmonic_bins(const std::vector<double>& t, const std::vector<double>& y,
                       double omega, int k_max, Exec exec = Exec::parallel);

}  // namespace twolevel
}  // namespace kh
