#pragma once

#include <vector>

#include "kh/exec.hpp"
#include "kh/specfun.hpp"
#include "kh/units.hpp"

namespace kh {

struct ChannelRate {
    int order = 0;        // harmonic order 2n+1
    double rate_au = 0.0;
};

struct DecayResult {
    double gamma_au = 0.0;
    double gamma_eV = 0.0;
    double lifetime_fs = 0.0;          // hbar/Gamma
    double stark_shift_half_au = 0.0;  // delta w / 2 (0 unless the PV part ran)
    double tail_estimate_au = 0.0;     // bound on the dropped n > n_max channels
    std::vector<ChannelRate> channels;
};

struct HarmonicLine {
    int order = 0;              // 2n+1
    double amplitude_au = 0.0;  // envelope amplitude (a.u. dipole)
    double center_au = 0.0;     // (2n+1) w + delta w/2
    double hwhm_au = 0.0;       // Gamma/2, the resonance half-width
};

struct DipoleTimeSeries {
    std::vector<double> t;
    std::vector<double> x;       // <x>(t)
    double gamma_au = 0.0;       // envelope e^{-Gamma |t|}
    double stark_shift_half_au = 0.0;
    std::vector<HarmonicLine> lines;
};

namespace ww {

double lifetime_fs_from_gamma_eV(double gamma_eV);
double gamma_eV_from_lifetime_fs(double lifetime_fs);

// Gamma = (256/3 pi^2)(w^2/U_p) gamma_K^2 sum_{n >= n0} [I_B/((2n+1)w)]^{5/2}
//         [1 - I_B/((2n+1)w)]^{3/2}
DecayResult gamma_closed(const HydrogenicAtom& atom, const LaserField& laser, int n_max);

// Same decay rate assembled from the plane-wave dipole and the channel
// delta-constraint, with the angular integral done by quadrature; the
// principal-value companion gives the a.c. Stark shift delta w/2 (channel
// sum truncated at n_max like the rate).
DecayResult gamma_numeric(const HydrogenicAtom& atom, const LaserField& laser, int n_max,
                          bool with_stark_shift = true, Exec exec = Exec::parallel);

// amplitude_n = (2/pi) 2^{17/2} 3^{-9/2} (Z e^2 w / U_p^2) gamma_K^5
//               x_n^{3/2}/(x_n + 2 gamma_K^2/3)^5,  x_n = ((2n+1)w - I_B)/(3U_p)
HarmonicLine harmonic_envelope(const HydrogenicAtom& atom, const LaserField& laser, int n);

// x_n value of the continuous envelope maximum, 2 gamma_K^2 / 7
double envelope_peak_x(const HydrogenicAtom& atom, const LaserField& laser);

DipoleTimeSeries dipole_time_series(const HydrogenicAtom& atom, const LaserField& laser,
                                    const std::vector<double>& grid, int n_max,
                                    Exec exec = Exec::parallel);

// time grid spanning >= 5 e-folds of Gamma with >= 40 samples per period
std::vector<double> default_time_grid(const LaserField& laser, double gamma_au,
                                      int samples_per_period = 40, double efolds = 5.0);

// Fourier transform F(W) = int <x>(t) cos(W t) dt over the symmetric window
double spectrum_at(const DipoleTimeSeries& s, double w_probe);

// Omega_R = 2 eps gamma_K (2k+1) w |<m| x/a_B |n>|
double rabi_frequency(const BoundState& m, const BoundState& n, int k,
                      const HydrogenicAtom& atom, const LaserField& laser);

// <m| x |n> along the polarization axis, by radial x angular quadrature
double bound_dipole_element(const BoundState& m, const BoundState& n,
                            const HydrogenicAtom& atom);

}  // namespace ww
}  // namespace kh
