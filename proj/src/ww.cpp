#include "kh/ww.hpp"

#include <cmath>
#include <string>

#include "kh/constants.hpp"
#include "kh/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kh::ww {

using namespace constants;

double lifetime_fs_from_gamma_eV(double gamma_eV) {
    if (!(gamma_eV > 0.0)) throw ValidationError("lifetime: Gamma must be > 0");
    return hbar_eVs / gamma_eV * 1e15;
}

double gamma_eV_from_lifetime_fs(double lifetime_fs) {
    if (!(lifetime_fs > 0.0)) throw ValidationError("lifetime must be > 0");
    return hbar_eVs / (lifetime_fs * 1e-15);
}

namespace {

struct Frame {
    double w, Up, gamma_K, eps, I_B, Z;
    int n0;
};

Frame make_frame(const HydrogenicAtom& atom, const LaserField& laser) {
    RegimeReport r = derive_regime(laser, atom);
    if (r.zero_field) throw RegimeError("rate: zero field has no open channels");
    return Frame{laser.omega_au, r.ponderomotive_au, *r.keldysh, *r.epsilon,
                 atom.ionization_au, atom.z_eff, r.cutoff_index};
}

void fill_common(DecayResult& d) {
    d.gamma_eV = d.gamma_au * hartree_eV;
    d.lifetime_fs = d.gamma_eV > 0.0 ? lifetime_fs_from_gamma_eV(d.gamma_eV) : 0.0;
}

}  // namespace

DecayResult gamma_closed(const HydrogenicAtom& atom, const LaserField& laser, int n_max) {
    Frame f = make_frame(atom, laser);
    if (n_max < f.n0)
        throw RegimeError("gamma_closed: n_max " + std::to_string(n_max) +
                          " below the first open channel n0 = " + std::to_string(f.n0));
    DecayResult d;
    const double pref = 256.0 / (3.0 * pi * pi) * f.w * f.w / f.Up * f.gamma_K * f.gamma_K;
    for (int n = f.n0; n <= n_max; ++n) {
        double u = f.I_B / ((2.0 * n + 1.0) * f.w);  // <= 1 for open channels
        double rate = u > 1.0 ? 0.0 : pref * std::pow(u, 2.5) * std::pow(1.0 - u, 1.5);
        d.channels.push_back({2 * n + 1, rate});
        d.gamma_au += rate;
    }
    // channels fall off as n^{-5/2}; integral bound on the dropped tail
    d.tail_estimate_au =
        pref * std::pow(f.I_B / f.w, 2.5) / (3.0 * std::pow(2.0 * n_max + 3.0, 1.5));
    fill_common(d);
    return d;
}

namespace {

// angular integral of the plane-wave dipole at fixed |p|, by quadrature
double dipole_angular_integral(const HydrogenicAtom& atom, double p_mag, int n_theta,
                               int n_phi) {
    specfun::GaussLegendre gl(n_theta);
    double sum = 0.0;
    for (int i = 0; i < n_theta; ++i) {
        double u = gl.x[i];
        double st = std::sqrt(std::max(0.0, 1.0 - u * u));
        double inner = 0.0;
        for (int j = 0; j < n_phi; ++j) {
            double phi = 2.0 * pi * j / n_phi;
            std::array<double, 3> p{p_mag * st * std::cos(phi), p_mag * st * std::sin(phi),
                                    p_mag * u};
            inner += specfun::planewave_dipole_sq(p, atom);
        }
        sum += gl.w[i] * inner * (2.0 * pi / n_phi);
    }
    return sum;
}

}  // namespace

DecayResult gamma_numeric(const HydrogenicAtom& atom, const LaserField& laser, int n_max,
                          bool with_stark_shift, Exec exec) {
    Frame f = make_frame(atom, laser);
    if (n_max < f.n0)
        throw RegimeError("gamma_numeric: n_max below the first open channel n0 = " +
                          std::to_string(f.n0));
    DecayResult d;
    const double front = f.eps * f.eps * f.gamma_K * f.gamma_K * f.w * f.w * f.Z * f.Z;

    const int n_ch = n_max - f.n0 + 1;
    std::vector<ChannelRate> ch(n_ch);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
    for (int idx = 0; idx < n_ch; ++idx) {
        int n = f.n0 + idx;
        double W = (2.0 * n + 1.0) * f.w - f.I_B;  // final kinetic energy
        double rate = 0.0;
        if (W > 0.0) {
            double p_n = std::sqrt(2.0 * W);
            double ang = dipole_angular_integral(atom, p_n, 48, 32);
            // 2 pi (front/(2 pi)^3) (2n+1)^2 p_n * angular
            rate = 2.0 * pi * front / std::pow(2.0 * pi, 3) * (2.0 * n + 1.0) *
                   (2.0 * n + 1.0) * p_n * ang;
        }
        ch[idx] = {2 * n + 1, rate};
    }
    for (auto& c : ch) {
        d.channels.push_back(c);
        d.gamma_au += c.rate_au;
    }

    if (with_stark_shift) {
        // delta w/2 = front/(2 pi)^3 sum_k (2k+1)^2 P int d^3p D(p)/((2k+1)w - I_B - p^2/2)
        double shift = 0.0;
        for (int n = 0; n <= n_max; ++n) {
            double W = (2.0 * n + 1.0) * f.w - f.I_B;
            auto radial = [&](double p) {
                double ang = dipole_angular_integral(atom, p, 32, 24);
                return p * p * ang / (W - 0.5 * p * p);
            };
            const double p_max = 8.0 * f.Z + (W > 0.0 ? 4.0 * std::sqrt(2.0 * W) : 0.0);
            double I = 0.0;
            if (W <= 0.0) {
                I = specfun::integrate(radial, 0.0, p_max, 1e-9);
            } else {
                // symmetric excision around the pole, Richardson in the radius
                double p_pole = std::sqrt(2.0 * W);
                auto pv = [&](double delta) {
                    double a = specfun::integrate(radial, 0.0, p_pole - delta, 1e-9);
                    double b = specfun::integrate(radial, p_pole + delta,
                                                  std::max(p_max, p_pole + 4.0 * delta), 1e-9);
                    return a + b;
                };
                double d1 = pv(1e-3 * p_pole), d2 = pv(5e-4 * p_pole);
                I = 2.0 * d2 - d1;
            }
            shift += (2.0 * n + 1.0) * (2.0 * n + 1.0) * I;
        }
        d.stark_shift_half_au = front / std::pow(2.0 * pi, 3) * shift;
    }
    d.tail_estimate_au = gamma_closed(atom, laser, n_max).tail_estimate_au;
    fill_common(d);
    return d;
}

HarmonicLine harmonic_envelope(const HydrogenicAtom& atom, const LaserField& laser, int n) {
    Frame f = make_frame(atom, laser);
    if (n < f.n0)
        throw RegimeError("harmonic_envelope: order " + std::to_string(2 * n + 1) +
                          " is below the cutoff n0 = " + std::to_string(f.n0));
    HarmonicLine h;
    h.order = 2 * n + 1;
    const double x_n = ((2.0 * n + 1.0) * f.w - f.I_B) / (3.0 * f.Up);
    const double c = 2.0 * f.gamma_K * f.gamma_K / 3.0;
    const double pref = (2.0 / pi) * std::pow(2.0, 8.5) / std::pow(3.0, 4.5) * f.Z * f.w /
                        (f.Up * f.Up) * std::pow(f.gamma_K, 5);
    h.amplitude_au = x_n <= 0.0 ? 0.0 : pref * std::pow(x_n, 1.5) / std::pow(x_n + c, 5);
    h.center_au = (2.0 * n + 1.0) * f.w;  // + delta w/2 once known
    return h;
}

double envelope_peak_x(const HydrogenicAtom& atom, const LaserField& laser) {
    Frame f = make_frame(atom, laser);
    return 2.0 * f.gamma_K * f.gamma_K / 7.0;
}

std::vector<double> default_time_grid(const LaserField& laser, double gamma_au,
                                      int samples_per_period, double efolds) {
    if (!(gamma_au > 0.0)) throw ValidationError("default_time_grid: Gamma > 0 required");
    const double T = 2.0 * pi / laser.omega_au;
    const double t_max = efolds / gamma_au;
    const double dt = T / samples_per_period;
    long n = static_cast<long>(std::ceil(t_max / dt));
    std::vector<double> g;
    g.reserve(2 * n + 1);
    for (long i = -n; i <= n; ++i) g.push_back(i * dt);
    return g;
}

DipoleTimeSeries dipole_time_series(const HydrogenicAtom& atom, const LaserField& laser,
                                    const std::vector<double>& grid, int n_max, Exec exec) {
    Frame f = make_frame(atom, laser);
    DecayResult rate = gamma_numeric(atom, laser, std::max(n_max, f.n0), true, exec);

    DipoleTimeSeries s;
    s.t = grid;
    s.gamma_au = rate.gamma_au;
    s.stark_shift_half_au = rate.stark_shift_half_au;
    for (int n = f.n0; n <= n_max; ++n) {
        HarmonicLine h = harmonic_envelope(atom, laser, n);
        h.center_au += s.stark_shift_half_au;
        h.hwhm_au = 0.5 * rate.gamma_au;
        s.lines.push_back(h);
    }
    s.x.resize(grid.size());
    const long n_pts = static_cast<long>(grid.size());
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (long i = 0; i < n_pts; ++i) {
        const double t = grid[i];
        double v = 0.0;
        for (const auto& h : s.lines) v += h.amplitude_au * std::cos(h.center_au * t);
        s.x[i] = v * std::exp(-s.gamma_au * std::abs(t));
    }
    return s;
}

double spectrum_at(const DipoleTimeSeries& s, double w_probe) {
    // cosine transform over the stored window (series is even up to the
    // common line phase; trapezoid on the uniform grid)
    double acc = 0.0;
    for (size_t i = 0; i + 1 < s.t.size(); ++i) {
        double h = s.t[i + 1] - s.t[i];
        acc += 0.5 * h *
               (s.x[i] * std::cos(w_probe * s.t[i]) + s.x[i + 1] * std::cos(w_probe * s.t[i + 1]));
    }
    return acc;
}

double bound_dipole_element(const BoundState& m, const BoundState& n,
                            const HydrogenicAtom& atom) {
    // <m| r sin(theta) cos(phi) |n>; x = r sin(theta) cos(phi) connects
    // lz differing by exactly 1, and the phi integral of e^{i dlz phi} cos(phi)
    // equals pi there
    if (std::abs(m.lz - n.lz) != 1) return 0.0;
    if ((m.l + n.l) % 2 == 0) return 0.0;  // parity
    const double Z = atom.z_eff;
    auto fr = [&](double r) {
        return specfun::hydrogen_R(m, Z, r) * specfun::hydrogen_R(n, Z, r) * r * r * r;
    };
    const double r_max = 2.0 * (m.n + n.n) * (m.n + n.n) / Z + 40.0 / Z;
    double radial = specfun::integrate(fr, 0.0, r_max, 1e-10);
    specfun::GaussLegendre gl(96);
    double ang = 0.0;
    for (size_t i = 0; i < gl.x.size(); ++i) {
        double u = gl.x[i];
        double st = std::sqrt(std::max(0.0, 1.0 - u * u));
        ang += gl.w[i] * specfun::spherical_harmonic_theta(m.l, m.lz, u) *
               specfun::spherical_harmonic_theta(n.l, n.lz, u) * st;
    }
    return radial * ang * pi;
}

double rabi_frequency(const BoundState& m, const BoundState& n, int k,
                      const HydrogenicAtom& atom, const LaserField& laser) {
    if (k < 0) throw ValidationError("rabi_frequency: k >= 0");
    Frame f = make_frame(atom, laser);
    double dip = std::abs(bound_dipole_element(m, n, atom)) / atom.bohr_au;
    return 2.0 * f.eps * f.gamma_K * (2.0 * k + 1.0) * f.w * dip;
}

}  // namespace kh::ww
