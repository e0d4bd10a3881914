#pragma once

#include <optional>

#include "kh/constants.hpp"

namespace kh {

// Monochromatic linearly polarized field, polarization along Cartesian x.
// Everything is stored in Hartree atomic units; the static factories do the
// SI conversions at the boundary.
struct LaserField {
    double field_au = 0.0;   // peak field strength E
    double omega_au = 0.0;   // angular frequency
    double phase = 0.0;      // polarization phase, [0, 2pi)

    static LaserField from_au(double E_au, double w_au, double phase = 0.0);
    static double field_from_V_m(double E_V_m);
    static double field_from_W_cm2(double I_W_cm2);
    static double omega_from_Hz(double f_Hz);
    static double omega_from_eV(double photon_eV);
    static double omega_from_nm(double lambda_nm);
};

struct HydrogenicAtom {
    double z_eff = 1.0;
    double ionization_au = 0.5;   // I_B, defaults to Z^2/2
    double bohr_au = 1.0;         // a_B, defaults to 1/Z

    static HydrogenicAtom from_z(double z_eff);
    static HydrogenicAtom from_z_and_ip(double z_eff, double ionization_au);
};

// Derived strong-field regime quantities.  keldysh/epsilon are absent when
// the field vanishes (quiver amplitude zero) rather than being +inf.
struct RegimeReport {
    double ponderomotive_au = 0.0;       // U_p = E^2/(4 w^2)
    double quiver_au = 0.0;              // lambda_L = E/w^2
    std::optional<double> keldysh;       // sqrt(I_B/(2 U_p))
    std::optional<double> epsilon;       // (2/pi)(a_B/lambda_L)
    std::optional<double> ratio_quiver_bohr;
    int cutoff_index = 0;                // smallest n0 with (2 n0+1) w >= I_B
    bool tunnelling = false;             // keldysh < 1
    bool kick_regime = false;            // epsilon < threshold
    bool zero_field = false;
};

RegimeReport derive_regime(const LaserField& laser, const HydrogenicAtom& atom,
                           double kick_threshold = 0.1);

// Single-mode frequency with the quadratic-term correction,
// Omega = sqrt(w^2 + 4 pi e^2/(m V)); a.u. in, a.u. out.
struct SqueezingShift {
    double omega_shifted;
    double relative_shift;   // (Omega - w)/w
};
SqueezingShift squeezing_shift(double omega_au, double mode_volume_au3);

// n0^2 a_B / lambda_L for a Rydberg state in a microwave field, evaluated in
// SI from CODATA constants, in the two algebraically equivalent forms.
// `paper_value`, when given, is echoed with the reconstruction/paper factor.
struct RydbergKickRatio {
    double ratio_geometric;        // n0^2 a_B / lambda_L
    double ratio_energetic;        // n0^2 w / sqrt(8 I_B U_p)
    std::optional<double> paper_value;
    std::optional<double> discrepancy_factor;  // ratio_geometric / paper_value
};
RydbergKickRatio rydberg_kick_ratio(int n0, double field_V_m, double f_Hz,
                                    std::optional<double> paper_value = std::nullopt);

}  // namespace kh
