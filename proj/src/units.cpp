#include "kh/units.hpp"

#include <cmath>
#include <string>

#include "kh/errors.hpp"

namespace kh {

using namespace constants;

LaserField LaserField::from_au(double E_au, double w_au, double phase) {
    if (E_au < 0.0) throw ValidationError("laser field strength must be >= 0");
    if (!(w_au > 0.0)) throw ValidationError("laser frequency must be > 0");
    double p = std::fmod(phase, 2.0 * pi);
    if (p < 0.0) p += 2.0 * pi;
    return LaserField{E_au, w_au, p};
}

double LaserField::field_from_V_m(double E_V_m) {
    return E_V_m / atomic_field_V_m;
}

double LaserField::field_from_W_cm2(double I_W_cm2) {
    if (I_W_cm2 < 0.0) throw ValidationError("intensity must be >= 0");
    return std::sqrt(I_W_cm2 / atomic_intensity_W_cm2);
}

double LaserField::omega_from_Hz(double f_Hz) {
    return 2.0 * pi * f_Hz * atomic_time_s;
}

double LaserField::omega_from_eV(double photon_eV) {
    return photon_eV / hartree_eV;
}

double LaserField::omega_from_nm(double lambda_nm) {
    return (hc_eV_nm / lambda_nm) / hartree_eV;
}

HydrogenicAtom HydrogenicAtom::from_z(double z_eff) {
    return from_z_and_ip(z_eff, 0.5 * z_eff * z_eff);
}

HydrogenicAtom HydrogenicAtom::from_z_and_ip(double z_eff, double ionization_au) {
    if (!(z_eff > 0.0)) throw ValidationError("Z_eff must be > 0");
    if (!(ionization_au > 0.0)) throw ValidationError("ionization energy must be > 0");
    return HydrogenicAtom{z_eff, ionization_au, 1.0 / z_eff};
}

RegimeReport derive_regime(const LaserField& laser, const HydrogenicAtom& atom,
                           double kick_threshold) {
    if (!(laser.omega_au > 0.0))
        throw ValidationError("derive_regime: omega = 0, quiver amplitude undefined");

    RegimeReport r;
    const double w = laser.omega_au, E = laser.field_au;
    r.ponderomotive_au = E * E / (4.0 * w * w);
    r.quiver_au = E / (w * w);

    // smallest integer with (2 n0 + 1) w >= I_B
    int n0 = static_cast<int>(std::ceil((atom.ionization_au / w - 1.0) / 2.0));
    if (n0 < 0) n0 = 0;
    r.cutoff_index = n0;

    if (E == 0.0) {
        r.zero_field = true;
        return r;
    }
    r.keldysh = std::sqrt(atom.ionization_au / (2.0 * r.ponderomotive_au));
    r.epsilon = (2.0 / pi) * (atom.bohr_au / r.quiver_au);
    r.ratio_quiver_bohr = r.quiver_au / atom.bohr_au;
    r.tunnelling = *r.keldysh < 1.0;
    r.kick_regime = *r.epsilon < kick_threshold;
    return r;
}

SqueezingShift squeezing_shift(double omega_au, double mode_volume_au3) {
    if (!(mode_volume_au3 > 0.0)) throw ValidationError("mode volume must be > 0");
    double Om = std::sqrt(omega_au * omega_au + 4.0 * pi / mode_volume_au3);
    return SqueezingShift{Om, (Om - omega_au) / omega_au};
}

RydbergKickRatio rydberg_kick_ratio(int n0, double field_V_m, double f_Hz,
                                    std::optional<double> paper_value) {
    if (n0 < 1) throw ValidationError("rydberg_kick_ratio: n0 >= 1 required");
    if (!(field_V_m > 0.0) || !(f_Hz > 0.0))
        throw ValidationError("rydberg_kick_ratio: field and frequency must be > 0");

    const double w = 2.0 * pi * f_Hz;
    const double lambda_L = e_charge_C * field_V_m / (electron_mass_kg * w * w);
    const double n0sq = double(n0) * double(n0);

    RydbergKickRatio out;
    out.ratio_geometric = n0sq * bohr_radius_m / lambda_L;

    // Energetic form with I_B = hbar^2/(2 m a_B^2), the ground-state value
    // consistent with the geometric form.
    const double I_B = hbar_Js * hbar_Js /
                       (2.0 * electron_mass_kg * bohr_radius_m * bohr_radius_m);
    const double U_p = e_charge_C * e_charge_C * field_V_m * field_V_m /
                       (4.0 * electron_mass_kg * w * w);
    out.ratio_energetic = n0sq * hbar_Js * w / std::sqrt(8.0 * I_B * U_p);

    if (paper_value) {
        out.paper_value = paper_value;
        out.discrepancy_factor = out.ratio_geometric / *paper_value;
    }
    return out;
}

}  // namespace kh
