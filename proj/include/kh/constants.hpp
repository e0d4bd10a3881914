#pragma once

namespace kh::constants {

// CODATA 2018. SI unless noted.
inline constexpr double e_charge_C       = 1.602176634e-19;     // exact
inline constexpr double electron_mass_kg = 9.1093837015e-31;
inline constexpr double hbar_Js          = 1.054571817e-34;
inline constexpr double hbar_eVs         = 6.582119569e-16;
inline constexpr double c_m_s            = 299792458.0;         // exact
inline constexpr double eps0_F_m         = 8.8541878128e-12;
inline constexpr double bohr_radius_m    = 5.29177210903e-11;
inline constexpr double hartree_J        = 4.3597447222071e-18;
inline constexpr double hartree_eV       = 27.211386245988;
inline constexpr double atomic_time_s    = 2.4188843265857e-17;
inline constexpr double atomic_field_V_m = 5.14220674763e11;
inline constexpr double hc_eV_nm         = 1239.841984332;      // h*c

// Intensity of a field of 1 a.u.: (1/2) eps0 c E_au^2, in W/cm^2.
inline constexpr double atomic_intensity_W_cm2 =
    0.5 * eps0_F_m * c_m_s * atomic_field_V_m * atomic_field_V_m * 1e-4;

inline constexpr double pi = 3.14159265358979323846;

}  // namespace kh::constants
