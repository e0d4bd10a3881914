#pragma once

#include <map>
#include <optional>
#include <string>

#include "kh/units.hpp"

namespace kh {

// Parsed and validated scenario file (JSON, versioned schema). Exactly one
// frequency spec and one intensity spec must be present; unknown keys are a
// hard error.
struct Scenario {
    int schema_version = 1;

    double z_eff = 1.0;
    std::optional<double> ionization_eV;

    std::optional<double> wavelength_nm;
    std::optional<double> photon_eV;
    std::optional<double> frequency_Hz;
    std::optional<double> omega_au;

    std::optional<double> intensity_Wcm2;
    std::optional<double> field_Vm;
    std::optional<double> field_au;

    double phase = 0.0;

    // command options (overridable from the CLI)
    int max_n = 4;
    int truncation = 32;
    double tolerance = 1e-10;
    int grid = 2048;
    std::optional<int> rydberg_n0;
    std::optional<double> paper_reference_ratio;
    double tl_splitting = 0.2;
    double tl_drive = 20.0;
    double tl_omega = 1.0;
    double tl_a1_re = 1.0, tl_a1_im = 0.0, tl_a2_re = 0.0, tl_a2_im = 0.0;

    HydrogenicAtom atom() const;
    LaserField laser() const;
    std::string resolved_json() const;  // canonical form embedded in artifacts

    static Scenario from_file(const std::string& path);
    static Scenario from_json_text(const std::string& text);
};

}  // namespace kh
