#include "kh/scenario.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "kh/constants.hpp"
#include "kh/errors.hpp"

namespace kh {

using nlohmann::json;

namespace {

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    std::string unknown;
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key())) unknown += (unknown.empty() ? "" : ", ") + it.key();
    if (!unknown.empty())
        throw ValidationError("scenario: unknown key(s) in " + where + ": " + unknown);
}

double positive(const json& j, const std::string& key) {
    double v = j.at(key).get<double>();
    if (!(v > 0.0)) throw ValidationError("scenario: " + key + " must be > 0");
    return v;
}

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

Scenario Scenario::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& ex) {
        throw ValidationError(std::string("scenario: JSON parse failure: ") + ex.what());
    }
    check_keys(j, {"schema_version", "atom", "laser", "options"}, "top level");
    Scenario s;
    s.schema_version = j.value("schema_version", 1);
    if (s.schema_version != 1)
        throw ValidationError("scenario: unsupported schema_version " +
                              std::to_string(s.schema_version));

    if (!j.contains("atom") || !j.contains("laser"))
        throw ValidationError("scenario: atom and laser blocks are required");

    const json& a = j["atom"];
    check_keys(a, {"Z_eff", "I_B_eV"}, "atom");
    s.z_eff = positive(a, "Z_eff");
    if (a.contains("I_B_eV")) s.ionization_eV = positive(a, "I_B_eV");

    const json& l = j["laser"];
    check_keys(l, {"wavelength_nm", "photon_eV", "frequency_Hz", "omega_au", "intensity_Wcm2",
                   "field_Vm", "field_au", "phase"},
               "laser");
    int nfreq = 0, nint = 0;
    if (l.contains("wavelength_nm")) { s.wavelength_nm = positive(l, "wavelength_nm"); ++nfreq; }
    if (l.contains("photon_eV")) { s.photon_eV = positive(l, "photon_eV"); ++nfreq; }
    if (l.contains("frequency_Hz")) { s.frequency_Hz = positive(l, "frequency_Hz"); ++nfreq; }
    if (l.contains("omega_au")) { s.omega_au = positive(l, "omega_au"); ++nfreq; }
    if (l.contains("intensity_Wcm2")) { s.intensity_Wcm2 = positive(l, "intensity_Wcm2"); ++nint; }
    if (l.contains("field_Vm")) { s.field_Vm = positive(l, "field_Vm"); ++nint; }
    if (l.contains("field_au")) { s.field_au = positive(l, "field_au"); ++nint; }
    if (nfreq != 1)
        throw ValidationError("scenario: exactly one frequency spec required, found " +
                              std::to_string(nfreq));
    if (nint != 1)
        throw ValidationError("scenario: exactly one intensity spec required, found " +
                              std::to_string(nint));
    s.phase = l.value("phase", 0.0);

    if (j.contains("options")) {
        const json& o = j["options"];
        check_keys(o,
                   {"max_n", "truncation", "tolerance", "grid", "rydberg_n0",
                    "paper_reference_ratio", "tl_splitting", "tl_drive", "tl_omega", "tl_a1_re",
                    "tl_a1_im", "tl_a2_re", "tl_a2_im"},
                   "options");
        s.max_n = o.value("max_n", s.max_n);
        s.truncation = o.value("truncation", s.truncation);
        s.tolerance = o.value("tolerance", s.tolerance);
        s.grid = o.value("grid", s.grid);
        if (o.contains("rydberg_n0")) s.rydberg_n0 = o["rydberg_n0"].get<int>();
        if (o.contains("paper_reference_ratio"))
            s.paper_reference_ratio = o["paper_reference_ratio"].get<double>();
        s.tl_splitting = o.value("tl_splitting", s.tl_splitting);
        s.tl_drive = o.value("tl_drive", s.tl_drive);
        s.tl_omega = o.value("tl_omega", s.tl_omega);
        s.tl_a1_re = o.value("tl_a1_re", s.tl_a1_re);
        s.tl_a1_im = o.value("tl_a1_im", s.tl_a1_im);
        s.tl_a2_re = o.value("tl_a2_re", s.tl_a2_re);
        s.tl_a2_im = o.value("tl_a2_im", s.tl_a2_im);
        if (s.max_n < 1 || s.truncation < 1 || s.grid < 2 || !(s.tolerance > 0))
            throw ValidationError("scenario: options out of range");
    }
    return s;
}

Scenario Scenario::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("scenario: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

HydrogenicAtom Scenario::atom() const {
    if (ionization_eV)
        return HydrogenicAtom::from_z_and_ip(z_eff, *ionization_eV / constants::hartree_eV);
    return HydrogenicAtom::from_z(z_eff);
}

LaserField Scenario::laser() const {
    double w = 0.0;
    if (wavelength_nm) w = LaserField::omega_from_nm(*wavelength_nm);
    if (photon_eV) w = LaserField::omega_from_eV(*photon_eV);
    if (frequency_Hz) w = LaserField::omega_from_Hz(*frequency_Hz);
    if (omega_au) w = *omega_au;
    double E = 0.0;
    if (intensity_Wcm2) E = LaserField::field_from_W_cm2(*intensity_Wcm2);
    if (field_Vm) E = LaserField::field_from_V_m(*field_Vm);
    if (field_au) E = *field_au;
    return LaserField::from_au(E, w, phase);
}

std::string Scenario::resolved_json() const {
    json j;
    j["schema_version"] = schema_version;
    j["atom"]["Z_eff"] = z_eff;
    HydrogenicAtom a = atom();
    j["atom"]["I_B_eV"] = ionization_eV ? *ionization_eV : a.ionization_au * constants::hartree_eV;
    LaserField l = laser();
    j["resolved_au"]["omega"] = fmt12(l.omega_au);
    j["resolved_au"]["field"] = fmt12(l.field_au);
    j["resolved_au"]["I_B"] = fmt12(a.ionization_au);
    if (wavelength_nm) j["laser"]["wavelength_nm"] = *wavelength_nm;
    if (photon_eV) j["laser"]["photon_eV"] = *photon_eV;
    if (frequency_Hz) j["laser"]["frequency_Hz"] = *frequency_Hz;
    if (omega_au) j["laser"]["omega_au"] = *omega_au;
    if (intensity_Wcm2) j["laser"]["intensity_Wcm2"] = *intensity_Wcm2;
    if (field_Vm) j["laser"]["field_Vm"] = *field_Vm;
    if (field_au) j["laser"]["field_au"] = *field_au;
    j["laser"]["phase"] = phase;
    j["options"]["max_n"] = max_n;
    j["options"]["truncation"] = truncation;
    j["options"]["tolerance"] = tolerance;
    j["options"]["grid"] = grid;
    if (rydberg_n0) j["options"]["rydberg_n0"] = *rydberg_n0;
    if (paper_reference_ratio) j["options"]["paper_reference_ratio"] = *paper_reference_ratio;
    return j.dump();
}

}  // namespace kh
