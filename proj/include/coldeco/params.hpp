// params.hpp — physical inputs, derived coupling constants, reduced units

#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "coldeco/constants.hpp"
#include "coldeco/errors.hpp"

namespace coldeco {

enum class BathKind { condensate, free_bosons };

inline std::string to_string(BathKind k) {
    return k == BathKind::condensate ? "condensate" : "free";
}

/// Bath selector used by the decoherence kernels.
struct BathSpec {
    BathKind kind = BathKind::condensate;
    int dim = 3;               // 1 or 3
    double temperature = 0.0;  // K
};

/// All SI inputs of a run. Lengths in m, masses in kg, temperature in K,
/// densities in m^-dim. For dim == 1 the couplings and the density are
/// effective one-dimensional quantities: n0 in 1/m and the couplings (J m)
/// supplied through the override fields.
struct PhysicalParams {
    double m_impurity = constants::mass_na23;    // m_A
    double m_bath = constants::mass_rb87;        // m_B
    double a_bath = 99.0 * constants::bohr_radius;           // a_B (bath-bath)
    double a_impurity_bath = 55.0 * constants::bohr_radius;  // a_AB
    double n0 = 1e20;                            // condensate density, m^-dim
    double lattice_wavelength = 600e-9;          // lambda
    double lattice_depth = 20.0;                 // alpha = V0 / E_R
    double half_intrawell_sep = 150e-9;          // L (2L = intra-well distance)
    double half_site_sep = 300e-9;               // D (2D = site distance)
    double temperature = 0.0;                    // K
    int dim = 3;                                 // 1 or 3
    std::optional<double> sigma_override;        // Gaussian width, m
    std::optional<double> g_bath_override;           // J m^dim
    std::optional<double> g_impurity_bath_override;  // J m^dim
};

/// Quantities computed once from PhysicalParams.
struct DerivedScales {
    double g_bath = 0;           // g_B, J m^dim
    double g_impurity_bath = 0;  // g_AB, J m^dim
    double reduced_mass = 0;     // m_AB, kg
    double recoil_energy = 0;    // E_R, J
    double lattice_wavenumber = 0;  // k_L, 1/m
    double trap_omega = 0;       // well harmonic frequency, rad/s
    double sigma = 0;            // Gaussian ground-state width, m
    double sound_speed = 0;      // c_s, m/s
    double beta = 0;             // 1/(k_B T), J^-1; +inf at T = 0

    bool zero_temperature() const { return std::isinf(beta); }
};

inline void validate(const PhysicalParams& p) {
    if (!(p.m_impurity > 0)) throw ValidationError("m_impurity", "must be > 0");
    if (!(p.m_bath > 0)) throw ValidationError("m_bath", "must be > 0");
    if (!(p.a_bath >= 0)) throw ValidationError("a_bath", "must be >= 0");
    if (!(p.n0 > 0)) throw ValidationError("n0", "must be > 0");
    if (!(p.lattice_wavelength > 0)) throw ValidationError("lattice_wavelength", "must be > 0");
    if (!(p.lattice_depth > 0) && !p.sigma_override)
        throw ValidationError("lattice_depth", "must be > 0 unless sigma_override is given");
    if (!(p.half_intrawell_sep > 0)) throw ValidationError("half_intrawell_sep", "must be > 0");
    if (!(p.half_site_sep >= p.half_intrawell_sep))
        throw ValidationError("half_site_sep", "must be >= half_intrawell_sep");
    if (!(p.temperature >= 0)) throw ValidationError("temperature", "must be >= 0");
    if (p.dim != 1 && p.dim != 3) throw ValidationError("dim", "must be 1 or 3");
    if (p.sigma_override && !(*p.sigma_override > 0))
        throw ValidationError("sigma_override", "must be > 0");
    if (p.dim == 1 && (!p.g_bath_override || !p.g_impurity_bath_override))
        throw ValidationError("g_bath_override",
                              "dim = 1 requires effective 1D couplings "
                              "(g_bath_override, g_impurity_bath_override)");
}

/// Pure function of the validated inputs.
inline DerivedScales derive_scales(const PhysicalParams& p) {
    validate(p);
    using namespace constants;
    DerivedScales s;
    s.lattice_wavenumber = 2.0 * pi / p.lattice_wavelength;
    s.recoil_energy = hbar * hbar * s.lattice_wavenumber * s.lattice_wavenumber
                      / (2.0 * p.m_impurity);
    s.reduced_mass = p.m_impurity * p.m_bath / (p.m_impurity + p.m_bath);
    if (p.dim == 1) {
        s.g_bath = *p.g_bath_override;
        s.g_impurity_bath = *p.g_impurity_bath_override;
    } else {
        s.g_bath = p.g_bath_override ? *p.g_bath_override
                                     : 4.0 * pi * hbar * hbar * p.a_bath / p.m_bath;
        s.g_impurity_bath = p.g_impurity_bath_override
                                ? *p.g_impurity_bath_override
                                : 2.0 * pi * hbar * hbar * p.a_impurity_bath / s.reduced_mass;
    }
    // hbar omega = 2 sqrt(alpha) E_R: harmonic bottom of a sin^2 lattice well
    s.trap_omega = 2.0 * std::sqrt(p.lattice_depth) * s.recoil_energy / hbar;
    s.sigma = p.sigma_override ? *p.sigma_override
                               : std::sqrt(hbar / (p.m_impurity * s.trap_omega));
    s.sound_speed = std::sqrt(p.n0 * s.g_bath / p.m_bath);
    s.beta = p.temperature > 0 ? 1.0 / (boltzmann * p.temperature)
                               : std::numeric_limits<double>::infinity();
    return s;
}

/// Internal dimensionless system: lengths in 1/k_L, energies in E_R,
/// times in hbar/E_R.
struct ReducedParams {
    double k_scale = 0;   // k_L, 1/m
    double e_scale = 0;   // E_R, J
    double t_scale = 0;   // hbar / E_R, s

    // dispersion: eps(k) = eps_coef * k^2 in reduced units
    double eps_coef = 0;      // m_A / m_B
    double ng = 0;            // n0 g_B / E_R (0 for a free-boson bath)
    double beta = 0;          // beta * E_R (inf at T = 0)
    double sigma = 0;         // sigma k_L
    double half_intrawell_sep = 0;  // L k_L
    double half_site_sep = 0;       // D k_L
    double coupling = 0;      // g_AB^2 n0 k_L^dim / E_R^2
    int dim = 3;

    double wavenumber_to_reduced(double k_si) const { return k_si / k_scale; }
    double wavenumber_to_si(double k_red) const { return k_red * k_scale; }
    double energy_to_reduced(double e_si) const { return e_si / e_scale; }
    double energy_to_si(double e_red) const { return e_red * e_scale; }
    double time_to_reduced(double t_si) const { return t_si / t_scale; }
    double time_to_si(double t_red) const { return t_red * t_scale; }
    double length_to_reduced(double x_si) const { return x_si * k_scale; }
    double length_to_si(double x_red) const { return x_red / k_scale; }
};

inline ReducedParams to_reduced_units(const PhysicalParams& p, const DerivedScales& s) {
    ReducedParams r;
    r.k_scale = s.lattice_wavenumber;
    r.e_scale = s.recoil_energy;
    r.t_scale = constants::hbar / s.recoil_energy;
    r.eps_coef = p.m_impurity / p.m_bath;
    r.ng = p.n0 * s.g_bath / s.recoil_energy;
    r.beta = s.beta * s.recoil_energy;  // stays +inf at T = 0
    r.sigma = s.sigma * s.lattice_wavenumber;
    r.half_intrawell_sep = p.half_intrawell_sep * s.lattice_wavenumber;
    r.half_site_sep = p.half_site_sep * s.lattice_wavenumber;
    double kd = std::pow(s.lattice_wavenumber, p.dim);
    r.coupling = s.g_impurity_bath * s.g_impurity_bath * p.n0 * kd
                 / (s.recoil_energy * s.recoil_energy);
    r.dim = p.dim;
    return r;
}

/// Named preset: Na-23 impurities in a 600 nm lattice over a Rb-87 condensate,
/// n0 = 1e20 m^-3, alpha = 20, a_AB = 55 a0, 2L = lambda/2, D = 2L, T = 0.
inline PhysicalParams paper_sec4_params() {
    return PhysicalParams{};  // defaults are the preset
}

/// 1D companion preset: same geometry, effective line couplings obtained by
/// integrating out a transverse Gaussian of width sigma (g -> g/(2 pi sigma^2),
/// n0 -> n0 pi sigma^2). These are plain inputs; any other choice can be
/// supplied through the override fields.
inline PhysicalParams one_dim_params() {
    PhysicalParams p;
    DerivedScales s3 = derive_scales(p);
    double cross = 2.0 * constants::pi * s3.sigma * s3.sigma;
    p.dim = 1;
    p.n0 = p.n0 * constants::pi * s3.sigma * s3.sigma;
    p.g_bath_override = s3.g_bath / cross;
    p.g_impurity_bath_override = s3.g_impurity_bath / cross;
    return p;
}

} // namespace coldeco
