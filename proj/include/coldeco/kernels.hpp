// kernels.hpp — decoherence exponents and spectral density by radial quadrature

#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "coldeco/coupling.hpp"
#include "coldeco/params.hpp"
#include "coldeco/quadrature.hpp"
#include "coldeco/threading.hpp"

namespace coldeco::kernels {

using coupling::Geometry;
using coupling::PseudospinConfig;
using coupling::Structure;
using quadrature::QuadratureSpec;

/// Everything a kernel evaluation needs, in reduced units
/// (lengths 1/k_L, energies E_R, times hbar/E_R).
struct KernelModel {
    ReducedParams red;      // ng already zeroed for a free-boson bath
    Geometry geometry_red;  // distances premultiplied by k_L
    BathKind bath = BathKind::condensate;
    QuadratureSpec quad;

    double k_max() const { return quad.k_max_over_sigma / red.sigma; }
};

inline KernelModel make_kernel_model(const PhysicalParams& p, const DerivedScales& s,
                                     const BathSpec& bath, int n_sites = 2,
                                     QuadratureSpec quad = {}) {
    if (bath.dim != p.dim)
        throw ValidationError("dim", "bath dimension must match the parameter set");
    PhysicalParams pt = p;
    pt.temperature = bath.temperature;
    KernelModel m;
    m.red = to_reduced_units(pt, derive_scales(pt));
    if (bath.kind == BathKind::free_bosons) m.red.ng = 0.0;
    m.bath = bath.kind;
    m.quad = quad;
    Geometry gsi = Geometry::from_params(p, s, n_sites);
    m.geometry_red = gsi;
    m.geometry_red.half_intrawell_sep = gsi.half_intrawell_sep * m.red.k_scale;
    m.geometry_red.half_site_sep = gsi.half_site_sep * m.red.k_scale;
    m.geometry_red.sigma = gsi.sigma * m.red.k_scale;
    for (auto& x : m.geometry_red.sites) x *= m.red.k_scale;
    return m;
}

struct KernelResult {
    double value = 0;
    double abs_error = 0;
};

namespace detail {

inline double bogo_energy_red(const ReducedParams& r, double k) {
    const double e = r.eps_coef * k * k;
    return std::sqrt(e * (e + 2.0 * r.ng));
}

/// (|u|-|v|)^2 = eps/E, stably as sqrt(eps/(eps + 2 ng)).
inline double uv_red(const ReducedParams& r, double k) {
    if (r.ng == 0.0) return 1.0;
    if (k == 0.0) return 0.0;
    const double e = r.eps_coef * k * k;
    return std::sqrt(e / (e + 2.0 * r.ng));
}

/// coth(x) = 1 + 2/expm1(2x); exactly 1 at T = 0.
inline double thermal_factor(double beta_red, double energy_red) {
    if (std::isinf(beta_red)) return 1.0;
    const double x = beta_red * energy_red;
    if (x <= 0) return std::numeric_limits<double>::infinity();
    if (x > 36.0) return 1.0;  // 2/expm1(72) < 1e-31
    return 1.0 + 2.0 / std::expm1(x);
}

/// x - sin x without cancellation for small x.
inline double x_minus_sin(double x) {
    const double ax = std::abs(x);
    if (ax < 1e-2) {
        const double x2 = x * x;
        return x * x2 * (1.0 / 6.0) * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0));
    }
    return x - std::sin(x);
}

inline double phase_at(const ReducedParams& r, double k, double tau, double r_max) {
    return bogo_energy_red(r, k) * tau + r_max * k;
}

/// Panel edges: combined oscillation budget of the time factor exp(iEt) and
/// the longest structure distance. The dispersion is inverted analytically.
inline std::vector<double> oscillation_edges(const KernelModel& m, double tau,
                                             double r_max) {
    const auto& r = m.red;
    const double kmax = m.k_max();
    const double budget = m.quad.phase_per_panel;
    std::vector<double> edges_t{0.0, kmax};
    if (tau > 0) {
        const double phi_max = bogo_energy_red(r, kmax) * tau;
        auto inv = [&r, tau](double p) {
            const double E = p / tau;
            const double e = -r.ng + std::sqrt(r.ng * r.ng + E * E);
            return std::sqrt(e / r.eps_coef);
        };
        edges_t = quadrature::phase_edges(kmax, phi_max, inv, budget);
    }
    if (r_max * kmax > budget) {
        auto edges_s = quadrature::uniform_edges(kmax, budget / r_max);
        return quadrature::merge_edges(edges_t, edges_s);
    }
    return edges_t;
}

enum class TimeWeight {
    decay,      // 2 sin^2(E tau/2)/E^2 * coth(beta E/2)
    plateau,    // coth(beta E/2)/E^2       (long-time average of decay)
    phase_full, // (E tau - sin E tau)/E^2  (evaluated directly; small tau)
    phase_lin,  // tau/E
    phase_osc   // -sin(E tau)/E^2
};

inline double time_weight(TimeWeight w, double E, double tau, double beta_red) {
    switch (w) {
        case TimeWeight::decay: {
            const double s = coupling::Structure::sinc(0.5 * E * tau);
            return 0.5 * tau * tau * s * s * thermal_factor(beta_red, 0.5 * E);
        }
        case TimeWeight::plateau:
            return thermal_factor(beta_red, 0.5 * E) / (E * E);
        case TimeWeight::phase_full:
            return x_minus_sin(E * tau) / (E * E);
        case TimeWeight::phase_lin:
            return tau / E;
        case TimeWeight::phase_osc:
            return -std::sin(E * tau) / (E * E);
    }
    return 0;
}

inline double eval_line_even(const Structure& st, double k) {
    // sin terms integrate to zero over the symmetric 1D measure
    double v = 0;
    for (const auto& t : st.cos_terms) v += t.weight * std::cos(k * t.distance);
    return v;
}

/// Radial integral with the common weight k^{d-1} (eps/E) e^{-sigma^2 k^2/2}
/// times the requested time factor and structure factor, including the
/// continuum-limit prefactor.
inline KernelResult eval_radial(const KernelModel& m, const Structure& st,
                                TimeWeight w, double tau) {
    const auto& r = m.red;
    const bool sphere = (r.dim == 3);
    auto integrand = [&](double k) {
        const double E = bogo_energy_red(r, k);
        if (E == 0.0) return 0.0;
        const double uv = uv_red(r, k);
        const double gauss = std::exp(-0.5 * r.sigma * r.sigma * k * k);
        const double s = sphere ? st.eval_sphere(k) : eval_line_even(st, k);
        const double measure = sphere ? k * k : 1.0;
        return measure * uv * gauss * time_weight(w, E, tau, r.beta) * s;
    };
    const double pref = sphere ? r.coupling / (4.0 * constants::pi * constants::pi)
                               : r.coupling / constants::pi;
    const bool oscillatory = (w == TimeWeight::decay || w == TimeWeight::phase_osc ||
                              w == TimeWeight::phase_full);
    auto edges = oscillation_edges(m, oscillatory ? tau : 0.0, st.max_distance());
    auto q = quadrature::integrate_adaptive(integrand, edges, m.quad.rel_tol,
                                            m.quad.abs_floor, m.quad.max_subdivisions);
    return {pref * q.value, std::abs(pref) * q.abs_error};
}

} // namespace detail

/// Decay exponent for an arbitrary configuration pair (dimensionless).
inline KernelResult gamma_general(const KernelModel& m, const PseudospinConfig& n,
                                  const PseudospinConfig& mcfg, double t_seconds) {
    if (t_seconds < 0) throw ValidationError("t", "time must be >= 0");
    Structure st = coupling::gamma_structure(m.geometry_red, n, mcfg);
    if (st.cos_terms.empty() || t_seconds == 0.0) return {0.0, 0.0};
    return detail::eval_radial(m, st, detail::TimeWeight::decay,
                               m.red.time_to_reduced(t_seconds));
}

/// Same integral with sin^2 replaced by its long-time average 1/2.
inline KernelResult gamma_plateau(const KernelModel& m, const PseudospinConfig& n,
                                  const PseudospinConfig& mcfg) {
    Structure st = coupling::gamma_structure(m.geometry_red, n, mcfg);
    if (st.cos_terms.empty()) return {0.0, 0.0};
    return detail::eval_radial(m, st, detail::TimeWeight::plateau, 0.0);
}

/// Single-impurity exponent, 3D.
inline KernelResult gamma0_3d(const KernelModel& m, double t_seconds) {
    if (m.red.dim != 3) throw ValidationError("dim", "gamma0_3d needs dim == 3");
    Geometry g1 = m.geometry_red;
    g1.sites = {0.0};
    if (t_seconds < 0) throw ValidationError("t", "time must be >= 0");
    if (t_seconds == 0) return {0.0, 0.0};
    Structure st = coupling::gamma_structure(g1, {0}, {1});
    return detail::eval_radial(m, st, detail::TimeWeight::decay,
                               m.red.time_to_reduced(t_seconds));
}

struct GammaPair {
    KernelResult gamma1, gamma2, delta;
};

/// Two-impurity exponents and the collective deviation, 3D. delta is
/// integrated from its own term list; Gamma1 = 2 Gamma0 - delta and
/// Gamma2 = 2 Gamma0 + delta then hold as testable identities.
inline GammaPair gamma12_3d(const KernelModel& m, double t_seconds) {
    if (m.red.dim != 3) throw ValidationError("dim", "gamma12_3d needs dim == 3");
    if (m.geometry_red.sites.size() != 2)
        throw ValidationError("sites", "gamma12_3d needs 2 sites");
    GammaPair out;
    out.gamma1 = gamma_general(m, {0, 0}, {1, 1}, t_seconds);
    out.gamma2 = gamma_general(m, {1, 0}, {0, 1}, t_seconds);
    if (t_seconds == 0) return out;
    Structure st = coupling::delta_structure(m.geometry_red);
    out.delta = detail::eval_radial(m, st, detail::TimeWeight::decay,
                                    m.red.time_to_reduced(t_seconds));
    return out;
}

enum class OneDKind { gamma0, gamma1, gamma2, delta };

/// One-dimensional exponents gamma_0/1/2 and their deviation delta.
inline KernelResult gamma_1d(const KernelModel& m, OneDKind kind, double t_seconds) {
    if (m.red.dim != 1) throw ValidationError("dim", "gamma_1d needs dim == 1");
    if (t_seconds < 0) throw ValidationError("t", "time must be >= 0");
    if (t_seconds == 0) return {0.0, 0.0};
    Geometry g = m.geometry_red;
    Structure st;
    switch (kind) {
        case OneDKind::gamma0:
            g.sites = {0.0};
            st = coupling::gamma_structure(g, {0}, {1});
            break;
        case OneDKind::gamma1:
            st = coupling::gamma_structure(g, {0, 0}, {1, 1});
            break;
        case OneDKind::gamma2:
            st = coupling::gamma_structure(g, {1, 0}, {0, 1});
            break;
        case OneDKind::delta:
            st = coupling::delta_structure(g);
            break;
    }
    return detail::eval_radial(m, st, detail::TimeWeight::decay,
                               m.red.time_to_reduced(t_seconds));
}

/// Continuum spectral density of the single-impurity coupling, per unit
/// angular frequency: J(w) = sum_k |Omega_R - Omega_L|^2 delta(w - E_k/hbar),
/// in s^-1. Uses the analytic inversion k(w) of the dispersion.
inline double spectral_density(const KernelModel& m, double omega_si) {
    if (!(omega_si > 0)) throw ValidationError("omega", "must be > 0");
    const auto& r = m.red;
    const double w = omega_si * constants::hbar / r.e_scale;  // reduced energy
    const double e = -r.ng + std::sqrt(r.ng * r.ng + w * w);
    const double k = std::sqrt(e / r.eps_coef);
    Geometry g1 = m.geometry_red;
    g1.sites = {0.0};
    Structure st = coupling::gamma_structure(g1, {0}, {1});
    const double S = (r.dim == 3) ? st.eval_sphere(k) : detail::eval_line_even(st, k);
    const double uv = detail::uv_red(r, k);
    const double gauss = std::exp(-0.5 * r.sigma * r.sigma * k * k);
    const double dEdk = (e + r.ng) / w * 2.0 * r.eps_coef * k;
    const double measure = (r.dim == 3) ? k * k : 1.0;
    const double pref = (r.dim == 3)
                            ? r.coupling / (4.0 * constants::pi * constants::pi)
                            : r.coupling / constants::pi;
    return pref * (r.e_scale / constants::hbar) * measure * uv * gauss * S / dEdk;
}

/// Phase integrals for the density-matrix module. The linear part of
/// f(x) = x - sin x is integrated as its own non-oscillatory term unless the
/// whole phase range is small.
inline KernelResult eval_phase(const KernelModel& m, const Structure& st,
                               double t_seconds, double prefactor) {
    if (st.cos_terms.empty() || t_seconds == 0.0) return {0.0, 0.0};
    const double tau = m.red.time_to_reduced(t_seconds);
    const double phi_max = detail::bogo_energy_red(m.red, m.k_max()) * tau;
    if (phi_max < 1.0) {
        auto r = detail::eval_radial(m, st, detail::TimeWeight::phase_full, tau);
        return {prefactor * r.value, std::abs(prefactor) * r.abs_error};
    }
    auto lin = detail::eval_radial(m, st, detail::TimeWeight::phase_lin, tau);
    auto osc = detail::eval_radial(m, st, detail::TimeWeight::phase_osc, tau);
    return {prefactor * (lin.value + osc.value),
            std::abs(prefactor) * (lin.abs_error + osc.abs_error)};
}

// --------------------------------------------------------------------------
// Curve sampling
// --------------------------------------------------------------------------

enum class CurveKind {
    gamma0, gamma1, gamma2, delta,
    gamma0_1d, gamma1_1d, gamma2_1d, delta_1d,
    general
};

inline std::string to_string(CurveKind k) {
    switch (k) {
        case CurveKind::gamma0: return "gamma0";
        case CurveKind::gamma1: return "gamma1";
        case CurveKind::gamma2: return "gamma2";
        case CurveKind::delta: return "delta";
        case CurveKind::gamma0_1d: return "gamma0_1d";
        case CurveKind::gamma1_1d: return "gamma1_1d";
        case CurveKind::gamma2_1d: return "gamma2_1d";
        case CurveKind::delta_1d: return "delta_1d";
        case CurveKind::general: return "general";
    }
    return "?";
}

/// Sampled exponent with provenance.
struct DecoherenceCurve {
    std::string name;
    CurveKind kind = CurveKind::general;
    BathKind bath = BathKind::condensate;
    int dim = 3;
    double half_intrawell_sep_si = 0;
    double half_site_sep_si = 0;
    double scale = 1.0;  // e.g. 2 for a 2*Gamma0 reference curve
    std::vector<double> times;       // s
    std::vector<double> values;      // dimensionless
    std::vector<double> abs_errors;  // quadrature estimates

    double max_abs_error() const {
        double e = 0;
        for (double x : abs_errors) e = std::max(e, x);
        return e;
    }
};

/// t = 0, then log-spaced points up to t_join, then linear to t_max.
inline std::vector<double> hybrid_time_grid(double t_log_start, double t_join,
                                            double t_max, int n_log, int n_lin) {
    std::vector<double> t{0.0};
    for (int i = 0; i < n_log; ++i)
        t.push_back(t_log_start * std::pow(t_join / t_log_start,
                                           static_cast<double>(i) / (n_log - 1)));
    for (int i = 1; i <= n_lin; ++i)
        t.push_back(t_join + (t_max - t_join) * static_cast<double>(i) / n_lin);
    return t;
}

inline std::vector<double> linear_time_grid(double t_max, int n) {
    std::vector<double> t(n + 1);
    for (int i = 0; i <= n; ++i) t[i] = t_max * i / n;
    return t;
}

inline KernelResult eval_curve_kind(const KernelModel& m, CurveKind kind, double t) {
    switch (kind) {
        case CurveKind::gamma0: return gamma0_3d(m, t);
        case CurveKind::gamma1: return gamma12_3d(m, t).gamma1;
        case CurveKind::gamma2: return gamma12_3d(m, t).gamma2;
        case CurveKind::delta: {
            if (t == 0) return {0.0, 0.0};
            Structure st = coupling::delta_structure(m.geometry_red);
            return detail::eval_radial(m, st, detail::TimeWeight::decay,
                                       m.red.time_to_reduced(t));
        }
        case CurveKind::gamma0_1d: return gamma_1d(m, OneDKind::gamma0, t);
        case CurveKind::gamma1_1d: return gamma_1d(m, OneDKind::gamma1, t);
        case CurveKind::gamma2_1d: return gamma_1d(m, OneDKind::gamma2, t);
        case CurveKind::delta_1d: return gamma_1d(m, OneDKind::delta, t);
        case CurveKind::general: throw ValidationError("kind", "use sample_general");
    }
    return {};
}

/// Evaluate one exponent on a time grid with a bounded worker pool.
inline DecoherenceCurve sample_curve(const KernelModel& m, CurveKind kind,
                                     const std::vector<double>& times,
                                     int threads = 0, double scale = 1.0,
                                     std::string name = {}) {
    DecoherenceCurve c;
    c.name = name.empty() ? to_string(kind) : std::move(name);
    c.kind = kind;
    c.bath = m.bath;
    c.dim = m.red.dim;
    c.half_intrawell_sep_si = m.red.length_to_si(m.geometry_red.half_intrawell_sep);
    c.half_site_sep_si = m.red.length_to_si(m.geometry_red.half_site_sep);
    c.scale = scale;
    c.times = times;
    c.values.resize(times.size());
    c.abs_errors.resize(times.size());
    parallel_for(times.size(), resolve_threads(threads), [&](std::size_t i) {
        auto r = eval_curve_kind(m, kind, times[i]);
        c.values[i] = scale * r.value;
        c.abs_errors[i] = std::abs(scale) * r.abs_error;
    });
    return c;
}

} // namespace coldeco::kernels
