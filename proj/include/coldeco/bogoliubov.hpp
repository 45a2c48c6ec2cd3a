// bogoliubov.hpp — dispersion and mode amplitudes of the homogeneous bath

#pragma once

#include <cmath>

#include "coldeco/errors.hpp"

namespace coldeco::bogoliubov {

/// Free-particle energy of a bath atom, eps_k = hbar^2 k^2 / (2 m_B).
inline double epsilon(double m_bath, double k) {
    if (k < 0) throw ValidationError("k", "wavenumber must be >= 0");
    const double hk = constants::hbar * k;
    return hk * hk / (2.0 * m_bath);
}

/// Quasiparticle energy E_k = sqrt(2 eps_k n0 g_B + eps_k^2).
/// Reduces to eps_k for g_bath = 0.
inline double bogo_energy(double m_bath, double g_bath, double n0, double k) {
    const double e = epsilon(m_bath, k);
    return std::sqrt(e * (e + 2.0 * n0 * g_bath));
}

inline double sound_speed(double m_bath, double g_bath, double n0) {
    return std::sqrt(n0 * g_bath / m_bath);
}

/// Mode-amplitude suppression factor (|u_k| - |v_k|)^2 in closed form,
/// eps_k / E_k. Equals 1 for a free-boson bath. The k -> 0 limit with
/// g_bath > 0 is 0 (removable) and is returned as such.
inline double uv_suppression(double m_bath, double g_bath, double n0, double k) {
    if (k < 0) throw ValidationError("k", "wavenumber must be >= 0");
    if (g_bath == 0.0 || n0 == 0.0) return 1.0;
    if (k == 0.0) return 0.0;
    const double e = epsilon(m_bath, k);
    return std::sqrt(e / (e + 2.0 * n0 * g_bath));
    // note (eps/E) = sqrt(eps/(eps + 2 n0 gB)) since E = sqrt(eps(eps+2n0gB))
}

/// Same factor evaluated from the quasiparticle amplitudes
///   |u|, |v| = sqrt(((eps + n0 gB)/E +- 1)/2)
/// (volume normalization dropped). Kept as an independent route for tests.
inline double uv_suppression_from_amplitudes(double m_bath, double g_bath,
                                             double n0, double k) {
    if (g_bath == 0.0 || n0 == 0.0) return 1.0;
    const double e = epsilon(m_bath, k);
    const double E = bogo_energy(m_bath, g_bath, n0, k);
    const double A = (e + n0 * g_bath) / E;
    const double u = std::sqrt(0.5 * (A + 1.0));
    const double v = std::sqrt(0.5 * (A - 1.0));
    const double w = u - v;
    return w * w;
}

} // namespace coldeco::bogoliubov
