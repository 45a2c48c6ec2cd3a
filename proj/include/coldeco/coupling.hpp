// coupling.hpp — impurity geometry, coupling frequencies, structure factors

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "coldeco/bogoliubov.hpp"
#include "coldeco/params.hpp"

namespace coldeco::coupling {

enum class Well { left, right };

/// Double-well array on the lattice (x) axis. Site i has wells at
/// x_i -+ L; adjacent sites are 2D apart.
struct Geometry {
    double half_intrawell_sep = 0;  // L, m
    double half_site_sep = 0;       // D, m
    double sigma = 0;               // Gaussian width, m
    std::vector<double> sites;      // double-well centers x_i, m

    /// n_sites wells centered on the origin with spacing 2D.
    static Geometry regular(double L, double D, double sigma, int n_sites) {
        Geometry g{L, D, sigma, {}};
        for (int i = 0; i < n_sites; ++i)
            g.sites.push_back((2.0 * i - (n_sites - 1)) * D);
        return g;
    }

    static Geometry from_params(const PhysicalParams& p, const DerivedScales& s,
                                int n_sites = 2) {
        return regular(p.half_intrawell_sep, p.half_site_sep, s.sigma, n_sites);
    }

    double well_position(int site, Well p) const {
        return sites.at(site) + (p == Well::right ? half_intrawell_sep
                                                  : -half_intrawell_sep);
    }

    /// Sanity warnings for the non-overlap assumption behind the model.
    std::vector<std::string> validate() const {
        if (!(sigma > 0)) throw ValidationError("sigma", "must be > 0");
        if (!(half_intrawell_sep > 0)) throw ValidationError("half_intrawell_sep", "must be > 0");
        if (half_site_sep < half_intrawell_sep)
            throw ValidationError("half_site_sep", "must be >= half_intrawell_sep");
        std::vector<std::string> warnings;
        if (2.0 * half_intrawell_sep < 4.0 * sigma)
            warnings.push_back("wells overlap: 2L < 4 sigma");
        for (std::size_t i = 0; i + 1 < sites.size(); ++i)
            if (std::abs(sites[i + 1] - sites[i]) < 2.0 * half_site_sep - 1e-15 * half_site_sep)
                warnings.push_back("sites closer than 2D");
        return warnings;
    }
};

/// Occupation bits per site: 0 = left well, 1 = right well.
using PseudospinConfig = std::vector<int>;

inline PseudospinConfig config_from_index(unsigned idx, int n_sites) {
    PseudospinConfig c(n_sites);
    for (int i = 0; i < n_sites; ++i) c[i] = (idx >> i) & 1u;  // site 0 = LSB
    return c;
}

using Vec3 = std::array<double, 3>;

inline double norm(const Vec3& k) {
    return std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
}

/// Magnitude-only part of the coupling frequency: everything except the
/// positional phase. g_bath = 0 selects the free-boson amplitudes.
inline double omega_magnitude(const DerivedScales& s, double n0, double m_bath,
                              double g_bath, const Geometry& g, double k_abs) {
    const double uv = std::sqrt(bogoliubov::uv_suppression(m_bath, g_bath, n0, k_abs));
    const double gauss = std::exp(-k_abs * k_abs * g.sigma * g.sigma / 4.0);
    return s.g_impurity_bath * std::sqrt(n0) / constants::hbar * uv * gauss;
}

/// Coupling frequency Omega^i_p(k) of well p of site i (rad/s, complex).
inline std::complex<double> omega(const DerivedScales& s, double n0, double m_bath,
                                  double g_bath, const Geometry& g,
                                  int site, Well p, const Vec3& k) {
    const double mag = omega_magnitude(s, n0, m_bath, g_bath, g, norm(k));
    const double phase = k[0] * g.well_position(site, p);
    return std::polar(mag, phase);
}

/// |sum_i (m_i - n_i)(Omega_R^i - Omega_L^i)|^2 for an arbitrary
/// configuration pair, s^-2. Direct complex arithmetic; the quadrature
/// kernels use the expanded structure-factor form instead.
inline double diff_coupling_sq(const DerivedScales& s, double n0, double m_bath,
                               double g_bath, const Geometry& g, const Vec3& k,
                               const PseudospinConfig& n, const PseudospinConfig& m) {
    if (n.size() != m.size() || n.size() != g.sites.size())
        throw ValidationError("config", "configuration/site length mismatch");
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < n.size(); ++i) {
        const double w = static_cast<double>(m[i] - n[i]);
        if (w == 0.0) continue;
        acc += w * (omega(s, n0, m_bath, g_bath, g, static_cast<int>(i), Well::right, k)
                    - omega(s, n0, m_bath, g_bath, g, static_cast<int>(i), Well::left, k));
    }
    return std::norm(acc);
}

/// Constant level shift n0 g_AB of the impurity states (J). Reported in run
/// manifests; absorbed into the well frequencies, never propagated.
inline double mean_field_shift(const DerivedScales& s, double n0) {
    return n0 * s.g_impurity_bath;
}

// --------------------------------------------------------------------------
// Structure factors.
//
// Every decay exponent and phase is a radial integral of a smooth weight
// times a bilinear in the positional phases e^{i k_x x_w} of the wells.
// Expanding the bilinear gives a list of (weight, distance) terms:
//     sum_w c_w e^{i k_x x_w}  (x)  conj(sum_w c'_w e^{i k_x x_w})
//       -> sum over pairs of c c' [cos(k_x r) + i sin(k_x r)], r = x - x'.
// The 3D angular average maps cos(k_x r) -> sinc(k r) and sin(k_x r) -> 0;
// the symmetric 1D integral keeps cos(k r) and likewise drops sin terms.
// --------------------------------------------------------------------------

/// One well-level amplitude: real coefficient at position x (reduced or SI,
/// caller's choice — must be consistent with the k units used at evaluation).
struct WellAmplitude {
    double coef = 0;
    double pos = 0;
};

struct StructureTerm {
    double weight = 0;
    double distance = 0;
};

struct Structure {
    std::vector<StructureTerm> cos_terms;
    std::vector<StructureTerm> sin_terms;

    double max_distance() const {
        double r = 0;
        for (const auto& t : cos_terms) r = std::max(r, std::abs(t.distance));
        for (const auto& t : sin_terms) r = std::max(r, std::abs(t.distance));
        return r;
    }

    /// sum w cos(k r) (+ sin part), the 1D structure factor.
    double eval_line(double k) const {
        double v = 0;
        for (const auto& t : cos_terms) v += t.weight * std::cos(k * t.distance);
        for (const auto& t : sin_terms) v += t.weight * std::sin(k * t.distance);
        return v;
    }

    /// 2 sum w sinc(k r): integral over the polar cosine of eval_line(k u).
    double eval_sphere(double k) const {
        double v = 0;
        for (const auto& t : cos_terms) v += t.weight * sinc(k * t.distance);
        return 2.0 * v;
    }

    static double sinc(double x) {
        const double ax = std::abs(x);
        if (ax < 1e-4) {
            const double x2 = x * x;
            return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
        }
        return std::sin(x) / x;
    }
};

/// Expand Re/Im of (sum_u a_u e^{i k x_u}) (sum_v b_v e^{i k x_v})^*.
inline Structure bilinear_structure(const std::vector<WellAmplitude>& a,
                                    const std::vector<WellAmplitude>& b) {
    Structure s;
    for (const auto& ua : a)
        for (const auto& vb : b) {
            const double w = ua.coef * vb.coef;
            if (w == 0.0) continue;
            s.cos_terms.push_back({w, ua.pos - vb.pos});
            s.sin_terms.push_back({w, ua.pos - vb.pos});
        }
    return s;
}

/// Merge terms with equal distance; drop zero weights and (for sin) r = 0.
inline Structure consolidate(Structure s) {
    auto merge = [](std::vector<StructureTerm>& terms, bool odd) {
        std::vector<StructureTerm> out;
        for (auto& t : terms) {
            double r = t.distance, w = t.weight;
            if (odd && r < 0) { r = -r; w = -w; }            // sin odd
            if (!odd) r = std::abs(r);                        // cos even
            bool found = false;
            for (auto& o : out)
                if (o.distance == r) { o.weight += w; found = true; break; }
            if (!found) out.push_back({w, r});
        }
        std::erase_if(out, [](const StructureTerm& t) { return t.weight == 0.0; });
        return out;
    };
    s.cos_terms = merge(s.cos_terms, false);
    s.sin_terms = merge(s.sin_terms, true);
    std::erase_if(s.sin_terms, [](const StructureTerm& t) { return t.distance == 0.0; });
    return s;
}

/// Wells of (Omega_R^i - Omega_L^i): +1 at the right well, -1 at the left.
inline std::vector<WellAmplitude> difference_wells(const Geometry& g, int site,
                                                   double scale, double to_reduced) {
    return {{scale, g.well_position(site, Well::right) * to_reduced},
            {-scale, g.well_position(site, Well::left) * to_reduced}};
}

/// Structure of |sum_i (m_i - n_i)(Omega_R - Omega_L)|^2 (decay exponents).
inline Structure gamma_structure(const Geometry& g, const PseudospinConfig& n,
                                 const PseudospinConfig& m, double to_reduced = 1.0) {
    if (n.size() != m.size() || n.size() != g.sites.size())
        throw ValidationError("config", "configuration/site length mismatch");
    std::vector<WellAmplitude> amps;
    for (std::size_t i = 0; i < n.size(); ++i) {
        const double w = static_cast<double>(m[i] - n[i]);
        if (w == 0.0) continue;
        auto wi = difference_wells(g, static_cast<int>(i), w, to_reduced);
        amps.insert(amps.end(), wi.begin(), wi.end());
    }
    return consolidate(bilinear_structure(amps, amps));
}

/// Structure of sum_ij [(-1)^{n_i+n_j} - (-1)^{m_i+m_j}] Re[d_i d_j*]
/// (the pairwise phase Theta).
inline Structure theta_structure(const Geometry& g, const PseudospinConfig& n,
                                 const PseudospinConfig& m, double to_reduced = 1.0) {
    Structure acc;
    const int N = static_cast<int>(n.size());
    for (int i = 0; i < N; ++i) {
        auto di = difference_wells(g, i, 1.0, to_reduced);
        for (int j = 0; j < N; ++j) {
            const double c = ((n[i] + n[j]) % 2 ? -1.0 : 1.0)
                           - ((m[i] + m[j]) % 2 ? -1.0 : 1.0);
            if (c == 0.0) continue;
            auto dj = difference_wells(g, j, 1.0, to_reduced);
            Structure b = bilinear_structure(di, dj);
            for (auto& t : b.cos_terms) acc.cos_terms.push_back({c * t.weight, t.distance});
            // Im part cancels under the symmetric (i,j) sum
        }
    }
    return consolidate(acc);
}

/// Structure of Re[(sum_j Omega_R+Omega_L)^* sum_i (n_i - m_i) d_i]
/// (the single-spin phase Xi).
inline Structure xi_structure(const Geometry& g, const PseudospinConfig& n,
                              const PseudospinConfig& m, double to_reduced = 1.0) {
    const int N = static_cast<int>(n.size());
    std::vector<WellAmplitude> a, b;
    for (int i = 0; i < N; ++i) {
        const double w = static_cast<double>(n[i] - m[i]);
        if (w != 0.0) {
            auto wi = difference_wells(g, i, w, to_reduced);
            a.insert(a.end(), wi.begin(), wi.end());
        }
        b.push_back({1.0, g.well_position(i, Well::right) * to_reduced});
        b.push_back({1.0, g.well_position(i, Well::left) * to_reduced});
    }
    Structure s = bilinear_structure(a, b);
    s.sin_terms.clear();  // Re[.] only
    return consolidate(s);
}

/// Structure of Im[X_n^* X_m], X_n = sum_j d_j (-1)^{n_j} - sum_j (R_j + L_j)
/// (the trace phase Delta). Pure sin terms; the isotropic continuum
/// integral of these vanishes, so the continuum Delta is identically zero.
inline Structure delta_phase_structure(const Geometry& g, const PseudospinConfig& n,
                                       const PseudospinConfig& m, double to_reduced = 1.0) {
    const int N = static_cast<int>(n.size());
    auto xvec = [&](const PseudospinConfig& cfg) {
        std::vector<WellAmplitude> v;
        for (int i = 0; i < N; ++i) {
            const double sgn = cfg[i] ? -1.0 : 1.0;  // (-1)^{n_i}
            v.push_back({sgn - 1.0, g.well_position(i, Well::right) * to_reduced});
            v.push_back({-sgn - 1.0, g.well_position(i, Well::left) * to_reduced});
        }
        return v;
    };
    // Im[X_n^* X_m]: expand X_m X_n^* and keep the sin part
    Structure s = bilinear_structure(xvec(m), xvec(n));
    s.cos_terms.clear();
    return consolidate(s);
}

/// delta(t) = (Gamma_2 - Gamma_1)/2 evaluated from its own term list so the
/// shared sin^2(kL) content cancels exactly at build time.
inline Structure delta_structure(const Geometry& g, double to_reduced = 1.0) {
    if (g.sites.size() != 2)
        throw ValidationError("sites", "delta needs exactly 2 sites");
    Structure g1 = gamma_structure(g, {0, 0}, {1, 1}, to_reduced);
    Structure g2 = gamma_structure(g, {1, 0}, {0, 1}, to_reduced);
    Structure d;
    for (auto& t : g2.cos_terms) d.cos_terms.push_back({0.5 * t.weight, t.distance});
    for (auto& t : g1.cos_terms) d.cos_terms.push_back({-0.5 * t.weight, t.distance});
    return consolidate(d);
}

} // namespace coldeco::coupling
