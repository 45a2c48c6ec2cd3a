// quadrature.hpp — adaptive panel quadrature for oscillatory radial integrands

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <vector>

#include "coldeco/constants.hpp"
#include "coldeco/errors.hpp"

namespace coldeco::quadrature {

struct QuadratureSpec {
    double k_max_over_sigma = 8.0;  // cutoff in units of 1/sigma
    double rel_tol = 1e-9;
    double abs_floor = 0.0;         // absolute stop once below this
    int max_subdivisions = 20000;
    double phase_per_panel = constants::pi;  // initial panel phase budget
};

struct QuadResult {
    double value = 0;
    double abs_error = 0;
    int panels = 0;
    long evals = 0;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
inline constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
inline constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277,
    0.381830050505119, 0.417959183673469};

struct Panel {
    double a = 0, b = 0;
    double value = 0;
    double error = 0;
    bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel gk15(const F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        const double x = h * kXgk[j];
        const double f1 = f(c - x);
        const double f2 = f(c + x);
        resk += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    Panel p;
    p.a = a;
    p.b = b;
    p.value = resk * h;
    p.error = std::abs((resk - resg) * h);
    return p;
}

} // namespace detail

/// Merge two sorted breakpoint lists into one strictly increasing list.
inline std::vector<double> merge_edges(const std::vector<double>& a,
                                       const std::vector<double>& b) {
    std::vector<double> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Adaptive Gauss-Kronrod over pre-split panels. The caller supplies edges
/// such that the integrand's phase advances by at most ~pi per panel; the
/// refinement loop then drives the global error below
/// max(rel_tol |I|, abs_floor).
template <class F>
QuadResult integrate_adaptive(const F& f, const std::vector<double>& edges,
                              double rel_tol, double abs_floor = 0.0,
                              int max_subdivisions = 20000) {
    if (edges.size() < 2) throw ValidationError("edges", "need at least one panel");
    std::priority_queue<detail::Panel> heap;
    double total = 0, err = 0;
    long evals = 0;
    int panels = 0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        auto p = detail::gk15(f, edges[i], edges[i + 1]);
        evals += 15;
        ++panels;
        total += p.value;
        err += p.error;
        heap.push(p);
    }
    int splits = 0;
    while (err > std::max(rel_tol * std::abs(total), abs_floor) && !heap.empty()) {
        if (++splits > max_subdivisions) {
            const auto& w = heap.top();
            throw QuadratureError("quadrature did not converge (max subdivisions)",
                                  w.error, w.a, w.b);
        }
        detail::Panel worst = heap.top();
        heap.pop();
        total -= worst.value;
        err -= worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            throw QuadratureError("panel too small to split", worst.error, worst.a, worst.b);
        }
        auto p1 = detail::gk15(f, worst.a, mid);
        auto p2 = detail::gk15(f, mid, worst.b);
        evals += 30;
        ++panels;
        total += p1.value + p2.value;
        err += p1.error + p2.error;
        heap.push(p1);
        heap.push(p2);
    }
    return {total, err, panels, evals};
}

/// Breakpoints on [0, k_max] such that phi(k) advances by at most d_phi per
/// panel, given the inverse of the (monotone increasing) phase function.
/// phi_inv(p) must return the k with phi(k) = p.
inline std::vector<double> phase_edges(double k_max, double phi_at_kmax,
                                       const std::function<double(double)>& phi_inv,
                                       double d_phi, std::size_t max_edges = 2000000) {
    std::vector<double> edges{0.0};
    if (phi_at_kmax > d_phi) {
        const auto n = static_cast<std::size_t>(phi_at_kmax / d_phi);
        if (n + 2 > max_edges)
            throw QuadratureError("too many oscillation panels", 0.0, 0.0, k_max);
        for (std::size_t j = 1; j <= n; ++j) {
            const double k = phi_inv(j * d_phi);
            if (k > edges.back() && k < k_max) edges.push_back(k);
        }
    }
    edges.push_back(k_max);
    return edges;
}

/// Uniformly spaced edges with spacing <= d_k.
inline std::vector<double> uniform_edges(double k_max, double d_k) {
    const int n = std::max(1, static_cast<int>(std::ceil(k_max / d_k)));
    std::vector<double> edges(n + 1);
    for (int i = 0; i <= n; ++i) edges[i] = k_max * i / n;
    return edges;
}

} // namespace coldeco::quadrature
