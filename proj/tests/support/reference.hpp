#pragma once

// Test-side reference solutions. These propagate the pair (psi, psi') across
// each homogeneous layer with
//
//     | cos kL       sin(kL)/k |
//     | -k sin kL    cos kL    |
//
// which shares no code or formulas with the library's plane-wave amplitudes.

#include "layerwave/core.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace layerwave::ref {

using cplx = std::complex<double>;

inline cplx k_of(double e, double v)
{
    return std::sqrt(cplx(e - v, 0.0));
}

inline cplx sinc_len(cplx k, double len)
{
    if (std::abs(k * len) < 1e-8) {
        return len;
    }
    return std::sin(k * len) / k;
}

struct State {
    cplx psi;
    cplx dpsi;
};

inline State propagate(State s, cplx k, double len)
{
    const cplx c = std::cos(k * len);
    return {c * s.psi + sinc_len(k, len) * s.dpsi, -k * std::sin(k * len) * s.psi + c * s.dpsi};
}

// Potential at x inside [0, span]; barrier edges belong to the barrier.
inline double potential_at(const LayeredStructure& s, double x)
{
    for (const auto& b : s.barriers) {
        if (x >= b.left_edge() && x <= b.right_edge()) {
            return b.height;
        }
    }
    return 0.0;
}

// Layer boundaries in [0, span], ascending.
inline std::vector<double> breakpoints(const LayeredStructure& s)
{
    std::vector<double> p{0.0};
    for (const auto& b : s.barriers) {
        p.push_back(b.left_edge());
        p.push_back(b.right_edge());
    }
    p.push_back(s.span);
    return p;
}

// (psi, psi') at x for the solution that equals T_unit exp(i k2 (x' - span))
// to the right of the structure, i.e. unit amplitude at x' = span.
inline State backward_from_right(const LayeredStructure& s, double e, double x)
{
    const cplx k2 = k_of(e, s.v_right);
    State st{1.0, cplx(0.0, 1.0) * k2};
    if (x >= s.span) {
        return propagate(st, k2, x - s.span);
    }
    const auto p = breakpoints(s);
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        if (p[i + 1] <= x) {
            break;
        }
        const double lo = std::max(p[i], x);
        st = propagate(st, k_of(e, potential_at(s, 0.5 * (p[i] + p[i + 1]))), lo - p[i + 1]);
    }
    if (x >= 0.0) {
        return st;
    }
    return propagate(st, k_of(e, s.v_left), x);
}

struct Scattering {
    cplx T;  // coefficient of exp(i k2 x), global origin
    cplx R;  // coefficient of exp(-i k1 x)
    cplx scale;  // psi_global = scale * backward_from_right
};

inline Scattering scatter(const LayeredStructure& s, double e)
{
    const cplx k1 = k_of(e, s.v_left);
    const cplx k2 = k_of(e, s.v_right);
    const State at0 = backward_from_right(s, e, 0.0);
    // 1 + R = u S, i k1 (1 - R) = v S
    const cplx S = 2.0 / (at0.psi + at0.dpsi / (cplx(0.0, 1.0) * k1));
    Scattering out;
    out.scale = S;
    out.R = at0.psi * S - 1.0;
    out.T = S * std::exp(cplx(0.0, -1.0) * k2 * s.span);
    return out;
}

inline cplx psi_at(const LayeredStructure& s, double e, double x)
{
    const Scattering sc = scatter(s, e);
    if (x <= 0.0) {
        const cplx k1 = k_of(e, s.v_left);
        return std::exp(cplx(0.0, 1.0) * k1 * x) + sc.R * std::exp(cplx(0.0, -1.0) * k1 * x);
    }
    return sc.scale * backward_from_right(s, e, x).psi;
}

// cos(beta) of a lattice cell [barrier of width d, free gap a - d] from the
// trace of its (psi, psi') propagator.
inline double cos_beta(double u, double d, double a, double e)
{
    State c1 = propagate(propagate({1.0, 0.0}, k_of(e, u), d), k_of(e, 0.0), a - d);
    State c2 = propagate(propagate({0.0, 1.0}, k_of(e, u), d), k_of(e, 0.0), a - d);
    return 0.5 * (c1.psi + c2.dpsi).real();
}

}  // namespace layerwave::ref
