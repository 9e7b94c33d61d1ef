#pragma once

// Scattering amplitudes for a layered structure.
//
// Every scatterer is described by a 2x2 transfer matrix acting on the
// plane-wave coefficient pair (a, b) of a exp{ik0 x} + b exp{-ik0 x}, mapping
// the pair on its left to the pair on its right:
//
//     | 1/t~   -r~/t~ |
//     | -r/t    1/t   |
//
// Here t, r are the transmission and reflection amplitudes for a unit wave
// incident from the left, and t~, r~ are their time-reversed partners: the
// same closed-form expressions with every wavenumber negated. When all
// wavenumbers involved are real, t~ = conj(t) and r~ = conj(r). Keeping the
// partner as an independent value lets the same algebra cover evanescent
// regions, where literal conjugation gives the wrong matrix.
//
// Plane waves are referenced to the global origin, so the phase of r depends
// on where the scatterer sits.

#include "layerwave/core.hpp"

#include <Eigen/Core>
#include <span>
#include <vector>

namespace layerwave {

// Transfer matrix entries with a shared exponent: the true matrix is
// exp(log_scale) * [[inv_t_rev, -r_over_t_rev], [-r_over_t, inv_t]].
// Thick evanescent barriers and long forbidden-band prefixes grow like
// exp(|Im k| d); the exponent keeps the mantissas in range.
struct Transfer {
    cplx inv_t{1.0, 0.0};
    cplx r_over_t{0.0, 0.0};
    cplx inv_t_rev{1.0, 0.0};
    cplx r_over_t_rev{0.0, 0.0};
    double log_scale = 0.0;

    static Transfer identity() { return {}; }

    cplx t() const { return std::exp(-log_scale) / inv_t; }
    cplx r() const { return r_over_t / inv_t; }
    cplx t_rev() const { return std::exp(-log_scale) / inv_t_rev; }
    cplx r_rev() const { return r_over_t_rev / inv_t_rev; }

    // Unscaled entries; may overflow for extreme inputs.
    cplx inv_t_full() const { return inv_t * std::exp(log_scale); }
    cplx r_over_t_full() const { return r_over_t * std::exp(log_scale); }

    // Mantissa matrix (without the exp(log_scale) factor).
    Eigen::Matrix2cd mantissa() const;
    static Transfer from_matrix(const Eigen::Matrix2cd& m, double log_scale);

    // Rescale mantissas so the largest entry has unit modulus.
    void normalize();
};

// `later * earlier`: the scatterer `earlier` sits to the left of `later`.
Transfer compose(const Transfer& later, const Transfer& earlier);

// Transmission/reflection for one interface, with time-reversed partners.
struct InterfacePair {
    cplx t{1.0, 0.0};
    cplx r{0.0, 0.0};
    cplx t_rev{1.0, 0.0};
    cplx r_rev{0.0, 0.0};
};

// Amplitudes for a wave crossing from wavenumber `k_from` to `k_to` at x:
//   t = 2 k_from / (k_from + k_to) exp{i (k_from - k_to) x}
//   r = (k_from - k_to) / (k_from + k_to) exp{2 i k_from x}
// Throws DegenerateError when k_from + k_to == 0.
InterfacePair interface_pair(cplx k_from, cplx k_to, double x, const char* what = "interface");

struct InterfaceAmplitudes {
    InterfacePair left;   // medium 1 -> zero potential at x = 0
    InterfacePair right;  // zero potential -> medium 2 at x = span
    std::vector<InterfacePair> gap_to_barrier;  // zero potential -> barrier n at its left edge
};

InterfaceAmplitudes interface_amplitudes(const WaveNumberSet& w, const LayeredStructure& s);

// Single barrier n (0-based) in zero background. Throws DegenerateError when
// k_n == 0 or k_gap == 0.
Transfer barrier_amplitudes(const WaveNumberSet& w, const LayeredStructure& s, std::size_t n);

using BarrierAmplitudes = std::vector<Transfer>;
BarrierAmplitudes all_barrier_amplitudes(const WaveNumberSet& w, const LayeredStructure& s);

// Scattering data of the first n barriers in zero background, n = 0..N.
struct PrefixAmplitudes {
    std::vector<Transfer> entries;

    std::size_t count() const { return entries.size() - 1; }  // N
    const Transfer& operator[](std::size_t n) const { return entries[n]; }
    cplx T(std::size_t n) const { return entries[n].t(); }
    cplx R(std::size_t n) const { return entries[n].r(); }
    const Transfer& full() const { return entries.back(); }
};

// Two coupled first-order difference equations for (1/T_n, R~_n/T~_n), plus
// the mirrored pair for (1/T~_n, R_n/T_n), started from T_0 = 1, R_0 = 0.
PrefixAmplitudes prefix_by_recurrence(std::span<const Transfer> barriers);

// Ordered product of 2x2 barrier matrices (barrier n multiplies from the left).
PrefixAmplitudes prefix_by_matrix(std::span<const Transfer> barriers);

struct EmbeddedAmplitudes {
    cplx T_full{1.0, 0.0};
    cplx R_full{0.0, 0.0};
};

// Amplitudes of the whole structure between the two outer media, from the
// zero-background amplitudes of all N barriers and the two outer interfaces.
EmbeddedAmplitudes embed_in_media(const Transfer& structure, const InterfaceAmplitudes& iface);

// Flux-normalised transmission (Re k_right / k_left) |T|^2. Throws
// DomainError unless k_left is real and positive.
double transmission_probability(const EmbeddedAmplitudes& e, const WaveNumberSet& w);
double reflection_probability(const EmbeddedAmplitudes& e, const WaveNumberSet& w);

// Convenience pipeline: validate, compute wavenumbers, interfaces, barrier
// amplitudes, prefix by recurrence, and embed.
struct ScatteringAmplitudes {
    WaveNumberSet k;
    InterfaceAmplitudes iface;
    BarrierAmplitudes barriers;
    PrefixAmplitudes prefix;
    EmbeddedAmplitudes embedded;
};

ScatteringAmplitudes compute_amplitudes(const LayeredStructure& s, double energy);

}  // namespace layerwave
