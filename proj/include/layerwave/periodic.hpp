#pragma once

// Identical, equidistant barriers: closed-form prefix amplitudes and the
// Bloch-phase band structure of the infinite lattice.

#include "layerwave/core.hpp"

#include <string>
#include <vector>

namespace layerwave {

struct PeriodicLattice {
    double barrier_height = 0.0;
    double barrier_width = 1.0;
    double period = 2.0;  // >= barrier_width
    std::size_t count = 1;
    double first_center = 1.5;

    // Explicit structure with zero-potential media on both sides. The margin
    // after the last barrier equals the margin before the first.
    LayeredStructure to_structure(double v_left = 0.0, double v_right = 0.0) const;
};

// Throws ValidationError for non-positive width/count or period < width.
void validate_lattice(const PeriodicLattice& lat);

enum class BandKind { Allowed, Forbidden, Edge };

std::string to_string(BandKind kind);

inline constexpr double band_edge_tolerance = 1e-12;

struct BlochPhase {
    double energy = 0.0;
    double cos_beta = 0.0;
    cplx beta;  // real in allowed bands; i*mu or pi + i*mu in forbidden ones
    BandKind classification = BandKind::Allowed;
};

// Phase per period from
//   cos b = cos k0(a-d) cos kd - (k^2+k0^2)/(2 k0 k) sin k0(a-d) sin kd.
// Throws DegenerateError when k = 0 or k0 = 0.
BlochPhase bloch_phase(const PeriodicLattice& lat, double energy);

struct ClosedFormPrefix {
    cplx inv_T;     // 1/T_n
    cplx R_over_T;  // R_n/T_n

    cplx T() const { return 1.0 / inv_T; }
    cplx R() const { return R_over_T / inv_T; }
};

// Prefix amplitudes of the first n barriers via Chebyshev powers of the unit
// cell. Requires energy > 0; throws DegenerateError at a band edge.
ClosedFormPrefix closed_form_prefix(const PeriodicLattice& lat, double energy, std::size_t n);

struct BandInterval {
    double lo;
    double hi;
    BandKind kind;  // Allowed or Forbidden
};

struct BandTable {
    std::vector<BlochPhase> samples;
    std::vector<BandInterval> intervals;
    std::vector<double> edges;
    std::vector<std::string> notes;  // e.g. skipped grid points

    // Classification of the interval containing `energy`.
    BandKind kind_at(double energy) const;
};

inline constexpr double band_scan_energy_floor = 1e-6;
inline constexpr double band_edge_energy_tolerance = 1e-10;

// Samples cos b on a uniform grid with step `resolution`, brackets each
// change of classification, and bisects it to 1e-10 in energy.
BandTable band_scan(const PeriodicLattice& lat, double e_min, double e_max, double resolution);

}  // namespace layerwave
