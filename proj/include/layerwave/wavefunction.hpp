#pragma once

// Region coefficients and piecewise evaluation of psi(x) for a unit wave
// incident from the left medium:
//
//   x < 0                 exp{i k1 x} + R exp{-i k1 x}
//   gap n                 a_n exp{i k0 x} + b_n exp{-i k0 x}      n = 1..N+1
//   barrier n             c_n exp{i kn x} + d_n exp{-i kn x}      n = 1..N
//   x > span              T exp{i k2 x}
//
// All exponentials use the global coordinate x. Right incidence is obtained by
// solving the mirrored structure.

#include "layerwave/amplitudes.hpp"

#include <span>
#include <vector>

namespace layerwave {

struct GapCoefficients {
    std::vector<cplx> a;  // a_1..a_{N+1} stored at [0..N]
    std::vector<cplx> b;
};

struct BarrierCoefficients {
    std::vector<cplx> c;  // c_1..c_N stored at [0..N-1]
    std::vector<cplx> d;
};

// Gap-region coefficients from the prefix amplitudes T_{n-1}, R_{n-1}, the
// left interface and the total reflection amplitude.
GapCoefficients gap_coefficients(const PrefixAmplitudes& prefix, const InterfaceAmplitudes& iface,
                                 const EmbeddedAmplitudes& embedded, const WaveNumberSet& w);

// Barrier-region coefficients by crossing the left edge of each barrier.
BarrierCoefficients barrier_coefficients(const GapCoefficients& gap, const InterfaceAmplitudes& iface,
                                         const WaveNumberSet& w);

struct ScatteringSolution {
    LayeredStructure structure;
    WaveNumberSet k;
    EmbeddedAmplitudes embedded;
    std::vector<cplx> a, b, c, d;

    // x = 0, left/right edge of each barrier, x = span (2N + 2 points).
    // Region j lies between interfaces[j-1] and interfaces[j]; region 0 is
    // the left medium and region 2N + 2 the right medium.
    std::vector<double> interfaces;

    std::size_t region_count() const { return interfaces.size() + 1; }
};

ScatteringSolution assemble_solution(const LayeredStructure& s, const ScatteringAmplitudes& amps);
ScatteringSolution solve_scattering(const LayeredStructure& s, double energy);

struct PsiValue {
    cplx psi;
    cplx dpsi;  // analytic derivative
};

// Index of the region containing x; points on an interface go to the right.
std::size_t region_of(const ScatteringSolution& sol, double x);

// The expression of region `region` evaluated at any x (used for one-sided
// limits at interfaces).
PsiValue evaluate_in_region(const ScatteringSolution& sol, std::size_t region, double x);

PsiValue evaluate(const ScatteringSolution& sol, double x);
cplx evaluate_psi(const ScatteringSolution& sol, double x);

struct DensitySample {
    double x;
    cplx psi;
    double abs2;
};

// Throws DomainError unless `grid` is sorted ascending.
std::vector<DensitySample> sample_density(const ScatteringSolution& sol, std::span<const double> grid);

std::vector<double> uniform_grid(double lo, double hi, std::size_t points);

// Grid over [-0.2 span, 1.2 span] with 40 points per shortest wavelength
// present and at least `min_points` points.
std::vector<double> default_grid(const ScatteringSolution& sol, std::size_t min_points = 1000);

}  // namespace layerwave
