#pragma once

// Work behind each CLI subcommand, writing CSV to a caller-supplied stream.

#include "layerwave/oracle.hpp"
#include "layerwave/periodic.hpp"
#include "layerwave/structure_io.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace layerwave {

struct EnergyRange {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t steps = 0;  // number of sample points, endpoints included
};

// Parses "min:max:steps". Throws ParseError.
EnergyRange parse_energy_range(const std::string& text);

struct WavefunctionReport {
    double transmission = 0.0;
    double reflection = 0.0;
    std::size_t rows = 0;
};

// CSV `x,re_psi,im_psi,abs2_psi`. Throws DomainError when the energy does not
// exceed the left medium potential.
WavefunctionReport run_wavefunction(const LayeredStructure& s, double energy, std::optional<std::size_t> grid_points,
                                    std::ostream& csv);

struct SweepRow {
    double energy;
    double transmission;
    double reflection;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::vector<std::string> notes;
};

// Energies hitting k = 0 exactly in a barrier (or in the gaps) are moved up by
// 1e-9 and noted. Independent energies run on worker threads; rows come back
// in ascending energy order.
SweepResult run_sweep(const LayeredStructure& s, const EnergyRange& range, unsigned threads = 0);

// CSV `epsilon,T_prob,R_prob`.
void write_sweep_csv(const SweepResult& sweep, std::ostream& csv);

// CSV `epsilon,cos_beta,band` for every scan sample.
BandTable run_bands(const PeriodicLattice& lat, const EnergyRange& range, std::ostream& csv);

struct OracleCheck {
    Discrepancy discrepancy;
    double tolerance = 0.0;
    double condition_estimate = 0.0;
    double residual = 0.0;

    bool passed() const { return discrepancy.max_relative <= tolerance; }
};

OracleCheck run_oracle_check(const LayeredStructure& s, double energy);

inline constexpr double energy_nudge = 1e-9;

}  // namespace layerwave
