#pragma once

// Potential geometry and energy-dependent wavenumbers.
//
// Everything is in scaled units where the stationary equation reads
//   -psi'' + u(x) psi = eps psi,
// so potentials and energies carry units of 1/length^2.

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace layerwave {

using cplx = std::complex<double>;

// Error hierarchy. The CLI maps these onto exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad user input that is not a structure violation (e.g. no propagating
// incident wave, unsorted grid).
class DomainError : public Error {
public:
    using Error::Error;
};

// A formula hit a removable singularity it does not expand: a wavenumber
// that is exactly zero, a vanishing denominator, a band edge, or a
// numerically singular matching system.
class DegenerateError : public Error {
public:
    using Error::Error;
};

struct Barrier {
    double height = 0.0;  // scaled potential u_n
    double width = 0.0;   // d_n > 0
    double center = 0.0;  // x_n

    double left_edge() const { return center - 0.5 * width; }
    double right_edge() const { return center + 0.5 * width; }
    bool operator==(const Barrier&) const = default;
};

// Two semi-infinite media (x <= 0 and x >= span) with zero potential in
// between except for the listed rectangular barriers, ordered left to right.
struct LayeredStructure {
    double v_left = 0.0;
    double v_right = 0.0;
    double span = 0.0;
    std::vector<Barrier> barriers;

    std::size_t size() const { return barriers.size(); }
    bool operator==(const LayeredStructure&) const = default;
};

// Structure reflected about x = span/2: media swapped, barrier order reversed.
// Right incidence on `s` is left incidence on mirrored(s).
LayeredStructure mirrored(const LayeredStructure& s);

enum class ViolationKind {
    NonFiniteValue,
    NonPositiveSpan,
    NonPositiveWidth,
    BeforeLeftMedium,
    ExceedsSpan,
    Overlap,
    InvalidLattice,
};

struct Violation {
    ViolationKind kind;
    std::size_t index;  // 0-based barrier index (unused for span checks)
    std::string message;  // 1-based barrier numbers, human readable
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

class ValidationError : public Error {
public:
    explicit ValidationError(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

// Checks every ordering and sign constraint; reports all violations, not only
// the first.
ValidationReport validate_structure(const LayeredStructure& s);

// Returns `s` unchanged or throws ValidationError carrying the full report.
const LayeredStructure& require_valid(const LayeredStructure& s);

// Principal square root of (energy - potential) on the branch Im k >= 0.
// Real ε gives either a non-negative real or a purely imaginary value.
cplx wavenumber(double energy, double potential);

struct WaveNumberSet {
    double energy = 0.0;
    cplx k_left;   // medium 1 (x < 0)
    cplx k_right;  // medium 2 (x > span)
    cplx k_gap;    // zero-potential regions between barriers
    std::vector<cplx> k_barrier;
};

WaveNumberSet compute_wavenumbers(const LayeredStructure& s, double energy);

}  // namespace layerwave
