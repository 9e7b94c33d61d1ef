#include "layerwave/periodic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace layerwave {

namespace {

constexpr cplx I{0.0, 1.0};

}  // namespace

LayeredStructure PeriodicLattice::to_structure(double v_left, double v_right) const
{
    LayeredStructure s;
    s.v_left = v_left;
    s.v_right = v_right;
    s.barriers.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        s.barriers.push_back({barrier_height, barrier_width, first_center + static_cast<double>(n) * period});
    }
    const double margin = first_center - 0.5 * barrier_width;
    s.span = (count ? s.barriers.back().right_edge() : 0.0) + margin;
    return s;
}

void validate_lattice(const PeriodicLattice& lat)
{
    ValidationReport rep;
    auto add = [&rep](std::string msg) {
        rep.violations.push_back({ViolationKind::InvalidLattice, 0, std::move(msg)});
    };
    if (!std::isfinite(lat.barrier_height) || !std::isfinite(lat.barrier_width) || !std::isfinite(lat.period) ||
        !std::isfinite(lat.first_center)) {
        add("lattice parameters must be finite");
    }
    if (!(lat.barrier_width > 0.0)) {
        add("barrier width must be positive");
    }
    if (lat.period < lat.barrier_width) {
        add("period must not be smaller than the barrier width");
    }
    if (lat.count == 0) {
        add("lattice needs at least one barrier");
    }
    if (lat.first_center - 0.5 * lat.barrier_width < 0.0) {
        add("first barrier starts before the left medium");
    }
    if (!rep.ok()) {
        throw ValidationError(std::move(rep));
    }
}

std::string to_string(BandKind kind)
{
    switch (kind) {
    case BandKind::Allowed:
        return "allowed";
    case BandKind::Forbidden:
        return "forbidden";
    case BandKind::Edge:
        return "edge";
    }
    return "unknown";
}

BlochPhase bloch_phase(const PeriodicLattice& lat, double energy)
{
    const cplx k0 = wavenumber(energy, 0.0);
    const cplx k = wavenumber(energy, lat.barrier_height);
    if (k0 == cplx{}) {
        throw DegenerateError("Bloch phase undefined at zero energy (k0 = 0)");
    }
    if (k == cplx{}) {
        throw DegenerateError("Bloch phase undefined where the energy equals the barrier height (k = 0)");
    }
    const double d = lat.barrier_width;
    const double gap = lat.period - d;
    const cplx c = std::cos(k0 * gap) * std::cos(k * d) -
                   (k * k + k0 * k0) / (2.0 * k0 * k) * std::sin(k0 * gap) * std::sin(k * d);

    BlochPhase out;
    out.energy = energy;
    out.cos_beta = c.real();
    const double excess = std::abs(out.cos_beta) - 1.0;
    if (std::abs(excess) < band_edge_tolerance) {
        out.classification = BandKind::Edge;
        out.beta = out.cos_beta > 0.0 ? 0.0 : std::numbers::pi;
    }
    else if (excess < 0.0) {
        out.classification = BandKind::Allowed;
        out.beta = std::acos(out.cos_beta);
    }
    else {
        out.classification = BandKind::Forbidden;
        const double mu = std::acosh(std::abs(out.cos_beta));
        out.beta = out.cos_beta > 0.0 ? cplx{0.0, mu} : cplx{std::numbers::pi, mu};
    }
    return out;
}

ClosedFormPrefix closed_form_prefix(const PeriodicLattice& lat, double energy, std::size_t n)
{
    if (!(energy > 0.0)) {
        throw DomainError("closed-form prefix needs a propagating wave between barriers (energy > 0)");
    }
    const BlochPhase phase = bloch_phase(lat, energy);
    if (phase.classification == BandKind::Edge) {
        std::ostringstream msg;
        msg << "energy " << energy << " lies on a band edge; use the recurrence instead";
        throw DegenerateError(msg.str());
    }

    const double k0 = std::sqrt(energy);
    const cplx k = wavenumber(energy, lat.barrier_height);
    const double d = lat.barrier_width;
    const double a = lat.period;
    const cplx sin_kd = std::sin(k * d);
    const cplx inv_t = std::exp(I * k0 * d) * (std::cos(k * d) - I * (k * k + k0 * k0) / (2.0 * k * k0) * sin_kd);
    const cplx r_over_t = I * std::exp(2.0 * I * k0 * lat.first_center) * (k * k - k0 * k0) / (2.0 * k * k0) * sin_kd;
    const double cell_imag = (std::exp(-I * k0 * a) * inv_t).imag();

    // cos(n b) and sin(n b)/sin(b)
    const double nn = static_cast<double>(n);
    double cos_n = 0.0;
    double ratio = 0.0;
    if (phase.classification == BandKind::Allowed) {
        const double b = phase.beta.real();
        cos_n = std::cos(nn * b);
        ratio = std::sin(nn * b) / std::sin(b);
    }
    else {
        const double mu = phase.beta.imag();
        const double sign = (phase.cos_beta < 0.0 && n % 2 == 1) ? -1.0 : 1.0;
        cos_n = sign * std::cosh(nn * mu);
        ratio = (phase.cos_beta < 0.0 ? -sign : 1.0) * std::sinh(nn * mu) / std::sinh(mu);
    }

    ClosedFormPrefix out;
    out.inv_T = std::exp(I * k0 * nn * a) * (cos_n + I * cell_imag * ratio);
    out.R_over_T = std::exp(I * k0 * (nn - 1.0) * a) * r_over_t * ratio;
    return out;
}

BandKind BandTable::kind_at(double energy) const
{
    for (const auto& iv : intervals) {
        if (energy >= iv.lo && energy <= iv.hi) {
            return iv.kind;
        }
    }
    throw DomainError("energy outside the scanned range");
}

namespace {

// Phase at `e`, stepping off an exact k = 0 / k0 = 0 point if needed.
bool forbidden_near(const PeriodicLattice& lat, double e, double nudge)
{
    for (int attempt = 0; attempt < 4; ++attempt) {
        try {
            return bloch_phase(lat, e).classification == BandKind::Forbidden;
        }
        catch (const DegenerateError&) {
            e += nudge;
        }
    }
    throw DegenerateError("cannot evaluate the Bloch phase near the requested energy");
}

}  // namespace

BandTable band_scan(const PeriodicLattice& lat, double e_min, double e_max, double resolution)
{
    validate_lattice(lat);
    if (!(resolution > 0.0)) {
        throw DomainError("band scan resolution must be positive");
    }
    const double lo = std::max(e_min, band_scan_energy_floor);
    if (!(lo < e_max)) {
        throw DomainError("band scan needs e_min < e_max (after clamping to the positive floor)");
    }

    BandTable table;
    const auto steps = static_cast<std::size_t>(std::floor((e_max - lo) / resolution));
    std::vector<double> grid;
    grid.reserve(steps + 2);
    for (std::size_t i = 0; i <= steps; ++i) {
        grid.push_back(lo + resolution * static_cast<double>(i));
    }
    if (grid.back() < e_max) {
        grid.push_back(e_max);
    }

    for (double e : grid) {
        try {
            table.samples.push_back(bloch_phase(lat, e));
        }
        catch (const DegenerateError&) {
            std::ostringstream note;
            note.precision(17);
            note << "skipped energy " << e << " (k = 0 or k0 = 0)";
            table.notes.push_back(note.str());
        }
    }

    const double nudge = 1e-3 * band_edge_energy_tolerance;
    for (std::size_t i = 1; i < table.samples.size(); ++i) {
        const bool left = table.samples[i - 1].classification == BandKind::Forbidden;
        const bool right = table.samples[i].classification == BandKind::Forbidden;
        if (left == right) {
            continue;
        }
        double a = table.samples[i - 1].energy;
        double b = table.samples[i].energy;
        while (b - a > band_edge_energy_tolerance) {
            const double mid = 0.5 * (a + b);
            if (forbidden_near(lat, mid, nudge) == left) {
                a = mid;
            }
            else {
                b = mid;
            }
        }
        table.edges.push_back(0.5 * (a + b));
    }

    std::vector<double> bounds;
    bounds.push_back(lo);
    bounds.insert(bounds.end(), table.edges.begin(), table.edges.end());
    bounds.push_back(e_max);
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
        const double mid = 0.5 * (bounds[i] + bounds[i + 1]);
        const bool forbidden = forbidden_near(lat, mid, nudge);
        table.intervals.push_back({bounds[i], bounds[i + 1], forbidden ? BandKind::Forbidden : BandKind::Allowed});
    }
    return table;
}

}  // namespace layerwave
