#include "layerwave/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace layerwave {

LayeredStructure mirrored(const LayeredStructure& s)
{
    LayeredStructure m;
    m.v_left = s.v_right;
    m.v_right = s.v_left;
    m.span = s.span;
    m.barriers.reserve(s.size());
    for (auto it = s.barriers.rbegin(); it != s.barriers.rend(); ++it) {
        m.barriers.push_back({it->height, it->width, s.span - it->center});
    }
    return m;
}

std::string ValidationReport::summary() const
{
    if (ok()) {
        return "valid";
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i) {
            out << "; ";
        }
        out << violations[i].message;
    }
    return out.str();
}

ValidationError::ValidationError(ValidationReport report)
    : Error("invalid structure: " + report.summary()), report_(std::move(report))
{
}

namespace {

std::string fmt(double v)
{
    std::ostringstream out;
    out.precision(10);
    out << v;
    return out.str();
}

}  // namespace

ValidationReport validate_structure(const LayeredStructure& s)
{
    // Edges are derived as center -+ width/2, so barriers meant to touch can
    // disagree in the last bit.
    auto beyond = [](double a, double b) {
        return a - b > 4.0 * std::numeric_limits<double>::epsilon() * std::max({1.0, std::abs(a), std::abs(b)});
    };
    ValidationReport rep;
    auto add = [&rep](ViolationKind kind, std::size_t index, std::string msg) {
        rep.violations.push_back({kind, index, std::move(msg)});
    };

    if (!std::isfinite(s.v_left) || !std::isfinite(s.v_right) || !std::isfinite(s.span)) {
        add(ViolationKind::NonFiniteValue, 0, "media potentials and span must be finite");
    }
    else if (!(s.span > 0.0)) {
        add(ViolationKind::NonPositiveSpan, 0, "span must be positive (got " + fmt(s.span) + ")");
    }

    for (std::size_t i = 0; i < s.size(); ++i) {
        const Barrier& b = s.barriers[i];
        const std::string id = "barrier " + std::to_string(i + 1);
        if (!std::isfinite(b.height) || !std::isfinite(b.left_edge()) || !std::isfinite(b.right_edge())) {
            add(ViolationKind::NonFiniteValue, i, id + " has non-finite height or edges");
            continue;
        }
        if (!(b.width > 0.0)) {
            add(ViolationKind::NonPositiveWidth, i, id + " has non-positive width " + fmt(b.width));
            continue;
        }
        if (beyond(0.0, b.left_edge())) {
            add(ViolationKind::BeforeLeftMedium, i,
                id + " starts before the left medium (left edge " + fmt(b.left_edge()) + " < 0)");
        }
        if (std::isfinite(s.span) && beyond(b.right_edge(), s.span)) {
            add(ViolationKind::ExceedsSpan, i,
                id + " exceeds span (right edge " + fmt(b.right_edge()) + " > " + fmt(s.span) + ")");
        }
        if (i + 1 < s.size()) {
            const Barrier& next = s.barriers[i + 1];
            if (std::isfinite(next.left_edge()) && beyond(b.right_edge(), next.left_edge())) {
                add(ViolationKind::Overlap, i,
                    "overlap between barriers " + std::to_string(i + 1) + " and " + std::to_string(i + 2) +
                        " (right edge " + fmt(b.right_edge()) + " > left edge " + fmt(next.left_edge()) + ")");
            }
        }
    }
    return rep;
}

const LayeredStructure& require_valid(const LayeredStructure& s)
{
    auto rep = validate_structure(s);
    if (!rep.ok()) {
        throw ValidationError(std::move(rep));
    }
    return s;
}

cplx wavenumber(double energy, double potential)
{
    const double radicand = energy - potential;
    if (radicand >= 0.0) {
        return {std::sqrt(radicand), 0.0};
    }
    return {0.0, std::sqrt(-radicand)};
}

WaveNumberSet compute_wavenumbers(const LayeredStructure& s, double energy)
{
    if (!std::isfinite(energy)) {
        throw DomainError("energy must be finite");
    }
    WaveNumberSet w;
    w.energy = energy;
    w.k_left = wavenumber(energy, s.v_left);
    w.k_right = wavenumber(energy, s.v_right);
    w.k_gap = wavenumber(energy, 0.0);
    w.k_barrier.reserve(s.size());
    for (const auto& b : s.barriers) {
        w.k_barrier.push_back(wavenumber(energy, b.height));
    }
    return w;
}

}  // namespace layerwave
