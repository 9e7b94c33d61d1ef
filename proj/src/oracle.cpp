#include "layerwave/oracle.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace layerwave {

namespace {

constexpr cplx I{0.0, 1.0};
constexpr Eigen::Index none = -1;

// One region of the ansatz: forward/backward plane waves with wavenumber k.
// Columns refer to unknowns; `incident` marks the fixed unit forward wave.
struct Region {
    cplx k;
    Eigen::Index fwd = none;
    Eigen::Index back = none;
    bool incident = false;
};

std::vector<Region> regions_of(const LayeredStructure& s, const WaveNumberSet& w)
{
    const auto n_bar = static_cast<Eigen::Index>(s.size());
    std::vector<Region> out;
    out.push_back({w.k_left, none, 0, true});
    for (Eigen::Index n = 0; n < n_bar; ++n) {
        out.push_back({w.k_gap, 1 + 4 * n, 2 + 4 * n});
        out.push_back({w.k_barrier[static_cast<std::size_t>(n)], 3 + 4 * n, 4 + 4 * n});
    }
    out.push_back({w.k_gap, 1 + 4 * n_bar, 2 + 4 * n_bar});
    out.push_back({w.k_right, 3 + 4 * n_bar, none});
    return out;
}

std::vector<double> interface_points(const LayeredStructure& s)
{
    std::vector<double> p{0.0};
    for (const auto& b : s.barriers) {
        p.push_back(b.left_edge());
        p.push_back(b.right_edge());
    }
    p.push_back(s.span);
    return p;
}

}  // namespace

MatchingSystem assemble_matching_system(const LayeredStructure& s, double energy)
{
    require_valid(s);
    const WaveNumberSet w = compute_wavenumbers(s, energy);
    const auto regions = regions_of(s, w);
    const auto points = interface_points(s);
    const auto size = static_cast<Eigen::Index>(4 * s.size() + 4);

    MatchingSystem m;
    m.matrix = Eigen::MatrixXcd::Zero(size, size);
    m.rhs = Eigen::VectorXcd::Zero(size);

    for (std::size_t j = 0; j < points.size(); ++j) {
        const double x = points[j];
        const auto value_row = static_cast<Eigen::Index>(2 * j);
        const auto slope_row = value_row + 1;
        // Left region enters with +, right region with -. The derivative row
        // drops the common factor i.
        for (int side = 0; side < 2; ++side) {
            const Region& reg = regions[j + static_cast<std::size_t>(side)];
            const double sign = side == 0 ? 1.0 : -1.0;
            const cplx ef = std::exp(I * reg.k * x);
            const cplx eb = std::exp(-I * reg.k * x);
            if (reg.fwd != none) {
                m.matrix(value_row, reg.fwd) += sign * ef;
                m.matrix(slope_row, reg.fwd) += sign * reg.k * ef;
            }
            if (reg.back != none) {
                m.matrix(value_row, reg.back) += sign * eb;
                m.matrix(slope_row, reg.back) -= sign * reg.k * eb;
            }
            if (reg.incident) {
                m.rhs(value_row) -= sign * ef;
                m.rhs(slope_row) -= sign * reg.k * ef;
            }
        }
    }
    return m;
}

OracleSolution solve_matching_system(const MatchingSystem& m)
{
    const Eigen::Index n = m.matrix.rows();
    Eigen::VectorXd row_scale(n), col_scale(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double big = m.matrix.row(i).cwiseAbs().maxCoeff();
        row_scale(i) = big > 0.0 ? 1.0 / big : 1.0;
    }
    Eigen::MatrixXcd scaled = row_scale.asDiagonal() * m.matrix;
    for (Eigen::Index j = 0; j < n; ++j) {
        const double big = scaled.col(j).cwiseAbs().maxCoeff();
        col_scale(j) = big > 0.0 ? 1.0 / big : 1.0;
    }
    scaled = scaled * col_scale.asDiagonal();
    const Eigen::VectorXcd rhs = row_scale.asDiagonal() * m.rhs;

    const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(scaled);
    const double rcond = lu.rcond();
    const double cond = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
    if (!(cond <= oracle_condition_limit)) {
        std::ostringstream msg;
        msg << "matching system is near-degenerate (condition estimate " << cond << ")";
        throw DegenerateError(msg.str());
    }
    Eigen::VectorXcd y = lu.solve(rhs);
    y += lu.solve(rhs - scaled * y);
    const Eigen::VectorXcd x = col_scale.asDiagonal() * y;

    OracleSolution out;
    out.condition_estimate = cond;
    const double bnorm = m.rhs.cwiseAbs().maxCoeff();
    out.residual = (m.matrix * x - m.rhs).cwiseAbs().maxCoeff() / (bnorm > 0.0 ? bnorm : 1.0);

    const Eigen::Index n_bar = (n - 4) / 4;
    out.R = x(0);
    for (Eigen::Index g = 0; g <= n_bar; ++g) {
        out.a.push_back(x(1 + 4 * g));
        out.b.push_back(x(2 + 4 * g));
    }
    for (Eigen::Index k = 0; k < n_bar; ++k) {
        out.c.push_back(x(3 + 4 * k));
        out.d.push_back(x(4 + 4 * k));
    }
    out.T = x(3 + 4 * n_bar);
    return out;
}

OracleSolution oracle_solve(const LayeredStructure& s, double energy)
{
    return solve_matching_system(assemble_matching_system(s, energy));
}

namespace {

double pair_discrepancy(cplx x1, cplx y1, cplx x2, cplx y2)
{
    const double scale = std::max({std::abs(x1), std::abs(y1), std::abs(x2), std::abs(y2)});
    if (scale == 0.0) {
        return 0.0;
    }
    return std::max(std::abs(x1 - x2), std::abs(y1 - y2)) / scale;
}

}  // namespace

Discrepancy compare_to_oracle(const ScatteringSolution& sol, const OracleSolution& ref)
{
    Discrepancy out;
    auto record = [&out](double value, const std::string& name) {
        if (!(value <= out.max_relative)) {  // NaN counts as worst
            out.max_relative = std::isnan(value) ? std::numeric_limits<double>::infinity() : value;
            out.worst = name;
        }
    };

    record(pair_discrepancy(1.0, sol.embedded.R_full, 1.0, ref.R), "R");
    record(pair_discrepancy(sol.embedded.T_full, 0.0, ref.T, 0.0), "T");

    // Compare local amplitudes (coefficient times basis function at the
    // region's left boundary) so evanescent regions are judged by the wave
    // actually present there.
    const auto& pts = sol.interfaces;
    const cplx k0 = sol.k.k_gap;
    for (std::size_t g = 0; g < sol.a.size(); ++g) {
        const double x = pts[2 * g];
        const cplx ef = std::exp(I * k0 * x);
        const cplx eb = std::exp(-I * k0 * x);
        record(pair_discrepancy(sol.a[g] * ef, sol.b[g] * eb, ref.a[g] * ef, ref.b[g] * eb),
               "a/b" + std::to_string(g + 1));
    }
    for (std::size_t n = 0; n < sol.c.size(); ++n) {
        const double x = pts[2 * n + 1];
        const cplx k = sol.k.k_barrier[n];
        const cplx ef = std::exp(I * k * x);
        const cplx eb = std::exp(-I * k * x);
        record(pair_discrepancy(sol.c[n] * ef, sol.d[n] * eb, ref.c[n] * ef, ref.d[n] * eb),
               "c/d" + std::to_string(n + 1));
    }
    return out;
}

double oracle_tolerance(const OracleSolution& ref)
{
    return ref.condition_estimate > 1e8 ? 1e-6 : 1e-9;
}

}  // namespace layerwave
