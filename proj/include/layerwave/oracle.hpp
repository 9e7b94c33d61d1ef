#pragma once

// Brute-force reference: the full set of value/derivative matching conditions
// for the piecewise plane-wave ansatz, solved densely. Independent of the
// transfer-matrix pipeline; used to verify it.

#include "layerwave/wavefunction.hpp"

#include <Eigen/Core>

namespace layerwave {

// Unknowns ordered [R, a1, b1, c1, d1, ..., cN, dN, a_{N+1}, b_{N+1}, T];
// two rows (value, derivative) per interface, 4N + 4 in total.
struct MatchingSystem {
    Eigen::MatrixXcd matrix;
    Eigen::VectorXcd rhs;
};

MatchingSystem assemble_matching_system(const LayeredStructure& s, double energy);

struct OracleSolution {
    cplx R, T;
    std::vector<cplx> a, b, c, d;
    double condition_estimate = 0.0;  // 1-norm estimate of the equilibrated system
    double residual = 0.0;            // ||A x - b||_inf / ||b||_inf on the raw system
};

inline constexpr double oracle_condition_limit = 1e12;

// Equilibrated partial-pivoting LU with one step of iterative refinement.
// Throws DegenerateError if the condition estimate exceeds 1e12.
OracleSolution solve_matching_system(const MatchingSystem& m);

OracleSolution oracle_solve(const LayeredStructure& s, double energy);

struct Discrepancy {
    double max_relative = 0.0;
    std::string worst;  // which coefficient, e.g. "c3"
};

// Largest disagreement between pipeline and oracle. Each coefficient pair of
// a region (R with the unit incident term, a_n with b_n, c_n with d_n, T
// alone) is compared relative to the larger magnitude in that pair.
Discrepancy compare_to_oracle(const ScatteringSolution& sol, const OracleSolution& ref);

// Tolerance to apply for a given oracle: 1e-9, or 1e-6 when the condition
// estimate exceeds 1e8.
double oracle_tolerance(const OracleSolution& ref);

}  // namespace layerwave
