#pragma once

// Parametric structure generators: the ideal periodic lattice and four
// graded / modulated chains between dissimilar media.
//
//   periodic  U, d, a, N, x1 (defaults 3, 1, 2, 8, a - d/2), media at 0
//   fig4a     U_n = 4 + 0.35 n      d_n = 1 + 0.1 n      gap_n = 1 - 0.1 n
//   fig4b     U_n = 0.05 n^2        d_n = 1 + 0.1 n^2    gap_n = 1 + 0.1 n
//   fig4c     U_n = 0.035 n(m-n+1)  d_n = 0.2 n + 0.1 n^2  gap_n = 0.1 n^2
//   fig4d     U_n = 4 sin^2 n       d_n = 1              gap_n = 1
//
// gap_n is the free space between barriers n and n+1. Rational formulas are
// evaluated as a single division of exact integers, so every value is the
// correctly rounded rational.

#include "layerwave/periodic.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace layerwave {

using ScenarioParams = std::map<std::string, double>;

struct Scenario {
    std::string name;
    LayeredStructure structure;
    double default_energy = 0.0;
    std::string unit_label;
    std::optional<PeriodicLattice> lattice;  // set for `periodic`
};

std::vector<std::string> scenario_names();

// Throws DomainError for unknown names or parameters.
Scenario make_scenario(const std::string& name, const ScenarioParams& params = {});

// Parses "name" or "name:key=value,key=value".
Scenario make_scenario_from_spec(const std::string& spec);

// Graded chain parameters (1-based n), exposed for verification.
struct ChainFormula {
    double v_left;
    double v_right;
    double margin_left;
    double margin_right;
    double energy;
    double (*height)(int n, int m);
    double (*width)(int n);
    double (*gap)(int n);
};

const ChainFormula& chain_formula(const std::string& name);

}  // namespace layerwave
