#pragma once

#include "layerwave/core.hpp"

#include <cmath>
#include <random>

namespace layerwave::testing {

struct Case {
    LayeredStructure structure;
    double energy;
};

struct RandomCaseOptions {
    int max_barriers = 10;
    double height_lo = -5.0;
    double height_hi = 5.0;
    double width_lo = 0.2;
    double width_hi = 2.0;
    double max_gap = 1.5;
    double media_lo = -3.0;
    double media_hi = 3.0;
    bool same_media = false;  // V1 = V2 = 0
};

// Keeps every wavenumber at least this far (in energy) from zero.
inline constexpr double degeneracy_margin = 1e-3;

inline bool near_degenerate(const LayeredStructure& s, double e)
{
    if (std::abs(e) < degeneracy_margin || std::abs(e - s.v_right) < degeneracy_margin) {
        return true;
    }
    for (const auto& b : s.barriers) {
        if (std::abs(e - b.height) < degeneracy_margin) {
            return true;
        }
    }
    return false;
}

inline Case random_case(std::mt19937_64& rng, const RandomCaseOptions& o = {})
{
    std::uniform_int_distribution<int> count(0, o.max_barriers);
    std::uniform_real_distribution<double> height(o.height_lo, o.height_hi);
    std::uniform_real_distribution<double> width(o.width_lo, o.width_hi);
    std::uniform_real_distribution<double> gap(0.0, o.max_gap);
    std::uniform_real_distribution<double> media(o.media_lo, o.media_hi);
    std::uniform_real_distribution<double> above(0.1, 6.0);
    std::bernoulli_distribution touching(0.1);

    for (;;) {
        Case c;
        LayeredStructure& s = c.structure;
        if (!o.same_media) {
            s.v_left = media(rng);
            do {
                s.v_right = media(rng);
            } while (std::abs(s.v_right - s.v_left) < 0.05);
        }
        double edge = gap(rng);
        const int n = count(rng);
        for (int i = 0; i < n; ++i) {
            const double w = width(rng);
            s.barriers.push_back({height(rng), w, edge + 0.5 * w});
            edge += w;
            if (!touching(rng)) {
                edge += gap(rng);
            }
        }
        s.span = std::max(edge + gap(rng), 0.1);
        c.energy = s.v_left + above(rng);
        if (!near_degenerate(s, c.energy)) {
            return c;
        }
    }
}

}  // namespace layerwave::testing
