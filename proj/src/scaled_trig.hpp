#pragma once

#include <cmath>
#include <complex>

namespace layerwave::detail {

// cos z and sin z as mantissa * exp(log_scale). Beyond |Im z| = 30 the
// growing exponential is factored out so thick evanescent layers cannot
// overflow.
struct ScaledTrig {
    std::complex<double> cos_m;
    std::complex<double> sin_m;
    double log_scale = 0.0;
};

inline ScaledTrig scaled_cos_sin(std::complex<double> z)
{
    constexpr double threshold = 30.0;
    const double s = std::abs(z.imag());
    if (s <= threshold) {
        return {std::cos(z), std::sin(z), 0.0};
    }
    const std::complex<double> i{0.0, 1.0};
    const auto up = std::exp(i * z - s);
    const auto down = std::exp(-i * z - s);
    return {0.5 * (up + down), (up - down) / (2.0 * i), s};
}

}  // namespace layerwave::detail
