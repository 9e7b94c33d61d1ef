#include "layerwave/amplitudes.hpp"

#include "scaled_trig.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace layerwave {

namespace {

constexpr cplx I{0.0, 1.0};

}  // namespace

Eigen::Matrix2cd Transfer::mantissa() const
{
    Eigen::Matrix2cd m;
    m << inv_t_rev, -r_over_t_rev, -r_over_t, inv_t;
    return m;
}

Transfer Transfer::from_matrix(const Eigen::Matrix2cd& m, double log_scale)
{
    Transfer out;
    out.inv_t_rev = m(0, 0);
    out.r_over_t_rev = -m(0, 1);
    out.r_over_t = -m(1, 0);
    out.inv_t = m(1, 1);
    out.log_scale = log_scale;
    return out;
}

void Transfer::normalize()
{
    const double big = std::max({std::abs(inv_t), std::abs(r_over_t), std::abs(inv_t_rev), std::abs(r_over_t_rev)});
    if (big > 0.0 && std::isfinite(big)) {
        inv_t /= big;
        r_over_t /= big;
        inv_t_rev /= big;
        r_over_t_rev /= big;
        log_scale += std::log(big);
    }
}

Transfer compose(const Transfer& later, const Transfer& earlier)
{
    auto out = Transfer::from_matrix(later.mantissa() * earlier.mantissa(), later.log_scale + earlier.log_scale);
    out.normalize();
    return out;
}

InterfacePair interface_pair(cplx k_from, cplx k_to, double x, const char* what)
{
    const cplx sum = k_from + k_to;
    if (sum == cplx{}) {
        throw DegenerateError(std::string("degenerate ") + what + ": wavenumbers sum to zero");
    }
    auto one_way = [x](cplx kf, cplx kt, cplx denom) {
        return InterfacePair{2.0 * kf / denom * std::exp(I * (kf - kt) * x),
                             (kf - kt) / denom * std::exp(2.0 * I * kf * x), {}, {}};
    };
    const auto fwd = one_way(k_from, k_to, sum);
    const auto rev = one_way(-k_from, -k_to, -sum);
    return {fwd.t, fwd.r, rev.t, rev.r};
}

InterfaceAmplitudes interface_amplitudes(const WaveNumberSet& w, const LayeredStructure& s)
{
    InterfaceAmplitudes out;
    out.left = interface_pair(w.k_left, w.k_gap, 0.0, "left medium interface");
    out.right = interface_pair(w.k_gap, w.k_right, s.span, "right medium interface");
    out.gap_to_barrier.reserve(s.size());
    for (std::size_t n = 0; n < s.size(); ++n) {
        const std::string what = "interface of barrier " + std::to_string(n + 1);
        out.gap_to_barrier.push_back(
            interface_pair(w.k_gap, w.k_barrier[n], s.barriers[n].left_edge(), what.c_str()));
    }
    return out;
}

Transfer barrier_amplitudes(const WaveNumberSet& w, const LayeredStructure& s, std::size_t n)
{
    const Barrier& b = s.barriers.at(n);
    const cplx k0 = w.k_gap;
    const cplx k = w.k_barrier.at(n);
    if (k == cplx{}) {
        throw DegenerateError("barrier " + std::to_string(n + 1) +
                              ": energy equals the barrier height (k = 0); shift the energy slightly");
    }
    if (k0 == cplx{}) {
        throw DegenerateError("zero energy in the gap regions (k0 = 0)");
    }

    const auto trig = detail::scaled_cos_sin(k * b.width);
    const cplx twice = 2.0 * k * k0;
    const cplx sum_ratio = (k * k + k0 * k0) / twice;
    const cplx diff_ratio = (k * k - k0 * k0) / twice;

    // Negating k leaves cos(kd) and both ratios unchanged and flips sin(kd).
    Transfer out;
    out.inv_t = std::exp(I * k0 * b.width) * (trig.cos_m - I * sum_ratio * trig.sin_m);
    out.inv_t_rev = std::exp(-I * k0 * b.width) * (trig.cos_m + I * sum_ratio * trig.sin_m);
    out.r_over_t = I * std::exp(2.0 * I * k0 * b.center) * diff_ratio * trig.sin_m;
    out.r_over_t_rev = -I * std::exp(-2.0 * I * k0 * b.center) * diff_ratio * trig.sin_m;
    out.log_scale = trig.log_scale;
    return out;
}

BarrierAmplitudes all_barrier_amplitudes(const WaveNumberSet& w, const LayeredStructure& s)
{
    BarrierAmplitudes out;
    out.reserve(s.size());
    for (std::size_t n = 0; n < s.size(); ++n) {
        out.push_back(barrier_amplitudes(w, s, n));
    }
    return out;
}

PrefixAmplitudes prefix_by_recurrence(std::span<const Transfer> barriers)
{
    PrefixAmplitudes out;
    out.entries.reserve(barriers.size() + 1);

    // inv_T = 1/T, rev_R = R~/T~, inv_T_rev = 1/T~, R_T = R/T.
    Transfer state = Transfer::identity();
    out.entries.push_back(state);
    for (const Transfer& b : barriers) {
        Transfer next;
        next.inv_t = b.r_over_t * state.r_over_t_rev + b.inv_t * state.inv_t;
        next.r_over_t_rev = b.r_over_t_rev * state.inv_t + b.inv_t_rev * state.r_over_t_rev;
        next.inv_t_rev = b.r_over_t_rev * state.r_over_t + b.inv_t_rev * state.inv_t_rev;
        next.r_over_t = b.r_over_t * state.inv_t_rev + b.inv_t * state.r_over_t;
        next.log_scale = state.log_scale + b.log_scale;
        next.normalize();
        state = next;
        out.entries.push_back(state);
    }
    return out;
}

PrefixAmplitudes prefix_by_matrix(std::span<const Transfer> barriers)
{
    PrefixAmplitudes out;
    out.entries.reserve(barriers.size() + 1);

    Eigen::Matrix2cd acc = Eigen::Matrix2cd::Identity();
    double log_scale = 0.0;
    out.entries.push_back(Transfer::identity());
    for (const Transfer& b : barriers) {
        acc = b.mantissa() * acc;
        log_scale += b.log_scale;
        const double big = acc.cwiseAbs().maxCoeff();
        if (big > 0.0 && std::isfinite(big)) {
            acc /= big;
            log_scale += std::log(big);
        }
        out.entries.push_back(Transfer::from_matrix(acc, log_scale));
    }
    return out;
}

EmbeddedAmplitudes embed_in_media(const Transfer& p, const InterfaceAmplitudes& iface)
{
    const InterfacePair& l = iface.left;
    const InterfacePair& rt = iface.right;

    const cplx inv_tl = 1.0 / l.t;
    const cplx inv_tl_rev = 1.0 / l.t_rev;
    const cplx rl_t = l.r / l.t;
    const cplx rl_t_rev = l.r_rev / l.t_rev;
    const cplx inv_tr = 1.0 / rt.t;
    const cplx rr_t = rt.r / rt.t;

    const cplx inv_T = inv_tl * inv_tr * p.inv_t + rr_t * rl_t_rev * p.inv_t_rev + rl_t_rev * inv_tr * p.r_over_t +
                       rr_t * inv_tl * p.r_over_t_rev;
    const cplx R_over_T = inv_tl_rev * inv_tr * p.r_over_t + rr_t * rl_t * p.r_over_t_rev + rl_t * inv_tr * p.inv_t +
                          rr_t * inv_tl_rev * p.inv_t_rev;

    if (inv_T == cplx{} || !std::isfinite(std::abs(inv_T))) {
        throw DegenerateError("embedding produced a vanishing or non-finite 1/T; inputs are inconsistent");
    }
    return {std::exp(-p.log_scale) / inv_T, R_over_T / inv_T};
}

namespace {

void require_incident(const WaveNumberSet& w)
{
    if (w.k_left.imag() != 0.0 || !(w.k_left.real() > 0.0)) {
        throw DomainError("no propagating incident wave: energy must exceed the left medium potential");
    }
}

}  // namespace

double transmission_probability(const EmbeddedAmplitudes& e, const WaveNumberSet& w)
{
    require_incident(w);
    if (w.k_right.real() == 0.0) {
        return 0.0;
    }
    return w.k_right.real() / w.k_left.real() * std::norm(e.T_full);
}

double reflection_probability(const EmbeddedAmplitudes& e, const WaveNumberSet& w)
{
    require_incident(w);
    return std::norm(e.R_full);
}

ScatteringAmplitudes compute_amplitudes(const LayeredStructure& s, double energy)
{
    require_valid(s);
    ScatteringAmplitudes out;
    out.k = compute_wavenumbers(s, energy);
    if (out.k.k_gap == cplx{}) {
        throw DegenerateError("zero energy in the gap regions (k0 = 0)");
    }
    out.iface = interface_amplitudes(out.k, s);
    out.barriers = all_barrier_amplitudes(out.k, s);
    out.prefix = prefix_by_recurrence(out.barriers);
    out.embedded = embed_in_media(out.prefix.full(), out.iface);
    return out;
}

}  // namespace layerwave
