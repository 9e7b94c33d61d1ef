#include "layerwave/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace layerwave {

namespace {

constexpr cplx I{0.0, 1.0};

}  // namespace

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

// A coefficient pair with absolute error bounds from a first-order rounding
// analysis. Only used to decide which of two evaluations to trust.
struct Bounded {
    cplx f, g;
    double ef = 0.0, eg = 0.0;

    double error() const { return std::max(ef, eg); }
};

// Gap coefficients from the left: prefix amplitudes combined with R. Deep in
// an opaque stack both terms are large and cancel.
std::vector<Bounded> gaps_from_left(const PrefixAmplitudes& prefix, const InterfaceAmplitudes& iface,
                                    const EmbeddedAmplitudes& embedded, const WaveNumberSet& w)
{
    if (w.k_gap == cplx{}) {
        throw DegenerateError("zero energy in the gap regions (k0 = 0)");
    }
    const InterfacePair& l = iface.left;
    const cplx inv_tl = 1.0 / l.t;
    const cplx inv_tl_rev = 1.0 / l.t_rev;
    const cplx rl_t = l.r / l.t;
    const cplx rl_t_rev = l.r_rev / l.t_rev;
    const cplx ratio = w.k_left / w.k_gap;
    const cplx R = embedded.R_full;
    const double steps = static_cast<double>(prefix.entries.size());
    const double err_r = 16.0 * steps * eps * std::max(1.0, std::abs(R));

    std::vector<Bounded> out;
    out.reserve(prefix.entries.size());
    for (std::size_t n = 0; n < prefix.entries.size(); ++n) {
        // Prefix of the barriers to the left of gap n + 1.
        const Transfer& p = prefix.entries[n];
        const double scale = std::abs(ratio) * std::exp(p.log_scale);
        const double rel = 16.0 * static_cast<double>(n + 1) * eps;

        const cplx a1 = inv_tl_rev * p.inv_t_rev + rl_t * p.r_over_t_rev;
        const cplx a2 = rl_t_rev * p.inv_t_rev + inv_tl * p.r_over_t_rev;
        const cplx b1 = inv_tl_rev * p.r_over_t + rl_t * p.inv_t;
        const cplx b2 = rl_t_rev * p.r_over_t + inv_tl * p.inv_t;
        const double ma1 = std::abs(inv_tl_rev * p.inv_t_rev) + std::abs(rl_t * p.r_over_t_rev);
        const double ma2 = std::abs(rl_t_rev * p.inv_t_rev) + std::abs(inv_tl * p.r_over_t_rev);
        const double mb1 = std::abs(inv_tl_rev * p.r_over_t) + std::abs(rl_t * p.inv_t);
        const double mb2 = std::abs(rl_t_rev * p.r_over_t) + std::abs(inv_tl * p.inv_t);

        const cplx s = ratio * std::exp(p.log_scale);
        Bounded v{s * (a1 - a2 * R), s * (-b1 + b2 * R)};
        v.ef = scale * (rel * (ma1 + ma2 * std::abs(R)) + ma2 * err_r);
        v.eg = scale * (rel * (mb1 + mb2 * std::abs(R)) + mb2 * err_r);
        out.push_back(v);
    }
    return out;
}

// Coefficients on the far side of an interface at x, from those of the
// region with wavenumber k_from; value and derivative are continuous.
Bounded cross(const Bounded& in, cplx k_from, cplx k_to, double x)
{
    if (k_to == cplx{}) {
        throw DegenerateError("zero wavenumber at an interface");
    }
    const cplx q = k_from / k_to;
    const cplx ef = std::exp(I * k_from * x);
    const cplx eb = std::exp(-I * k_from * x);
    const cplx tf = std::exp(-I * k_to * x);
    const cplx tb = std::exp(I * k_to * x);
    const cplx P = in.f * ef;
    const cplx Q = in.g * eb;
    Bounded out{0.5 * tf * ((1.0 + q) * P + (1.0 - q) * Q), 0.5 * tb * ((1.0 - q) * P + (1.0 + q) * Q)};

    // exp loses about |arg| ulps of relative accuracy.
    const double rel = eps * (8.0 + std::abs(k_from * x) + std::abs(k_to * x));
    const double sp = std::abs(1.0 + q);
    const double sm = std::abs(1.0 - q);
    const double mf = 0.5 * std::abs(tf);
    const double mb = 0.5 * std::abs(tb);
    const double pe = std::abs(ef) * in.ef;
    const double qe = std::abs(eb) * in.eg;
    out.ef = mf * (sp * pe + sm * qe + rel * (sp * std::abs(P) + sm * std::abs(Q)));
    out.eg = mb * (sm * pe + sp * qe + rel * (sm * std::abs(P) + sp * std::abs(Q)));
    return out;
}

}  // namespace

GapCoefficients gap_coefficients(const PrefixAmplitudes& prefix, const InterfaceAmplitudes& iface,
                                 const EmbeddedAmplitudes& embedded, const WaveNumberSet& w)
{
    GapCoefficients out;
    for (const Bounded& v : gaps_from_left(prefix, iface, embedded, w)) {
        out.a.push_back(v.f);
        out.b.push_back(v.g);
    }
    return out;
}

BarrierCoefficients barrier_coefficients(const GapCoefficients& gap, const InterfaceAmplitudes& iface,
                                         const WaveNumberSet& w)
{
    BarrierCoefficients out;
    const std::size_t count = iface.gap_to_barrier.size();
    out.c.reserve(count);
    out.d.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        const cplx kn = w.k_barrier[n];
        if (kn == cplx{}) {
            throw DegenerateError("barrier " + std::to_string(n + 1) + ": energy equals the barrier height (k = 0)");
        }
        const InterfacePair& f = iface.gap_to_barrier[n];
        const cplx ratio = w.k_gap / kn;
        out.c.push_back(ratio * (gap.a[n] / f.t_rev - gap.b[n] * f.r_rev / f.t_rev));
        out.d.push_back(ratio * (-gap.a[n] * f.r / f.t + gap.b[n] / f.t));
    }
    return out;
}

ScatteringSolution assemble_solution(const LayeredStructure& s, const ScatteringAmplitudes& amps)
{
    ScatteringSolution sol;
    sol.structure = s;
    sol.k = amps.k;
    sol.embedded = amps.embedded;

    // Each region is evaluated from both ends: from the left with R, and by
    // crossing interfaces backwards from T. The pair with the smaller error
    // bound is kept; the left evaluation cancels deep in opaque stacks, the
    // backward one near strong resonances.
    const WaveNumberSet& w = amps.k;
    const std::size_t count = s.size();
    for (std::size_t n = 0; n < count; ++n) {
        if (w.k_barrier[n] == cplx{}) {
            throw DegenerateError("barrier " + std::to_string(n + 1) + ": energy equals the barrier height (k = 0)");
        }
    }
    const std::vector<Bounded> left_gaps = gaps_from_left(amps.prefix, amps.iface, amps.embedded, w);
    std::vector<Bounded> left_bars;
    left_bars.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        left_bars.push_back(cross(left_gaps[n], w.k_gap, w.k_barrier[n], s.barriers[n].left_edge()));
    }

    const cplx T = amps.embedded.T_full;
    Bounded right{T, 0.0, 16.0 * static_cast<double>(count + 1) * eps * std::abs(T), 0.0};
    std::vector<Bounded> right_gaps(count + 1);
    std::vector<Bounded> right_bars(count);
    right_gaps[count] = cross(right, w.k_right, w.k_gap, s.span);
    for (std::size_t n = count; n-- > 0;) {
        right_bars[n] = cross(right_gaps[n + 1], w.k_gap, w.k_barrier[n], s.barriers[n].right_edge());
        right_gaps[n] = cross(right_bars[n], w.k_barrier[n], w.k_gap, s.barriers[n].left_edge());
    }

    auto pick = [](const Bounded& l, const Bounded& r) { return r.error() < l.error() ? r : l; };
    for (std::size_t n = 0; n <= count; ++n) {
        const Bounded v = pick(left_gaps[n], right_gaps[n]);
        sol.a.push_back(v.f);
        sol.b.push_back(v.g);
    }
    for (std::size_t n = 0; n < count; ++n) {
        const Bounded v = pick(left_bars[n], right_bars[n]);
        sol.c.push_back(v.f);
        sol.d.push_back(v.g);
    }

    sol.interfaces.reserve(2 * s.size() + 2);
    sol.interfaces.push_back(0.0);
    for (const auto& b : s.barriers) {
        sol.interfaces.push_back(b.left_edge());
        sol.interfaces.push_back(b.right_edge());
    }
    sol.interfaces.push_back(s.span);
    // Touching barriers may disagree in the last bit; keep the list sorted.
    for (std::size_t j = 1; j < sol.interfaces.size(); ++j) {
        sol.interfaces[j] = std::max(sol.interfaces[j], sol.interfaces[j - 1]);
    }
    return sol;
}

ScatteringSolution solve_scattering(const LayeredStructure& s, double energy)
{
    return assemble_solution(s, compute_amplitudes(s, energy));
}

std::size_t region_of(const ScatteringSolution& sol, double x)
{
    return static_cast<std::size_t>(std::upper_bound(sol.interfaces.begin(), sol.interfaces.end(), x) -
                                    sol.interfaces.begin());
}

namespace {

PsiValue plane_pair(cplx fwd, cplx back, cplx k, double x)
{
    const cplx ef = std::exp(I * k * x);
    const cplx eb = std::exp(-I * k * x);
    return {fwd * ef + back * eb, I * k * (fwd * ef - back * eb)};
}

}  // namespace

PsiValue evaluate_in_region(const ScatteringSolution& sol, std::size_t region, double x)
{
    const std::size_t last = sol.region_count() - 1;
    if (region == 0) {
        return plane_pair(1.0, sol.embedded.R_full, sol.k.k_left, x);
    }
    if (region >= last) {
        return plane_pair(sol.embedded.T_full, 0.0, sol.k.k_right, x);
    }
    if (region % 2 == 1) {
        const std::size_t n = (region - 1) / 2;
        return plane_pair(sol.a[n], sol.b[n], sol.k.k_gap, x);
    }
    const std::size_t n = region / 2 - 1;
    return plane_pair(sol.c[n], sol.d[n], sol.k.k_barrier[n], x);
}

PsiValue evaluate(const ScatteringSolution& sol, double x)
{
    return evaluate_in_region(sol, region_of(sol, x), x);
}

cplx evaluate_psi(const ScatteringSolution& sol, double x)
{
    return evaluate(sol, x).psi;
}

std::vector<DensitySample> sample_density(const ScatteringSolution& sol, std::span<const double> grid)
{
    if (!std::is_sorted(grid.begin(), grid.end())) {
        throw DomainError("sampling grid must be sorted ascending");
    }
    std::vector<DensitySample> out;
    out.reserve(grid.size());
    for (double x : grid) {
        const cplx psi = evaluate_psi(sol, x);
        out.push_back({x, psi, std::norm(psi)});
    }
    return out;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t points)
{
    std::vector<double> g;
    if (points == 0) {
        return g;
    }
    g.reserve(points);
    if (points == 1) {
        g.push_back(lo);
        return g;
    }
    const double step = (hi - lo) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i + 1 < points; ++i) {
        g.push_back(lo + step * static_cast<double>(i));
    }
    g.push_back(hi);
    return g;
}

std::vector<double> default_grid(const ScatteringSolution& sol, std::size_t min_points)
{
    const double span = sol.structure.span;
    const double lo = -0.2 * span;
    const double hi = 1.2 * span;

    double kmax = std::max({std::abs(sol.k.k_left.real()), std::abs(sol.k.k_right.real()),
                            std::abs(sol.k.k_gap.real())});
    for (const auto& k : sol.k.k_barrier) {
        kmax = std::max(kmax, std::abs(k.real()));
    }
    std::size_t points = min_points;
    if (kmax > 0.0) {
        const double step = 2.0 * std::numbers::pi / kmax / 40.0;
        points = std::max(points, static_cast<std::size_t>(std::ceil((hi - lo) / step)) + 1);
    }
    return uniform_grid(lo, hi, points);
}

}  // namespace layerwave
