#include "layerwave/commands.hpp"

#include "layerwave/wavefunction.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>
#include <thread>

namespace layerwave {

namespace {

double parse_number(const std::string& text, const char* what)
{
    double v = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) {
        throw ParseError(std::string("energy range: ") + what + " '" + text + "' is not a number");
    }
    return v;
}

bool hits_degenerate(const LayeredStructure& s, double e)
{
    if (e == 0.0) {
        return true;
    }
    return std::any_of(s.barriers.begin(), s.barriers.end(), [e](const Barrier& b) { return b.height == e; });
}

}  // namespace

EnergyRange parse_energy_range(const std::string& text)
{
    const auto first = text.find(':');
    const auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
    if (second == std::string::npos) {
        throw ParseError("energy range must look like min:max:steps (got '" + text + "')");
    }
    EnergyRange r;
    r.lo = parse_number(text.substr(0, first), "min");
    r.hi = parse_number(text.substr(first + 1, second - first - 1), "max");
    const std::string steps = text.substr(second + 1);
    unsigned long long n = 0;
    const auto [end, ec] = std::from_chars(steps.data(), steps.data() + steps.size(), n);
    if (steps.empty() || ec != std::errc{} || end != steps.data() + steps.size() || n < 2) {
        throw ParseError("energy range: steps must be an integer >= 2 (got '" + steps + "')");
    }
    if (!(r.lo < r.hi)) {
        throw ParseError("energy range: min must be smaller than max");
    }
    r.steps = static_cast<std::size_t>(n);
    return r;
}

WavefunctionReport run_wavefunction(const LayeredStructure& s, double energy, std::optional<std::size_t> grid_points,
                                    std::ostream& csv)
{
    if (!(energy > s.v_left)) {
        throw DomainError("energy must exceed the left medium potential for an incident propagating wave");
    }
    const ScatteringSolution sol = solve_scattering(s, energy);
    std::vector<double> grid;
    if (grid_points) {
        grid = uniform_grid(-0.2 * s.span, 1.2 * s.span, std::max<std::size_t>(*grid_points, 2));
    }
    else {
        grid = default_grid(sol);
    }
    const auto samples = sample_density(sol, grid);

    csv << "x,re_psi,im_psi,abs2_psi\n";
    for (const auto& p : samples) {
        csv << format_double(p.x) << ',' << format_double(p.psi.real()) << ',' << format_double(p.psi.imag()) << ','
            << format_double(p.abs2) << '\n';
    }

    WavefunctionReport rep;
    rep.transmission = transmission_probability(sol.embedded, sol.k);
    rep.reflection = reflection_probability(sol.embedded, sol.k);
    rep.rows = samples.size();
    return rep;
}

SweepResult run_sweep(const LayeredStructure& s, const EnergyRange& range, unsigned threads)
{
    require_valid(s);
    if (!(range.lo > s.v_left)) {
        throw DomainError("sweep must start above the left medium potential");
    }
    if (range.steps < 2) {
        throw DomainError("sweep needs at least two energies");
    }

    SweepResult out;
    std::vector<double> energies(range.steps);
    const double step = (range.hi - range.lo) / static_cast<double>(range.steps - 1);
    for (std::size_t i = 0; i < range.steps; ++i) {
        energies[i] = i + 1 == range.steps ? range.hi : range.lo + step * static_cast<double>(i);
        if (hits_degenerate(s, energies[i])) {
            std::ostringstream note;
            note.precision(17);
            note << "energy " << energies[i] << " hits k = 0; evaluated at +" << energy_nudge;
            out.notes.push_back(note.str());
            energies[i] += energy_nudge;
        }
    }

    out.rows.resize(energies.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const auto amps = compute_amplitudes(s, energies[i]);
            out.rows[i] = {energies[i], transmission_probability(amps.embedded, amps.k),
                           reflection_probability(amps.embedded, amps.k)};
        }
    };

    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, energies.size() / 64 + 1));
    if (threads <= 1) {
        work(0, energies.size());
        return out;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    const std::size_t chunk = (energies.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const std::size_t begin = t * chunk;
        const std::size_t end = std::min(energies.size(), begin + chunk);
        pool.emplace_back([&, t, begin, end] {
            try {
                work(begin, end);
            }
            catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return out;
}

void write_sweep_csv(const SweepResult& sweep, std::ostream& csv)
{
    csv << "epsilon,T_prob,R_prob\n";
    for (const auto& r : sweep.rows) {
        csv << format_double(r.energy) << ',' << format_double(r.transmission) << ',' << format_double(r.reflection)
            << '\n';
    }
}

BandTable run_bands(const PeriodicLattice& lat, const EnergyRange& range, std::ostream& csv)
{
    const double resolution = (range.hi - range.lo) / static_cast<double>(range.steps - 1);
    BandTable table = band_scan(lat, range.lo, range.hi, resolution);
    csv << "epsilon,cos_beta,band\n";
    for (const auto& p : table.samples) {
        csv << format_double(p.energy) << ',' << format_double(p.cos_beta) << ',' << to_string(p.classification)
            << '\n';
    }
    return table;
}

OracleCheck run_oracle_check(const LayeredStructure& s, double energy)
{
    const ScatteringSolution sol = solve_scattering(s, energy);
    const OracleSolution ref = oracle_solve(s, energy);
    OracleCheck out;
    out.discrepancy = compare_to_oracle(sol, ref);
    out.tolerance = oracle_tolerance(ref);
    out.condition_estimate = ref.condition_estimate;
    out.residual = ref.residual;
    return out;
}

}  // namespace layerwave
