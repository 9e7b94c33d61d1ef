#include "layerwave/scenarios.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace layerwave {

namespace {

double sq(double x)
{
    return x * x;
}

// clang-format off
const ChainFormula fig4a{2.0, 1.0, 0.75, 0.75, 9.0,
    [](int n, int) { return (80.0 + 7.0 * n) / 20.0; },
    [](int n) { return (10.0 + n) / 10.0; },
    [](int n) { return (10.0 - n) / 10.0; }};

const ChainFormula fig4b{2.0, 1.0, 0.75, 0.75, 3.5,
    [](int n, int) { return (n * n) / 20.0; },
    [](int n) { return (10.0 + n * n) / 10.0; },
    [](int n) { return (10.0 + n) / 10.0; }};

const ChainFormula fig4c{0.5, 0.75, 1.0, 1.0, 1.3,
    [](int n, int m) { return (7.0 * n * (m - n + 1)) / 200.0; },
    [](int n) { return (2.0 * n + n * n) / 10.0; },
    [](int n) { return (n * n) / 10.0; }};

const ChainFormula fig4d{0.5, 0.75, 1.0, 1.0, 5.0,
    [](int n, int) { return 4.0 * sq(std::sin(static_cast<double>(n))); },
    [](int) { return 1.0; },
    [](int) { return 1.0; }};
// clang-format on

double take(ScenarioParams& p, const std::string& key, double fallback)
{
    auto it = p.find(key);
    if (it == p.end()) {
        return fallback;
    }
    const double v = it->second;
    p.erase(it);
    return v;
}

int take_count(ScenarioParams& p, const std::string& key, int fallback)
{
    const double v = take(p, key, fallback);
    if (!(v >= 1.0) || v != std::floor(v) || v > 1e7) {
        throw DomainError("parameter " + key + " must be a positive integer");
    }
    return static_cast<int>(v);
}

void reject_leftovers(const std::string& name, const ScenarioParams& p)
{
    if (!p.empty()) {
        throw DomainError("unknown parameter '" + p.begin()->first + "' for scenario " + name);
    }
}

Scenario periodic_scenario(ScenarioParams p)
{
    PeriodicLattice lat;
    lat.barrier_height = take(p, "U", 3.0);
    lat.barrier_width = take(p, "d", 1.0);
    lat.period = take(p, "a", 2.0);
    lat.count = static_cast<std::size_t>(take_count(p, "N", 8));
    lat.first_center = take(p, "x1", lat.period - 0.5 * lat.barrier_width);
    const double v_left = take(p, "v_left", 0.0);
    const double v_right = take(p, "v_right", 0.0);
    reject_leftovers("periodic", p);
    validate_lattice(lat);

    Scenario sc;
    sc.name = "periodic";
    sc.structure = lat.to_structure(v_left, v_right);
    sc.default_energy = 4.6;
    sc.unit_label = "d";
    sc.lattice = lat;
    return sc;
}

Scenario chain_scenario(const std::string& name, ScenarioParams p)
{
    const ChainFormula& f = chain_formula(name);
    const int count = take_count(p, "N", 8);
    const int m = take_count(p, "m", count);
    reject_leftovers(name, p);

    Scenario sc;
    sc.name = name;
    sc.default_energy = f.energy;
    sc.unit_label = "s";
    LayeredStructure& s = sc.structure;
    s.v_left = f.v_left;
    s.v_right = f.v_right;
    double edge = f.margin_left;
    for (int n = 1; n <= count; ++n) {
        const double w = f.width(n);
        s.barriers.push_back({f.height(n, m), w, edge + 0.5 * w});
        edge += w;
        if (n < count) {
            edge += f.gap(n);
        }
    }
    s.span = edge + f.margin_right;
    require_valid(s);
    return sc;
}

}  // namespace

std::vector<std::string> scenario_names()
{
    return {"periodic", "fig4a", "fig4b", "fig4c", "fig4d"};
}

const ChainFormula& chain_formula(const std::string& name)
{
    if (name == "fig4a") {
        return fig4a;
    }
    if (name == "fig4b") {
        return fig4b;
    }
    if (name == "fig4c") {
        return fig4c;
    }
    if (name == "fig4d") {
        return fig4d;
    }
    throw DomainError("unknown chain scenario '" + name + "'");
}

Scenario make_scenario(const std::string& name, const ScenarioParams& params)
{
    if (name == "periodic") {
        return periodic_scenario(params);
    }
    if (name == "fig4a" || name == "fig4b" || name == "fig4c" || name == "fig4d") {
        return chain_scenario(name, params);
    }
    throw DomainError("unknown scenario '" + name + "' (expected periodic, fig4a, fig4b, fig4c or fig4d)");
}

Scenario make_scenario_from_spec(const std::string& spec)
{
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    ScenarioParams params;
    if (colon != std::string::npos) {
        std::istringstream rest(spec.substr(colon + 1));
        std::string item;
        while (std::getline(rest, item, ',')) {
            if (item.empty()) {
                continue;
            }
            const auto eq = item.find('=');
            if (eq == std::string::npos || eq == 0) {
                throw DomainError("scenario parameter '" + item + "' is not key=value");
            }
            const std::string key = item.substr(0, eq);
            const std::string value = item.substr(eq + 1);
            double v = 0.0;
            const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
            if (ec != std::errc{} || end != value.data() + value.size() || value.empty()) {
                throw DomainError("scenario parameter '" + key + "' has non-numeric value '" + value + "'");
            }
            params[key] = v;
        }
    }
    return make_scenario(name, params);
}

}  // namespace layerwave
