#include "layerwave/commands.hpp"
#include "layerwave/wavefunction.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace layerwave;

namespace {

enum ExitCode : int {
    exit_ok = 0,
    exit_other = 1,
    exit_input = 2,
    exit_degenerate = 3,
    exit_oracle = 4,
};

struct Options {
    std::string structure_file;
    std::string scenario;
    std::optional<double> energy;
    std::string energy_range;
    std::optional<std::size_t> grid_points;
    bool mirror = false;
    std::string out = "stdout";
};

struct Input {
    LayeredStructure structure;
    std::optional<PeriodicLattice> lattice;
    std::optional<double> default_energy;
};

Input load_input(const Options& o)
{
    if (o.structure_file.empty() == o.scenario.empty()) {
        throw ParseError("give exactly one of --structure or --scenario");
    }
    Input in;
    if (!o.scenario.empty()) {
        Scenario sc;
        try {
            sc = make_scenario_from_spec(o.scenario);
        }
        catch (const DomainError& e) {
            throw ParseError(e.what());
        }
        in.structure = sc.structure;
        in.lattice = sc.lattice;
        in.default_energy = sc.default_energy;
    }
    else {
        StructureDocument doc = parse_structure_file(o.structure_file);
        in.structure = doc.structure;
        if (doc.scenario) {
            in.lattice = doc.scenario->lattice;
            in.default_energy = doc.scenario->default_energy;
        }
    }
    if (o.mirror) {
        in.structure = mirrored(in.structure);
        in.lattice.reset();
    }
    return in;
}

double pick_energy(const Options& o, const Input& in)
{
    if (o.energy) {
        return *o.energy;
    }
    if (in.default_energy) {
        return *in.default_energy;
    }
    throw ParseError("--energy is required for this structure");
}

// CSV goes to --out; the human-readable summary goes to stdout unless the CSV
// already occupies it.
class Sink {
public:
    explicit Sink(const std::string& target)
    {
        if (target != "stdout" && target != "-") {
            file_.open(target, std::ios::binary);
            if (!file_) {
                throw ParseError("cannot open output file '" + target + "'");
            }
            to_file_ = true;
        }
    }

    std::ostream& csv() { return to_file_ ? static_cast<std::ostream&>(file_) : std::cout; }
    std::ostream& summary() { return to_file_ ? std::cout : std::cerr; }

private:
    std::ofstream file_;
    bool to_file_ = false;
};

int cmd_wavefunction(const Options& o)
{
    const Input in = load_input(o);
    const double e = pick_energy(o, in);
    Sink sink(o.out);
    const auto rep = run_wavefunction(in.structure, e, o.grid_points, sink.csv());
    sink.summary() << "T=" << format_double(rep.transmission) << " R=" << format_double(rep.reflection) << '\n';
    return exit_ok;
}

int cmd_sweep(const Options& o)
{
    const Input in = load_input(o);
    if (o.energy_range.empty()) {
        throw ParseError("sweep needs --energy-range min:max:steps");
    }
    const auto sweep = run_sweep(in.structure, parse_energy_range(o.energy_range));
    Sink sink(o.out);
    write_sweep_csv(sweep, sink.csv());
    for (const auto& note : sweep.notes) {
        std::cerr << "note: " << note << '\n';
    }
    return exit_ok;
}

int cmd_bands(const Options& o)
{
    const Input in = load_input(o);
    if (!in.lattice) {
        throw ParseError("bands needs a periodic lattice (--scenario periodic[:U=..,d=..,a=..] or a periodic generator)");
    }
    const EnergyRange range = o.energy_range.empty() ? EnergyRange{0.01, 8.0, 8000} : parse_energy_range(o.energy_range);
    Sink sink(o.out);
    const BandTable table = run_bands(*in.lattice, range, sink.csv());
    for (double edge : table.edges) {
        sink.summary() << "edge at epsilon=" << format_double(edge) << '\n';
    }
    for (const auto& note : table.notes) {
        std::cerr << "note: " << note << '\n';
    }
    return exit_ok;
}

int cmd_validate(const Options& o)
{
    if (o.structure_file.empty() == o.scenario.empty()) {
        throw ParseError("give exactly one of --structure or --scenario");
    }
    const Input in = load_input(o);  // throws ValidationError with every violation listed
    std::cout << "ok: " << in.structure.size() << " barriers, span " << format_double(in.structure.span) << '\n';
    return exit_ok;
}

int cmd_oracle_check(const Options& o)
{
    const Input in = load_input(o);
    const double e = pick_energy(o, in);
    const OracleCheck check = run_oracle_check(in.structure, e);
    std::cout << "max_relative_discrepancy=" << format_double(check.discrepancy.max_relative) << '\n'
              << "worst=" << check.discrepancy.worst << '\n'
              << "tolerance=" << format_double(check.tolerance) << '\n'
              << "condition_estimate=" << format_double(check.condition_estimate) << '\n'
              << (check.passed() ? "PASS" : "FAIL") << '\n';
    return check.passed() ? exit_ok : exit_oracle;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Scattering states of rectangular barrier chains between two media"};
    app.require_subcommand(1);

    Options o;
    auto add_common = [&o](CLI::App* sub, bool energy, bool range, bool grid) {
        sub->add_option("--structure", o.structure_file, "Structure file (JSON)");
        sub->add_option("--scenario", o.scenario, "Built-in scenario, e.g. periodic:N=6 or fig4a");
        sub->add_flag("--mirror", o.mirror, "Reflect the structure (right incidence)");
        sub->add_option("--out", o.out, "CSV destination: file path or stdout");
        if (energy) {
            sub->add_option("--energy", o.energy, "Scaled energy");
        }
        if (range) {
            sub->add_option("--energy-range", o.energy_range, "min:max:steps (steps = number of points)");
        }
        if (grid) {
            sub->add_option("--grid-points", o.grid_points, "Uniform grid size over [-0.2 L, 1.2 L]");
        }
    };

    auto* wf = app.add_subcommand("wavefunction", "Sample psi on a grid, print T and R");
    add_common(wf, true, false, true);
    auto* sweep = app.add_subcommand("sweep", "Transmission and reflection over an energy range");
    add_common(sweep, false, true, false);
    auto* bands = app.add_subcommand("bands", "Allowed and forbidden bands of a periodic lattice");
    add_common(bands, false, true, false);
    auto* validate = app.add_subcommand("validate", "Check a structure and list every violation");
    add_common(validate, false, false, false);
    auto* oracle = app.add_subcommand("oracle-check", "Compare against the dense boundary-matching solve");
    add_common(oracle, true, false, false);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (*wf) {
            return cmd_wavefunction(o);
        }
        if (*sweep) {
            return cmd_sweep(o);
        }
        if (*bands) {
            return cmd_bands(o);
        }
        if (*validate) {
            return cmd_validate(o);
        }
        return cmd_oracle_check(o);
    }
    catch (const ValidationError& e) {
        for (const auto& v : e.report().violations) {
            std::cerr << "error: " << v.message << '\n';
        }
        return exit_input;
    }
    catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    catch (const DegenerateError& e) {
        std::cerr << "degenerate: " << e.what() << '\n';
        return exit_degenerate;
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_other;
    }
}
