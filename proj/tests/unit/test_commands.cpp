#include "layerwave/commands.hpp"

#include <doctest.h>

#include <charconv>
#include <cmath>
#include <sstream>

using namespace layerwave;

namespace {

std::vector<std::vector<double>> read_csv(const std::string& text, const std::string& header)
{
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    REQUIRE(line == header);
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        std::vector<double> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            double v = 0.0;
            const auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            REQUIRE(ec == std::errc{});
            REQUIRE(end == cell.data() + cell.size());
            row.push_back(v);
        }
        rows.push_back(row);
    }
    REQUIRE(!text.empty());
    CHECK(text.back() == '\n');
    return rows;
}

}  // namespace

TEST_CASE("energy range parsing")
{
    const auto r = parse_energy_range("0.5:4:8");
    CHECK(r.lo == 0.5);
    CHECK(r.hi == 4.0);
    CHECK(r.steps == 8);
    CHECK_THROWS_AS(parse_energy_range("1:2"), ParseError);
    CHECK_THROWS_AS(parse_energy_range("a:2:3"), ParseError);
    CHECK_THROWS_AS(parse_energy_range("1:2:1"), ParseError);
    CHECK_THROWS_AS(parse_energy_range("3:2:10"), ParseError);
    CHECK_THROWS_AS(parse_energy_range("1:2:3.5"), ParseError);
}

TEST_CASE("wavefunction CSV")
{
    SUBCASE("free space")
    {
        const LayeredStructure s{0.0, 0.0, 2.0, {}};
        std::ostringstream out;
        const auto rep = run_wavefunction(s, 1.5, 50, out);
        const auto rows = read_csv(out.str(), "x,re_psi,im_psi,abs2_psi");
        CHECK(rows.size() == 50);
        for (const auto& r : rows) {
            CHECK(r[3] == doctest::Approx(1.0).epsilon(1e-14));
        }
        CHECK(rep.transmission == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("long lattice in an allowed band")
    {
        const Scenario sc = make_scenario("periodic", {{"N", 100.0}});
        std::ostringstream out;
        const auto rep = run_wavefunction(sc.structure, 4.9, std::nullopt, out);
        const auto rows = read_csv(out.str(), "x,re_psi,im_psi,abs2_psi");
        CHECK(rows.size() >= 1000);
        CHECK(rows.size() == rep.rows);
        CHECK(std::abs(rep.transmission + rep.reflection - 1.0) < 1e-12);
        for (std::size_t i = 1; i < rows.size(); ++i) {
            CHECK(rows[i][0] > rows[i - 1][0]);
        }
    }
    SUBCASE("incident energy must propagate")
    {
        const LayeredStructure s{2.0, 0.0, 2.0, {}};
        std::ostringstream out;
        CHECK_THROWS_AS(run_wavefunction(s, 2.0, 10, out), DomainError);
        CHECK_THROWS_AS(run_wavefunction(s, 1.0, 10, out), DomainError);
    }
}

TEST_CASE("sweep")
{
    const Scenario sc = make_scenario("periodic", {{"N", 8.0}});
    const EnergyRange range{1.0, 7.0, 385};  // step 1/64, exact
    const auto serial = run_sweep(sc.structure, range, 1);
    const auto parallel = run_sweep(sc.structure, range, 4);
    REQUIRE(serial.rows.size() == 385);
    REQUIRE(parallel.rows.size() == 385);
    for (std::size_t i = 0; i < serial.rows.size(); ++i) {
        CHECK(serial.rows[i].energy == parallel.rows[i].energy);
        CHECK(serial.rows[i].transmission == parallel.rows[i].transmission);
        CHECK(std::abs(serial.rows[i].transmission + serial.rows[i].reflection - 1.0) < 1e-10);
        if (i > 0) {
            CHECK(serial.rows[i].energy > serial.rows[i - 1].energy);
        }
    }
    // 3.0 is on the grid and equals the barrier height.
    REQUIRE(serial.notes.size() == 1);
    CHECK(serial.notes[0].find("k = 0") != std::string::npos);

    std::ostringstream out;
    write_sweep_csv(serial, out);
    const auto rows = read_csv(out.str(), "epsilon,T_prob,R_prob");
    CHECK(rows.size() == 385);
    CHECK(rows[5][1] == serial.rows[5].transmission);

    CHECK_THROWS_AS(run_sweep(make_scenario("fig4a").structure, {1.0, 3.0, 10}), DomainError);
}

TEST_CASE("sweep across a forbidden band follows the band edges")
{
    const Scenario sc = make_scenario("periodic", {{"N", 20.0}});
    std::ostringstream sink;
    const BandTable bands = run_bands(*sc.lattice, {0.01, 8.0, 8000}, sink);
    BandInterval gap{0.0, 0.0, BandKind::Allowed};
    for (const auto& iv : bands.intervals) {
        if (iv.kind == BandKind::Forbidden && iv.lo < 4.6 && iv.hi > 4.6) {
            gap = iv;
        }
    }
    REQUIRE(gap.kind == BandKind::Forbidden);
    const double width = gap.hi - gap.lo;
    const auto inside = run_sweep(sc.structure, {gap.lo + 0.1 * width, gap.hi - 0.1 * width, 200});
    for (const auto& r : inside.rows) {
        CHECK(r.transmission < 1e-3);
    }
    const auto beyond = run_sweep(sc.structure, {gap.hi, gap.hi + 0.2, 200});
    double best = 0.0;
    for (const auto& r : beyond.rows) {
        best = std::max(best, r.transmission);
    }
    CHECK(best > 0.5);
}

TEST_CASE("single barrier becomes transparent at high energy")
{
    const LayeredStructure s{0.0, 0.0, 3.0, {{2.0, 1.0, 1.5}}};
    const auto sweep = run_sweep(s, {500.0, 1000.0, 11});
    for (const auto& r : sweep.rows) {
        CHECK(r.transmission > 0.999);
    }
}

TEST_CASE("bands CSV and edges")
{
    const Scenario sc = make_scenario("periodic");
    std::ostringstream out;
    const BandTable t = run_bands(*sc.lattice, {0.01, 8.0, 8000}, out);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "epsilon,cos_beta,band");
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        const auto last = line.substr(line.rfind(',') + 1);
        CHECK((last == "allowed" || last == "forbidden" || last == "edge"));
        ++rows;
    }
    CHECK(rows == t.samples.size());
    auto edge_in = [&t](double lo, double hi) {
        return std::any_of(t.edges.begin(), t.edges.end(), [=](double e) { return e > lo && e < hi; });
    };
    CHECK(edge_in(2.0, 3.0));
    CHECK(edge_in(4.6, 4.9));

    PeriodicLattice flat = *sc.lattice;
    flat.barrier_height = 0.0;
    std::ostringstream ignore;
    const BandTable none = run_bands(flat, {0.01, 8.0, 800}, ignore);
    for (const auto& iv : none.intervals) {
        CHECK(iv.kind != BandKind::Forbidden);
    }
}

TEST_CASE("oracle check passes on the stock scenarios")
{
    for (const auto& name : scenario_names()) {
        const Scenario sc = make_scenario(name);
        const OracleCheck c = run_oracle_check(sc.structure, sc.default_energy);
        CHECK_MESSAGE(c.passed(), name, ": ", c.discrepancy.max_relative);
    }
}
