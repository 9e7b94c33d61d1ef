#include "layerwave/scenarios.hpp"

#include <doctest.h>

#include <cmath>

using namespace layerwave;

namespace {

// Rebuilds the chain from the stated decimal formulas, evaluated as exact
// integer ratios n/10, n/20 etc.
struct Expected {
    double height;
    double width;
    double gap;
};

Expected fig4a(int n)
{
    return {(400.0 + 35.0 * n) / 100.0, (10.0 + n) / 10.0, (10.0 - n) / 10.0};
}

Expected fig4b(int n)
{
    return {5.0 * n * n / 100.0, (10.0 + n * n) / 10.0, (10.0 + n) / 10.0};
}

Expected fig4c(int n, int m)
{
    return {35.0 * n * (m - n + 1) / 1000.0, (2.0 * n + n * n) / 10.0, (n * n) / 10.0};
}

Expected fig4d(int n)
{
    const double s = std::sin(static_cast<double>(n));
    return {4.0 * s * s, 1.0, 1.0};
}

void check_chain(const Scenario& sc, double v1, double v2, double margin, Expected (*f)(int), int count)
{
    const auto& s = sc.structure;
    REQUIRE(static_cast<int>(s.size()) == count);
    CHECK(s.v_left == v1);
    CHECK(s.v_right == v2);
    CHECK(s.barriers.front().left_edge() == doctest::Approx(margin).epsilon(1e-15));
    CHECK(s.span - s.barriers.back().right_edge() == doctest::Approx(margin).epsilon(1e-14));
    for (int n = 1; n <= count; ++n) {
        const Barrier& b = s.barriers[static_cast<std::size_t>(n - 1)];
        const Expected e = f(n);
        CHECK(b.height == e.height);
        CHECK(b.width == e.width);
        if (n < count) {
            const double gap = s.barriers[static_cast<std::size_t>(n)].left_edge() - b.right_edge();
            CHECK(gap == doctest::Approx(e.gap).epsilon(1e-13));
        }
    }
    CHECK(validate_structure(s).ok());
}

}  // namespace

TEST_CASE("periodic generator")
{
    const Scenario sc = make_scenario("periodic", {{"U", 3.0}, {"d", 1.0}, {"a", 2.0}, {"N", 8.0}});
    REQUIRE(sc.lattice);
    REQUIRE(sc.structure.size() == 8);
    for (std::size_t n = 0; n < 8; ++n) {
        CHECK(sc.structure.barriers[n].center == 1.5 + 2.0 * static_cast<double>(n));
        CHECK(sc.structure.barriers[n].height == 3.0);
    }
    CHECK(sc.structure.v_left == 0.0);
    CHECK(sc.structure.v_right == 0.0);
    CHECK(sc.unit_label == "d");
    CHECK(sc.default_energy == 4.6);
}

TEST_CASE("graded chains follow their formulas at every index")
{
    check_chain(make_scenario("fig4a"), 2.0, 1.0, 0.75, fig4a, 8);
    check_chain(make_scenario("fig4b"), 2.0, 1.0, 0.75, fig4b, 8);
    check_chain(make_scenario("fig4d"), 0.5, 0.75, 1.0, fig4d, 8);
    const Scenario c = make_scenario("fig4c");
    const auto& s = c.structure;
    REQUIRE(s.size() == 8);
    for (int n = 1; n <= 8; ++n) {
        CHECK(s.barriers[static_cast<std::size_t>(n - 1)].height == fig4c(n, 8).height);
        CHECK(s.barriers[static_cast<std::size_t>(n - 1)].width == fig4c(n, 8).width);
    }
    CHECK(s.v_left == 0.5);
    CHECK(s.v_right == 0.75);

    const Scenario c12 = make_scenario("fig4c", {{"N", 8.0}, {"m", 12.0}});
    CHECK(c12.structure.barriers[2].height == fig4c(3, 12).height);
}

TEST_CASE("stated energies")
{
    CHECK(make_scenario("fig4a").default_energy == 9.0);
    CHECK(make_scenario("fig4b").default_energy == 3.5);
    CHECK(make_scenario("fig4c").default_energy == 1.3);
    CHECK(make_scenario("fig4d").default_energy == 5.0);
    CHECK(make_scenario("fig4a").unit_label == "s");
}

TEST_CASE("scenario strings")
{
    const Scenario sc = make_scenario_from_spec("periodic:N=6,U=2.5");
    CHECK(sc.structure.size() == 6);
    CHECK(sc.structure.barriers[0].height == 2.5);
    CHECK(make_scenario_from_spec("fig4d").structure.size() == 8);
    CHECK_THROWS_AS(make_scenario_from_spec("fig9"), DomainError);
    CHECK_THROWS_AS(make_scenario_from_spec("periodic:N=x"), DomainError);
    CHECK_THROWS_AS(make_scenario_from_spec("periodic:Q=1"), DomainError);
    CHECK_THROWS_AS(make_scenario_from_spec("periodic:N=2.5"), DomainError);
    CHECK_THROWS_AS(make_scenario_from_spec("periodic:a=0.5"), ValidationError);
}
