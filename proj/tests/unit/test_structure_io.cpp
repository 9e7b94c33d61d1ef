#include "layerwave/structure_io.hpp"

#include "support/random_structures.hpp"

#include <doctest.h>

#include <charconv>
#include <clocale>
#include <cstring>
#include <cmath>
#include <limits>
#include <random>

using namespace layerwave;

namespace {

double reparse(const std::string& text)
{
    double v = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    REQUIRE(ec == std::errc{});
    REQUIRE(end == text.data() + text.size());
    return v;
}

}  // namespace

TEST_CASE("explicit document")
{
    const auto doc = parse_structure(R"({
        "v_left": 0, "v_right": 0.5, "span": 4, "unit_label": "d",
        "barriers": [ {"height": 3, "width": 1, "center": 1},
                      {"height": 3, "width": 1, "center": 3} ] })");
    CHECK(doc.unit_label == "d");
    CHECK(doc.structure.v_right == 0.5);
    REQUIRE(doc.structure.size() == 2);
    CHECK(doc.structure.barriers[1].center == 3.0);
    CHECK_FALSE(doc.scenario);

    const auto bare = parse_structure(R"({"v_left": 0, "v_right": 0, "span": 1, "barriers": []})");
    CHECK(bare.unit_label == "s");
}

TEST_CASE("generator document")
{
    const auto doc = parse_structure(R"({"generator": {"kind": "periodic", "params": {"N": 4, "U": 2}}})");
    REQUIRE(doc.scenario);
    REQUIRE(doc.structure.size() == 4);
    CHECK(doc.structure.barriers[3].center == 1.5 + 6.0);
    CHECK(doc.unit_label == "d");

    const auto f = parse_structure(R"({"generator": {"kind": "fig4a"}})");
    CHECK(f.structure.size() == 8);
}

TEST_CASE("parse errors carry position or field")
{
    auto message = [](const std::string& text) {
        try {
            parse_structure(text);
        }
        catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message("{\n  \"v_left\": 0,\n  \"span\": ,\n}").find("line 3") != std::string::npos);
    CHECK(message(R"({"v_left": 0, "v_right": 0, "barriers": []})").find("span") != std::string::npos);
    CHECK(message(R"({"v_left": 0, "v_right": 0, "span": 2, "barriers": [{"height": 1, "width": "x", "center": 1}]})")
              .find("barriers[0].width") != std::string::npos);
    CHECK(message(R"({"generator": {"kind": "nope"}})").find("nope") != std::string::npos);
    CHECK(message("[1, 2]").find("object") != std::string::npos);
    CHECK_THROWS_AS(parse_structure_file("/nonexistent/structure.json"), ParseError);
}

TEST_CASE("validation errors are forwarded")
{
    CHECK_THROWS_AS(
        parse_structure(R"({"v_left": 0, "v_right": 0, "span": 2, "barriers": [{"height": 3, "width": 1, "center": 2}]})"),
        ValidationError);
}

TEST_CASE("round trip is bit exact")
{
    std::mt19937_64 rng(51);
    for (int i = 0; i < 200; ++i) {
        const auto c = testing::random_case(rng);
        const auto doc = parse_structure(serialize_structure(c.structure, "s"));
        CHECK(doc.structure == c.structure);
    }
}

TEST_CASE("CSV numbers re-parse to the same double")
{
    std::mt19937_64 rng(52);
    std::uniform_int_distribution<std::uint64_t> bits;
    int checked = 0;
    while (checked < 20000) {
        const std::uint64_t b = bits(rng);
        double v = 0.0;
        std::memcpy(&v, &b, sizeof v);
        if (!std::isfinite(v)) {
            continue;
        }
        CHECK(reparse(format_double(v)) == v);
        ++checked;
    }
    for (double v : {0.1, 1.0 / 3.0, 4.6, -0.0, 1e-310, std::numeric_limits<double>::max()}) {
        CHECK(reparse(format_double(v)) == v);
    }
    CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("number formatting ignores the C locale")
{
    const char* old = std::setlocale(LC_NUMERIC, nullptr);
    const std::string saved = old ? old : "C";
    if (std::setlocale(LC_NUMERIC, "de_DE.UTF-8") != nullptr) {
        CHECK(format_double(2.5) == "2.5");
    }
    std::setlocale(LC_NUMERIC, saved.c_str());
}
