#include "layerwave/structure_io.hpp"

#include <json.hpp>

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

namespace layerwave {

using nlohmann::json;

namespace {

std::string line_col(std::string_view text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        }
        else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

double number_at(const json& obj, const std::string& key, const std::string& path)
{
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ParseError(path + key + ": missing required field");
    }
    if (!it->is_number()) {
        throw ParseError(path + key + ": expected a number");
    }
    return it->get<double>();
}

StructureDocument from_generator(const json& gen)
{
    if (!gen.is_object() || !gen.contains("kind") || !gen["kind"].is_string()) {
        throw ParseError("generator: expected an object with a string field 'kind'");
    }
    ScenarioParams params;
    if (gen.contains("params")) {
        const json& p = gen["params"];
        if (!p.is_object()) {
            throw ParseError("generator.params: expected an object");
        }
        for (auto it = p.begin(); it != p.end(); ++it) {
            if (!it.value().is_number()) {
                throw ParseError("generator.params." + it.key() + ": expected a number");
            }
            params[it.key()] = it.value().get<double>();
        }
    }
    StructureDocument doc;
    try {
        doc.scenario = make_scenario(gen["kind"].get<std::string>(), params);
    }
    catch (const DomainError& e) {
        throw ParseError(std::string("generator: ") + e.what());
    }
    doc.structure = doc.scenario->structure;
    doc.unit_label = doc.scenario->unit_label;
    return doc;
}

}  // namespace

StructureDocument parse_structure(std::string_view text)
{
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    }
    catch (const json::parse_error& e) {
        throw ParseError("malformed structure file at " + line_col(text, e.byte > 0 ? e.byte - 1 : 0) + ": " +
                         e.what());
    }
    if (!root.is_object()) {
        throw ParseError("structure file must contain a JSON object");
    }

    StructureDocument doc;
    if (root.contains("generator")) {
        doc = from_generator(root["generator"]);
    }
    else {
        LayeredStructure& s = doc.structure;
        s.v_left = number_at(root, "v_left", "");
        s.v_right = number_at(root, "v_right", "");
        s.span = number_at(root, "span", "");
        if (!root.contains("barriers")) {
            throw ParseError("barriers: missing required field (use [] for none)");
        }
        const json& list = root["barriers"];
        if (!list.is_array()) {
            throw ParseError("barriers: expected an array");
        }
        for (std::size_t i = 0; i < list.size(); ++i) {
            const std::string path = "barriers[" + std::to_string(i) + "].";
            if (!list[i].is_object()) {
                throw ParseError(path.substr(0, path.size() - 1) + ": expected an object");
            }
            s.barriers.push_back(
                {number_at(list[i], "height", path), number_at(list[i], "width", path), number_at(list[i], "center", path)});
        }
    }
    if (root.contains("unit_label")) {
        if (!root["unit_label"].is_string()) {
            throw ParseError("unit_label: expected a string");
        }
        doc.unit_label = root["unit_label"].get<std::string>();
    }
    require_valid(doc.structure);
    return doc;
}

StructureDocument parse_structure_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot read structure file '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_structure(buf.str());
}

std::string serialize_structure(const LayeredStructure& s, std::string_view unit_label)
{
    json root;
    root["v_left"] = s.v_left;
    root["v_right"] = s.v_right;
    root["span"] = s.span;
    root["unit_label"] = std::string(unit_label);
    json list = json::array();
    for (const auto& b : s.barriers) {
        list.push_back({{"height", b.height}, {"width", b.width}, {"center", b.center}});
    }
    root["barriers"] = std::move(list);
    return root.dump(2) + "\n";
}

std::string format_double(double v)
{
    std::array<char, 64> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
    if (ec != std::errc{}) {
        return "nan";
    }
    return std::string(buf.data(), end);
}

}  // namespace layerwave
