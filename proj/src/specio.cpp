#include "zdg/specio.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace zdg {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::invalid_input, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

RingSpec spec_from_json(const json& j);

std::vector<int> int_list(const json& j, const std::string& field) {
    if (!j.is_array()) throw Error(Errc::invalid_input, field + " must be a list");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw Error(Errc::invalid_input, field + " must hold integers");
        out.push_back(v.get<int>());
    }
    return out;
}

RingSpec spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw Error(Errc::invalid_input, "ring spec must be an object with a kind");
    RingSpec spec;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "zn") {
        spec.kind = RingSpec::Kind::Zn;
        if (!j.contains("n") || !j.at("n").is_number_integer())
            throw Error(Errc::invalid_input, "zn spec needs integer n");
        spec.n = j.at("n").get<long>();
    } else if (kind == "product") {
        spec.kind = RingSpec::Kind::Product;
        if (!j.contains("factors") || !j.at("factors").is_array() || j.at("factors").empty())
            throw Error(Errc::invalid_input, "product spec needs a nonempty factor list");
        for (const auto& f : j.at("factors")) spec.factors.push_back(spec_from_json(f));
    } else if (kind == "presented") {
        spec.kind = RingSpec::Kind::Presented;
        if (!j.contains("orders") || !j.contains("one") || !j.contains("mul"))
            throw Error(Errc::invalid_input, "presented spec needs orders, one, mul");
        spec.orders = int_list(j.at("orders"), "orders");
        spec.one = int_list(j.at("one"), "one");
        const auto& mul = j.at("mul");
        if (!mul.is_array()) throw Error(Errc::invalid_input, "mul must be a matrix of vectors");
        for (const auto& row : mul) {
            spec.mul.emplace_back();
            if (!row.is_array()) throw Error(Errc::invalid_input, "mul must be a matrix of vectors");
            for (const auto& cell : row) spec.mul.back().push_back(int_list(cell, "mul entry"));
        }
    } else if (kind == "table") {
        spec.kind = RingSpec::Kind::Table;
        if (!j.contains("add_table") || !j.contains("mul_table"))
            throw Error(Errc::invalid_input, "table spec needs add_table and mul_table");
        for (const auto& row : j.at("add_table")) spec.add_table.push_back(int_list(row, "add_table row"));
        for (const auto& row : j.at("mul_table")) spec.mul_table.push_back(int_list(row, "mul_table row"));
        if (!j.contains("zero") || !j.contains("one_id"))
            throw Error(Errc::invalid_input, "table spec needs zero and one_id");
        spec.zero = j.at("zero").get<int>();
        spec.one_id = j.at("one_id").get<int>();
    } else {
        throw Error(Errc::invalid_input, "unknown ring spec kind: " + kind);
    }
    if (j.contains("labels")) {
        for (const auto& l : j.at("labels")) {
            if (!l.is_string()) throw Error(Errc::invalid_input, "labels must be strings");
            spec.labels.push_back(l.get<std::string>());
        }
    }
    return spec;
}

json spec_as_json(const RingSpec& spec) {
    json j = json::object();
    switch (spec.kind) {
    case RingSpec::Kind::Zn:
        j["kind"] = "zn";
        j["n"] = spec.n;
        break;
    case RingSpec::Kind::Product:
        j["kind"] = "product";
        j["factors"] = json::array();
        for (const auto& f : spec.factors) j["factors"].push_back(spec_as_json(f));
        break;
    case RingSpec::Kind::Presented:
        j["kind"] = "presented";
        j["orders"] = spec.orders;
        j["one"] = spec.one;
        j["mul"] = spec.mul;
        break;
    case RingSpec::Kind::Table:
        j["kind"] = "table";
        j["add_table"] = spec.add_table;
        j["mul_table"] = spec.mul_table;
        j["zero"] = spec.zero;
        j["one_id"] = spec.one_id;
        break;
    }
    if (!spec.labels.empty()) j["labels"] = spec.labels;
    return j;
}

} // namespace

RingSpec parse_spec(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw Error(Errc::invalid_input, std::string("spec parse error: ") + e.what());
    }
    return spec_from_json(j);
}

RingSpec load_spec(const std::string& path) {
    try {
        return parse_spec(read_file(path));
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.what());
    }
}

std::string spec_to_json(const RingSpec& spec) { return spec_as_json(spec).dump(2) + "\n"; }

std::vector<std::vector<int>> load_partition(const std::string& path) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw Error(Errc::invalid_input, path + ": partition parse error: " + e.what());
    }
    if (!j.is_array()) throw Error(Errc::invalid_input, path + ": partition must be a list of blocks");
    std::vector<std::vector<int>> blocks;
    for (const auto& row : j) blocks.push_back(int_list(row, "partition block"));
    return blocks;
}

std::vector<std::string> load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::invalid_input, "cannot open " + path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\r' || line.back() == '\t'))
            line.pop_back();
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        out.push_back(line.substr(start));
    }
    return out;
}

} // namespace zdg
