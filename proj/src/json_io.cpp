#include "eulab/json_io.hpp"

#include <fstream>

#include "eulab/errors.hpp"

namespace eulab {

namespace {

int require_int(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw io_error(std::string("matroid JSON: missing integer field \"") + key + "\"");
    return j[key].get<int>();
}

std::vector<std::vector<int>> require_int_lists(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw io_error(std::string("matroid JSON: missing array field \"") + key + "\"");
    std::vector<std::vector<int>> out;
    for (const auto& row : j[key]) {
        if (!row.is_array()) throw io_error(std::string("matroid JSON: \"") + key + "\" must hold arrays");
        std::vector<int> entry;
        for (const auto& v : row) {
            if (!v.is_number_integer())
                throw io_error(std::string("matroid JSON: \"") + key + "\" must hold integers");
            entry.push_back(v.get<int>());
        }
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace

Matroid matroid_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw io_error("matroid JSON: expected an object");
    int m = require_int(j, "elements");
    if (!j.contains("kind") || !j["kind"].is_string())
        throw io_error("matroid JSON: missing string field \"kind\"");
    std::string kind = j["kind"].get<std::string>();

    if (kind == "uniform") {
        return Matroid::uniform(require_int(j, "rank"), m);
    }
    if (kind == "bases") {
        Matroid out = Matroid::from_bases(m, require_int_lists(j, "bases"));
        if (j.contains("rank") && out.rank() != require_int(j, "rank"))
            throw invalid_matroid_error("matroid JSON: declared rank " +
                                        std::to_string(require_int(j, "rank")) +
                                        " does not match the bases, whose rank is " +
                                        std::to_string(out.rank()));
        return out;
    }
    if (kind == "graphic") {
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : require_int_lists(j, "edges")) {
            if (e.size() != 2) throw io_error("matroid JSON: every edge needs exactly two endpoints");
            edges.emplace_back(e[0], e[1]);
        }
        if (static_cast<int>(edges.size()) != m)
            throw io_error("matroid JSON: \"elements\" must equal the number of edges");
        return Matroid::graphic(require_int(j, "vertices"), edges);
    }
    throw io_error("matroid JSON: unknown kind \"" + kind + "\"");
}

nlohmann::json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw io_error(path + ": " + e.what());
    }
}

Matroid load_matroid(const std::string& path) { return matroid_from_json(parse_json_file(path)); }

std::vector<NamedMatroid> load_corpus(const std::string& path) {
    nlohmann::json j = parse_json_file(path);
    if (!j.is_array()) throw io_error("corpus JSON: expected an array of matroid objects");
    std::vector<NamedMatroid> out;
    for (const auto& entry : j) {
        if (!entry.contains("name") || !entry["name"].is_string())
            throw io_error("corpus JSON: every entry needs a string \"name\"");
        out.push_back({entry["name"].get<std::string>(), matroid_from_json(entry)});
    }
    return out;
}

}  // namespace eulab
