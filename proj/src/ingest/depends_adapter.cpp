#include "archrec/ingest/depends_adapter.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "archrec/core/error.hpp"

namespace archrec {
namespace {

using nlohmann::json;

} // namespace

DependencyGraph adapt_depends_output_text(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(origin + ": malformed JSON: " + e.what());
    }
    if (!doc.is_object() || !doc.contains("variables") || !doc["variables"].is_array())
        throw InputError(origin + ": expected Depends output with a \"variables\" array");

    DependencyGraph g;
    std::vector<std::string> variables;
    for (const json& v : doc["variables"]) {
        if (!v.is_string())
            throw InputError(origin + ": variables must be strings");
        variables.push_back(v.get<std::string>());
        Entity e;
        e.id = variables.back();
        e.kind = EntityKind::File;
        e.name = variables.back();
        e.file_id = variables.back();
        g.add_entity(std::move(e));
    }

    if (!doc.contains("cells"))
        return g;
    if (!doc["cells"].is_array())
        throw InputError(origin + ": \"cells\" must be an array");

    for (const json& cell : doc["cells"]) {
        if (!cell.is_object() || !cell.contains("src") || !cell.contains("dest") ||
            !cell.contains("values") || !cell["values"].is_object())
            throw InputError(origin + ": each cell needs src, dest and a values object");
        const auto src = cell["src"].get<std::int64_t>();
        const auto dst = cell["dest"].get<std::int64_t>();
        if (src < 0 || dst < 0 || src >= static_cast<std::int64_t>(variables.size()) ||
            dst >= static_cast<std::int64_t>(variables.size()))
            throw InputError(origin + ": cell index outside the variables list");

        for (const auto& [type_name, count] : cell["values"].items()) {
            if (!is_known_dep_type(type_name))
                throw InputError(origin + ": unknown dependency type in cell values: " + type_name);
            const std::int64_t multiplicity = std::llround(count.get<double>());
            if (multiplicity < 1)
                continue;
            DependencyEdge e;
            e.src = variables[static_cast<std::size_t>(src)];
            e.dst = variables[static_cast<std::size_t>(dst)];
            e.dep_type = type_name;
            e.multiplicity = multiplicity;
            g.add_edge(std::move(e));
        }
    }
    return g;
}

DependencyGraph adapt_depends_output(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return adapt_depends_output_text(buf.str(), path.string());
}

} // namespace archrec
