#include "archrec/ingest/dependency_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "archrec/core/error.hpp"

namespace archrec {
namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::size_t line_of_byte(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n')
            ++line;
    return line;
}

json parse_json_with_lines(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(origin + ": malformed JSON at line " +
                         std::to_string(line_of_byte(text, e.byte)) + ": " + e.what());
    }
}

void fail_on(const std::vector<std::string>& problems, const std::string& origin) {
    if (problems.empty())
        return;
    std::string msg = origin + ": schema violations:";
    for (const auto& p : problems)
        msg += "\n  " + p;
    throw InputError(msg);
}

} // namespace

DependencyGraph parse_dependency_json_text(const std::string& text, const std::string& origin) {
    const json doc = parse_json_with_lines(text, origin);
    std::vector<std::string> problems;
    DependencyGraph g;

    if (!doc.is_object() || !doc.contains("entities") || !doc["entities"].is_array())
        throw InputError(origin + ": top-level object with an \"entities\" array expected");

    std::size_t record = 0;
    for (const json& e : doc["entities"]) {
        ++record;
        const std::string where = "entities[" + std::to_string(record - 1) + "]";
        if (!e.is_object() || !e.contains("id") || !e["id"].is_string() || !e.contains("kind") ||
            !e["kind"].is_string() || !e.contains("name") || !e["name"].is_string() ||
            !e.contains("file") || !e["file"].is_string()) {
            problems.push_back(where + ": needs string fields id, kind, name, file");
            continue;
        }
        Entity entity;
        entity.id = e["id"].get<std::string>();
        entity.name = e["name"].get<std::string>();
        entity.file_id = e["file"].get<std::string>();
        auto kind = entity_kind_from_string(e["kind"].get<std::string>());
        if (!kind) {
            problems.push_back(where + ": unknown kind " + e["kind"].get<std::string>());
            continue;
        }
        entity.kind = *kind;
        if (e.contains("parent") && !e["parent"].is_null()) {
            if (!e["parent"].is_string()) {
                problems.push_back(where + ": parent must be a string or null");
                continue;
            }
            entity.parent_id = e["parent"].get<std::string>();
        }
        g.add_entity(std::move(entity));
    }

    if (doc.contains("edges")) {
        if (!doc["edges"].is_array())
            throw InputError(origin + ": \"edges\" must be an array");
        record = 0;
        for (const json& e : doc["edges"]) {
            ++record;
            const std::string where = "edges[" + std::to_string(record - 1) + "]";
            if (!e.is_object() || !e.contains("src") || !e["src"].is_string() || !e.contains("dst") ||
                !e["dst"].is_string() || !e.contains("type") || !e["type"].is_string() ||
                !e.contains("count") || !e["count"].is_number_integer()) {
                problems.push_back(where + ": needs src, dst, type strings and integer count");
                continue;
            }
            DependencyEdge edge;
            edge.src = e["src"].get<std::string>();
            edge.dst = e["dst"].get<std::string>();
            edge.dep_type = e["type"].get<std::string>();
            edge.multiplicity = e["count"].get<std::int64_t>();
            g.add_edge(std::move(edge));
        }
    }
    fail_on(problems, origin);

    auto violations = validate_graph(g);
    fail_on(violations, origin);
    return g;
}

DependencyGraph parse_dependency_json(const std::filesystem::path& path) {
    return parse_dependency_json_text(read_file(path), path.string());
}

std::string dependency_json_text(const DependencyGraph& g) {
    json doc;
    doc["entities"] = json::array();
    for (const Entity& e : g.entities()) {
        json je;
        je["id"] = e.id;
        je["kind"] = to_string(e.kind);
        je["name"] = e.name;
        je["file"] = e.file_id;
        je["parent"] = e.parent_id ? json(*e.parent_id) : json(nullptr);
        doc["entities"].push_back(std::move(je));
    }
    doc["edges"] = json::array();
    for (const DependencyEdge& e : g.edges()) {
        json je;
        je["src"] = e.src;
        je["dst"] = e.dst;
        je["type"] = e.dep_type;
        je["count"] = e.multiplicity;
        doc["edges"].push_back(std::move(je));
    }
    return doc.dump(2) + "\n";
}

void write_dependency_json(const DependencyGraph& g, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write file: " + path.string());
    out << dependency_json_text(g);
}

} // namespace archrec
