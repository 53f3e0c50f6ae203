#include "archrec/cli/formats.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "archrec/core/error.hpp"

namespace archrec::cli {
namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write file: " + path.string());
    out << text;
}

} // namespace

Architecture read_rsf(const std::filesystem::path& path) {
    std::istringstream in(read_file(path));
    std::map<std::string, std::set<std::string>> clusters;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        std::istringstream fields(line);
        std::string verb, cluster, file, extra;
        if (!(fields >> verb >> cluster >> file) || (fields >> extra) || verb != "contain")
            throw InputError(path.string() + ":" + std::to_string(lineno) +
                             ": expected \"contain <cluster> <file>\"");
        if (!clusters[cluster].insert(file).second)
            throw InputError(path.string() + ":" + std::to_string(lineno) +
                             ": duplicate file in cluster: " + file);
    }
    return Architecture::from_clusters(std::move(clusters));
}

std::string rsf_text(const Architecture& arch) {
    std::vector<std::string> lines;
    lines.reserve(arch.universe().size());
    for (const auto& [name, files] : arch.clusters())
        for (const auto& f : files)
            lines.push_back("contain " + name + " " + f);
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& l : lines) {
        out += l;
        out += '\n';
    }
    return out;
}

void write_rsf(const Architecture& arch, const std::filesystem::path& path) {
    write_file(path, rsf_text(arch));
}

Architecture read_architecture_json(const std::filesystem::path& path) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(path.string() + ": malformed JSON: " + e.what());
    }
    if (!doc.is_object() || !doc.contains("clusters") || !doc["clusters"].is_object())
        throw InputError(path.string() + ": expected { \"clusters\": { ... } }");
    std::map<std::string, std::set<std::string>> clusters;
    for (const auto& [name, files] : doc["clusters"].items()) {
        if (!files.is_array())
            throw InputError(path.string() + ": cluster " + name + " must be an array");
        for (const auto& f : files)
            clusters[name].insert(f.get<std::string>());
    }
    return Architecture::from_clusters(std::move(clusters));
}

std::string architecture_json_text(const Architecture& arch) {
    nlohmann::json doc;
    doc["clusters"] = nlohmann::json::object();
    for (const auto& [name, files] : arch.clusters())
        doc["clusters"][name] = std::vector<std::string>(files.begin(), files.end());
    return doc.dump(2) + "\n";
}

void write_architecture_json(const Architecture& arch, const std::filesystem::path& path) {
    write_file(path, architecture_json_text(arch));
}

TypeWeights read_type_weights(const std::filesystem::path& path) {
    std::istringstream in(read_file(path));
    std::map<std::string, double> weights;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        std::istringstream fields(line);
        std::string type, eq;
        double value = 0.0;
        if (!(fields >> type))
            continue;  // blank line
        if (!(fields >> eq >> value) || eq != "=")
            throw InputError(path.string() + ":" + std::to_string(lineno) +
                             ": expected \"TYPE = weight\"");
        weights[type] = value;
    }
    return TypeWeights::from_map(std::move(weights));
}

std::string type_weights_text(const TypeWeights& tw) {
    std::ostringstream out;
    for (const auto& name : kDependencyTypes) {
        out << name << " = " << std::setprecision(17) << tw.values().at(name) << "\n";
    }
    return out.str();
}

void write_type_weights(const TypeWeights& tw, const std::filesystem::path& path) {
    write_file(path, type_weights_text(tw));
}

std::string content_digest(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

std::string file_digest(const std::filesystem::path& path) {
    return content_digest(read_file(path));
}

} // namespace archrec::cli
