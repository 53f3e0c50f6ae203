#include "archrec/cli/config.hpp"

#include <fstream>
#include <sstream>

#include "archrec/core/error.hpp"

namespace archrec::cli {
namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos)
        return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes" || value == "on")
        return true;
    if (value == "false" || value == "0" || value == "no" || value == "off")
        return false;
    throw InputError("config: boolean expected for " + key + ", got: " + value);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size())
            throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw InputError("config: number expected for " + key + ", got: " + value);
    }
}

std::int64_t parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const std::int64_t v = std::stoll(value, &used);
        if (used != value.size())
            throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw InputError("config: integer expected for " + key + ", got: " + value);
    }
}

} // namespace

void RunConfig::set(const std::string& key, const std::string& value) {
    if (key == "paths.deps") deps_path = value;
    else if (key == "paths.source_root") source_root = value;
    else if (key == "paths.out") out_dir = value;
    else if (key == "resolution") resolution = parse_double(key, value);
    else if (key == "seed") seed = static_cast<std::uint64_t>(parse_int(key, value));
    else if (key == "lda.topics") lda_topics = static_cast<int>(parse_int(key, value));
    else if (key == "lda.iterations") lda_iterations = static_cast<int>(parse_int(key, value));
    else if (key == "lda.seed") lda_seed = static_cast<std::uint64_t>(parse_int(key, value));
    else if (key == "lda.weight_resolution") lda_weight_resolution = parse_double(key, value);
    else if (key == "lda.beta") lda_beta = parse_double(key, value);
    else if (key == "text.weights.filename") text_weight_filename = parse_double(key, value);
    else if (key == "text.weights.definition") text_weight_definition = parse_double(key, value);
    else if (key == "text.weights.comment") text_weight_comment = parse_double(key, value);
    else if (key == "text.stopwords_file") stopwords_file = value;
    else if (key == "fusion.use_text") use_text = parse_bool(key, value);
    else if (key == "fusion.use_folder") use_folder = parse_bool(key, value);
    else if (key == "fusion.use_entity_importance") use_entity_importance = parse_bool(key, value);
    else if (key == "fusion.use_type_weights") use_type_weights = parse_bool(key, value);
    else if (key == "type_weights.file") type_weights_file = value;
    else if (key == "fusion.coef_floor") coef_floor = parse_double(key, value);
    else throw InputError("config: unknown key: " + key);
}

void RunConfig::load_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open config file: " + path.string());
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#')
            continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw InputError(path.string() + ":" + std::to_string(lineno) + ": expected key=value");
        set(trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
    }
}

RunConfig RunConfig::from_file(const std::filesystem::path& path) {
    RunConfig cfg;
    cfg.load_file(path);
    return cfg;
}

std::map<std::string, std::string> RunConfig::effective() const {
    auto fmt = [](double v) {
        std::ostringstream os;
        os << v;
        return os.str();
    };
    return {
        {"paths.deps", deps_path},
        {"paths.source_root", source_root},
        {"paths.out", out_dir},
        {"resolution", fmt(resolution)},
        {"seed", std::to_string(seed)},
        {"lda.topics", std::to_string(lda_topics)},
        {"lda.iterations", std::to_string(lda_iterations)},
        {"lda.seed", std::to_string(effective_lda_seed())},
        {"lda.weight_resolution", fmt(lda_weight_resolution)},
        {"lda.beta", fmt(lda_beta)},
        {"text.weights.filename", fmt(text_weight_filename)},
        {"text.weights.definition", fmt(text_weight_definition)},
        {"text.weights.comment", fmt(text_weight_comment)},
        {"text.stopwords_file", stopwords_file},
        {"fusion.use_text", use_text ? "true" : "false"},
        {"fusion.use_folder", use_folder ? "true" : "false"},
        {"fusion.use_entity_importance", use_entity_importance ? "true" : "false"},
        {"fusion.use_type_weights", use_type_weights ? "true" : "false"},
        {"type_weights.file", type_weights_file},
        {"fusion.coef_floor", fmt(coef_floor)},
    };
}

void RunConfig::validate() const {
    if (resolution <= 0.0)
        throw InputError("config: resolution must be > 0");
    if (lda_topics < 1)
        throw InputError("config: lda.topics must be >= 1");
    if (lda_iterations < 1)
        throw InputError("config: lda.iterations must be >= 1");
    if (lda_weight_resolution <= 0.0)
        throw InputError("config: lda.weight_resolution must be > 0");
    if (text_weight_filename <= 0.0 || text_weight_definition <= 0.0 || text_weight_comment <= 0.0)
        throw InputError("config: text.weights.* must be positive");
}

} // namespace archrec::cli
