#ifndef ARCHREC_CLI_CONFIG_HPP
#define ARCHREC_CLI_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

namespace archrec::cli {

// Flat key=value run configuration. Every key is overridable by a CLI flag
// of the same dotted name.
struct RunConfig {
    std::string deps_path;     // paths.deps
    std::string source_root;   // paths.source_root
    std::string out_dir;       // paths.out

    double resolution = 1.7;
    std::uint64_t seed = 42;

    int lda_topics = 100;
    int lda_iterations = 1000;
    std::uint64_t lda_seed = 0;        // 0 => follow seed
    double lda_weight_resolution = 0.05;
    double lda_beta = 0.01;

    double text_weight_filename = 3.0;
    double text_weight_definition = 2.0;
    double text_weight_comment = 1.0;
    std::string stopwords_file;        // text.stopwords_file; extra words, one per line

    bool use_text = true;
    bool use_folder = true;
    bool use_entity_importance = true;
    bool use_type_weights = true;

    std::string type_weights_file;     // type_weights.file; empty => shipped defaults
    double coef_floor = 0.05;          // fusion.coef_floor

    static RunConfig from_file(const std::filesystem::path& path);
    void set(const std::string& key, const std::string& value);
    void load_file(const std::filesystem::path& path);
    std::map<std::string, std::string> effective() const;
    void validate() const;

    std::uint64_t effective_lda_seed() const { return lda_seed != 0 ? lda_seed : seed; }
};

} // namespace archrec::cli

#endif
