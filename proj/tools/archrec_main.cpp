#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "archrec/cli/commands.hpp"
#include "archrec/cli/config.hpp"
#include "archrec/core/error.hpp"

namespace {

using archrec::cli::RunConfig;

// Config file first, then explicitly given flags on top.
struct ConfigFlags {
    std::optional<std::string> config_path;
    std::vector<std::pair<std::string, std::string>> overrides;

    void add(CLI::App* cmd) {
        cmd->add_option_function<std::string>(
               "--config", [this](const std::string& v) { config_path = v; },
               "flat key=value config file");
        auto track = [this, cmd](const std::string& key, const std::string& help) {
            cmd->add_option_function<std::string>(
                "--" + key, [this, key](const std::string& v) { overrides.emplace_back(key, v); },
                help);
        };
        track("paths.deps", "canonical dependency JSON");
        track("paths.source_root", "source tree for text extraction");
        track("paths.out", "output directory");
        track("resolution", "clustering resolution (default 1.7)");
        track("seed", "run seed (default 42)");
        track("lda.topics", "LDA topic count");
        track("lda.iterations", "LDA sampling iterations");
        track("lda.seed", "LDA seed (defaults to run seed)");
        track("lda.weight_resolution", "pseudo-count quantization step");
        track("lda.beta", "LDA topic-word prior");
        track("text.weights.filename", "filename word weight");
        track("text.weights.definition", "definition word weight");
        track("text.weights.comment", "comment word weight");
        track("text.stopwords_file", "extra stop words, one per line");
        track("fusion.use_text", "use textual information");
        track("fusion.use_folder", "use folder structure");
        track("fusion.use_entity_importance", "weigh entities by importance");
        track("fusion.use_type_weights", "weigh dependencies by type");
        track("type_weights.file", "type weights file (default: shipped values)");
        track("fusion.coef_floor", "minimum textual coefficient");
    }

    RunConfig build() const {
        RunConfig cfg;
        if (config_path)
            cfg.load_file(*config_path);
        for (const auto& [k, v] : overrides)
            cfg.set(k, v);
        return cfg;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"architecture recovery by dependency, text and folder fusion"};
    app.require_subcommand(1);

    // recover
    auto* recover = app.add_subcommand("recover", "recover a module architecture");
    ConfigFlags recover_flags;
    recover_flags.add(recover);
    bool no_text = false, no_folder = false;
    recover->add_flag("--no-text", no_text, "shorthand for fusion.use_text=false");
    recover->add_flag("--no-folder", no_folder, "shorthand for fusion.use_folder=false");

    // evaluate
    auto* evaluate = app.add_subcommand("evaluate", "compare two RSF architectures");
    std::string recovered_path, ground_truth_path, project = "project";
    double threshold = 0.66;
    evaluate->add_option("--recovered", recovered_path, "recovered RSF file")->required();
    evaluate->add_option("--ground-truth", ground_truth_path, "ground-truth RSF file")->required();
    evaluate->add_option("--threshold", threshold, "c2c_cvg threshold (default 0.66)");
    evaluate->add_option("--project", project, "name for the CSV row");

    // optimize-weights
    auto* optimize = app.add_subcommand("optimize-weights", "learn dependency-type weights");
    std::string manifest_path, weights_out = "type_weights.txt";
    int budget = 500;
    std::uint64_t opt_seed = 42;
    optimize->add_option("--manifest", manifest_path, "file listing dependency JSON paths");
    optimize->add_option("--budget", budget, "evaluation budget (default 500)");
    optimize->add_option("--seed", opt_seed, "search seed");
    optimize->add_option("--out", weights_out, "output weights file");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "cluster counts across resolutions");
    ConfigFlags sweep_flags;
    sweep_flags.add(sweep);
    std::vector<double> gammas;
    sweep->add_option("--gammas", gammas, "resolutions to sweep")->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        if (recover->parsed()) {
            RunConfig cfg = recover_flags.build();
            if (no_text)
                cfg.use_text = false;
            if (no_folder)
                cfg.use_folder = false;
            const auto result = archrec::cli::cmd_recover(cfg);
            std::cout << "clusters " << result.architecture.cluster_count() << "\n";
            std::cout << "weights text " << result.weights.text << " folder "
                      << result.weights.folder << "\n";
            if (result.modularity_q)
                std::cout << "modularity " << *result.modularity_q << "\n";
            std::cout << "wrote " << result.rsf_path.string() << "\n";
        } else if (evaluate->parsed()) {
            archrec::cli::cmd_evaluate(recovered_path, ground_truth_path, threshold, project,
                                       std::cout);
        } else if (optimize->parsed()) {
            std::optional<std::filesystem::path> manifest;
            if (!manifest_path.empty())
                manifest = manifest_path;
            archrec::cli::cmd_optimize_weights(manifest, budget, opt_seed, weights_out, std::cerr);
            std::cout << "wrote " << weights_out << "\n";
        } else if (sweep->parsed()) {
            const RunConfig cfg = sweep_flags.build();
            const auto rows = archrec::cli::cmd_sweep(cfg, gammas);
            std::cout << "gamma,clusters\n";
            for (const auto& [gamma, count] : rows)
                std::cout << gamma << "," << count << "\n";
        }
    } catch (const archrec::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
