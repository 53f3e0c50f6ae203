#include "archrec/cli/commands.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "archrec/cli/formats.hpp"
#include "archrec/cluster/modularity.hpp"
#include "archrec/core/error.hpp"
#include "archrec/depgraph/importance.hpp"
#include "archrec/depgraph/weighting.hpp"
#include "archrec/folders/filter.hpp"
#include "archrec/fusion/linkage.hpp"
#include "archrec/ingest/dependency_json.hpp"
#include "archrec/ingest/folder_scan.hpp"
#include "archrec/ingest/text.hpp"
#include "archrec/textual/lda.hpp"
#include "archrec/textual/tfidf.hpp"

namespace archrec::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct TextArtifacts {
    textual::TopicCorrelations correlations{{}};
    std::vector<TopicEmbedding> embeddings;
    std::vector<fusion::LinkageMerge> merges;  // full dendrogram, reused per cut
    std::vector<std::string> skips;

    Architecture cut(std::size_t k) const {
        const auto& files = correlations.files();
        auto labels = fusion::cut_dendrogram(files.size(), merges, k);
        std::map<std::string, std::set<std::string>> clusters;
        for (std::size_t i = 0; i < files.size(); ++i) {
            char name[16];
            std::snprintf(name, sizeof(name), "c%05zu", labels[i]);
            clusters[name].insert(files[i]);
        }
        return Architecture::from_clusters(std::move(clusters));
    }
};

// Everything the per-gamma recovery step consumes but gamma cannot change.
struct PipelineArtifacts {
    DependencyGraph weighted;
    FileGraph fg;
    std::optional<TextArtifacts> text;
    std::optional<FolderTree> filtered_tree;
    std::optional<Architecture> folder_arch;
    bool importance_fallback = false;
};

// Errors carry the failing stage so CLI messages point at the right phase.
template <typename Fn>
auto stage(const char* name, Fn&& fn) {
    try {
        return fn();
    } catch (const InputError& e) {
        throw InputError(std::string("[") + name + "] " + e.what());
    } catch (const PipelineError& e) {
        throw PipelineError(std::string("[") + name + "] " + e.what());
    }
}

PipelineArtifacts build_pipeline(const RunConfig& cfg) {
    cfg.validate();
    if (cfg.deps_path.empty())
        throw InputError("paths.deps is required");

    PipelineArtifacts art;
    DependencyGraph g = stage("ingest", [&] { return parse_dependency_json(cfg.deps_path); });

    stage("importance", [&] {
        if (cfg.use_entity_importance) {
            DependencyGraph fn = function_subgraph(g);
            if (fn.empty()) {
                g = uniform_importance(std::move(g));
                art.importance_fallback = true;
            } else {
                g = propagate_importance(std::move(g), inverse_pagerank(fn));
            }
        } else {
            g = uniform_importance(std::move(g));
        }
        return 0;
    });

    stage("weighting", [&] {
        const TypeWeights tw = !cfg.use_type_weights ? TypeWeights::uniform()
                               : cfg.type_weights_file.empty()
                                   ? TypeWeights::defaults()
                                   : read_type_weights(cfg.type_weights_file);
        art.weighted = weigh_edges(std::move(g), tw);
        art.fg = aggregate_to_files(art.weighted);
        return 0;
    });

    if (cfg.use_text) {
        stage("textual", [&] {
            if (cfg.source_root.empty())
                throw InputError("paths.source_root is required when fusion.use_text is on");
            auto extracted = extract_text(cfg.source_root, art.weighted);

            std::set<std::string> extra_stopwords;
            if (!cfg.stopwords_file.empty()) {
                std::ifstream in(cfg.stopwords_file);
                if (!in)
                    throw InputError("cannot open stop word file: " + cfg.stopwords_file);
                std::string word;
                while (in >> word)
                    extra_stopwords.insert(word);
            }
            auto occs = preprocess_words(std::move(extracted.occurrences), extra_stopwords);

            textual::SourceKindWeights skw;
            skw.filename = cfg.text_weight_filename;
            skw.definition = cfg.text_weight_definition;
            skw.comment = cfg.text_weight_comment;
            occs = textual::weigh_words(std::move(occs), skw, art.weighted);

            textual::LdaConfig lda;
            lda.topics = cfg.lda_topics;
            lda.seed = cfg.effective_lda_seed();
            lda.iterations = cfg.lda_iterations;
            lda.beta = cfg.lda_beta;
            lda.weight_resolution = cfg.lda_weight_resolution;
            const auto model = textual::TopicModel::train(art.fg.nodes(), occs, lda);

            TextArtifacts text;
            text.embeddings = model.all_embeddings();
            text.correlations = textual::TopicCorrelations(text.embeddings);
            const std::size_t n = text.correlations.files().size();
            text.merges = fusion::complete_linkage(n, [&](std::size_t i, std::size_t j) {
                return 1.0 - text.correlations.corr(i, j);
            });
            text.skips = std::move(extracted.skips);
            art.text = std::move(text);
            return 0;
        });
    }

    if (cfg.use_folder) {
        stage("folders", [&] {
            const FolderTree tree = scan_folders(art.weighted);
            art.filtered_tree = folders::filter_folders(tree, art.fg);
            art.folder_arch = folders::folder_partition(*art.filtered_tree);
            return 0;
        });
    }
    return art;
}

struct GammaRecovery {
    Architecture architecture;
    fusion::FusionWeights weights;
    std::optional<double> modularity_q;
};

GammaRecovery recover_at(const PipelineArtifacts& art, const RunConfig& cfg, double gamma) {
    GammaRecovery out;
    const FileGraph fused = stage("fusion", [&] {
        const Architecture dep = fusion::recover_dep_only(art.fg, gamma);
        if (art.text) {
            const Architecture text = art.text->cut(dep.cluster_count());
            out.weights.text = metrics::a2a_adj(dep, text) / 100.0;
        }
        if (art.folder_arch)
            out.weights.folder = metrics::a2a_adj(dep, *art.folder_arch) / 100.0;

        fusion::FuseOptions opts;
        opts.coef_floor = cfg.coef_floor;
        return fusion::fuse(art.fg, art.text ? &art.text->correlations : nullptr,
                            art.filtered_tree ? &*art.filtered_tree : nullptr, out.weights, opts);
    });

    stage("clustering", [&] {
        out.architecture = cluster::greedy_modularity(fused, gamma);
        if (fused.total_weight() > 0.0)
            out.modularity_q = cluster::modularity(fused, out.architecture, gamma);
        return 0;
    });
    return out;
}

std::string format_double(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

void write_provenance(const RunConfig& cfg, const PipelineArtifacts& art,
                      const GammaRecovery& rec, const fs::path& out_dir) {
    json doc;
    doc["config"] = json::object();
    for (const auto& [k, v] : cfg.effective())
        doc["config"][k] = v;
    doc["inputs"]["deps"]["path"] = cfg.deps_path;
    doc["inputs"]["deps"]["digest"] = file_digest(cfg.deps_path);
    doc["inputs"]["source_root"] = cfg.source_root;
    doc["fusion_weights"]["text"] = rec.weights.text;
    doc["fusion_weights"]["folder"] = rec.weights.folder;
    doc["cluster_count"] = rec.architecture.cluster_count();
    if (rec.modularity_q)
        doc["modularity"] = *rec.modularity_q;
    else
        doc["modularity"] = nullptr;
    doc["importance_fallback"] = art.importance_fallback;
    doc["skipped_files"] = art.text ? art.text->skips.size() : 0;

    std::ofstream out(out_dir / "provenance.json", std::ios::binary);
    out << doc.dump(2) << "\n";
}

void write_intermediates(const PipelineArtifacts& art, const GammaRecovery& rec,
                         const fs::path& out_dir) {
    {
        json doc;
        doc["nodes"] = art.fg.nodes();
        doc["edges"] = json::array();
        for (const auto& [key, w] : art.fg.edges())
            doc["edges"].push_back({art.fg.node(key.first), art.fg.node(key.second), w});
        std::ofstream out(out_dir / "file_graph.json", std::ios::binary);
        out << doc.dump() << "\n";
    }
    {
        json doc;
        doc["text"] = rec.weights.text;
        doc["folder"] = rec.weights.folder;
        std::ofstream out(out_dir / "fusion_weights.json", std::ios::binary);
        out << doc.dump(2) << "\n";
    }
    if (art.text) {
        json doc;
        for (const auto& e : art.text->embeddings)
            doc["embeddings"][e.file_id] = e.distribution;
        std::ofstream out(out_dir / "embeddings.json", std::ios::binary);
        out << doc.dump() << "\n";

        std::ofstream skip(out_dir / "skip_report.txt", std::ios::binary);
        for (const auto& line : art.text->skips)
            skip << line << "\n";
    }
}

} // namespace

RecoverResult cmd_recover(const RunConfig& cfg) {
    if (cfg.out_dir.empty())
        throw InputError("paths.out is required");
    const fs::path out_dir = cfg.out_dir;
    fs::create_directories(out_dir);

    const PipelineArtifacts art = build_pipeline(cfg);
    const GammaRecovery rec = recover_at(art, cfg, cfg.resolution);

    RecoverResult result;
    result.architecture = rec.architecture;
    result.weights = rec.weights;
    result.modularity_q = rec.modularity_q;
    result.importance_fallback = art.importance_fallback;
    result.rsf_path = out_dir / "architecture.rsf";

    write_rsf(rec.architecture, result.rsf_path);
    write_architecture_json(rec.architecture, out_dir / "architecture.json");
    write_provenance(cfg, art, rec, out_dir);
    write_intermediates(art, rec, out_dir);
    return result;
}

metrics::MetricReport cmd_evaluate(const std::filesystem::path& recovered,
                                   const std::filesystem::path& ground_truth, double threshold,
                                   const std::string& project, std::ostream& out) {
    const Architecture a = read_rsf(recovered);
    const Architecture b = read_rsf(ground_truth);
    const auto report = metrics::evaluate_all(a, b, threshold);

    out << "project,mojofm,a2a,c2c_cvg,ari,a2a_adj\n";
    out << project << "," << std::fixed << std::setprecision(2) << report.mojofm << ","
        << report.a2a << "," << report.c2c_cvg << "," << report.ari << "," << report.a2a_adj
        << "\n";
    out.unsetf(std::ios::fixed);

    out << "\n";
    out << "  metric     score\n";
    out << "  -------  -------\n";
    auto row = [&](const char* name, double v) {
        out << "  " << std::left << std::setw(9) << name << std::right << std::setw(7)
            << std::fixed << std::setprecision(2) << v << "\n";
        out.unsetf(std::ios::fixed);
    };
    row("mojofm", report.mojofm);
    row("a2a", report.a2a);
    row("c2c_cvg", report.c2c_cvg);
    row("ari", report.ari);
    row("a2a_adj", report.a2a_adj);
    return report;
}

OptimizeResult cmd_optimize_weights(const std::optional<std::filesystem::path>& manifest,
                                    int budget, std::uint64_t seed,
                                    const std::filesystem::path& out_file, std::ostream& log) {
    if (!manifest) {
        log << "warning: no corpus manifest given; writing shipped default weights\n";
        OptimizeResult result;
        result.weights = TypeWeights::defaults();
        write_type_weights(result.weights, out_file);
        return result;
    }

    std::ifstream in(*manifest);
    if (!in)
        throw InputError("cannot open manifest: " + manifest->string());
    std::vector<DependencyGraph> corpus;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line.front() == '#')
            continue;
        fs::path p = line;
        if (p.is_relative())
            p = manifest->parent_path() / p;
        corpus.push_back(parse_dependency_json(p));
    }
    if (corpus.empty())
        throw InputError("manifest lists no dependency files: " + manifest->string());

    OptimizeResult result = optimize_type_weights(corpus, budget, seed);
    for (const auto& [eval, quality] : result.improvements)
        log << "eval " << eval << " best MQ " << format_double(quality) << "\n";
    log << "evaluations " << result.evaluations << " final MQ " << format_double(result.best_quality)
        << "\n";
    write_type_weights(result.weights, out_file);
    return result;
}

std::vector<std::pair<double, std::size_t>> cmd_sweep(const RunConfig& cfg,
                                                      const std::vector<double>& gammas) {
    if (gammas.empty())
        throw InputError("sweep: no resolutions given");
    for (double g : gammas)
        if (g <= 0.0)
            throw InputError("sweep: resolutions must be > 0");
    if (cfg.out_dir.empty())
        throw InputError("paths.out is required");
    const fs::path out_dir = cfg.out_dir;
    fs::create_directories(out_dir);

    const PipelineArtifacts art = build_pipeline(cfg);
    std::vector<std::pair<double, std::size_t>> rows;
    rows.reserve(gammas.size());
    for (double gamma : gammas) {
        const GammaRecovery rec = recover_at(art, cfg, gamma);
        rows.emplace_back(gamma, rec.architecture.cluster_count());
    }

    std::ofstream csv(out_dir / "sweep.csv", std::ios::binary);
    csv << "gamma,clusters\n";
    for (const auto& [gamma, count] : rows)
        csv << format_double(gamma) << "," << count << "\n";
    return rows;
}

} // namespace archrec::cli
