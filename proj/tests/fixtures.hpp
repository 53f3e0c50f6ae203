#ifndef ARCHREC_TESTS_FIXTURES_HPP
#define ARCHREC_TESTS_FIXTURES_HPP

#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "archrec/core/model.hpp"
#include "archrec/ingest/dependency_json.hpp"

namespace testutil {

namespace fs = std::filesystem;

struct ProjectOptions {
    int modules = 3;
    int files_per_module = 4;
    bool folders_match_modules = true;   // false: flat layout, all files in root
    bool distinctive_vocabulary = true;  // false: generic words shared across modules
    int cross_module_uses = 6;
    std::uint64_t seed = 1;
};

struct SyntheticProject {
    fs::path root;        // source tree
    fs::path deps_json;   // canonical dependency file
    archrec::DependencyGraph graph;
    archrec::Architecture ground_truth;  // planted module partition
};

// Per-module vocabularies: distinctive mode keeps them disjoint, generic mode
// shares one pool so text carries no module signal.
inline std::vector<std::vector<std::string>> vocabularies(const ProjectOptions& opts) {
    static const std::vector<std::string> pool = {
        "render", "canvas", "pixel",  "shader", "widget",  "layout",
        "socket", "packet", "stream", "buffer", "channel", "session",
        "token",  "symbol", "parser", "syntax", "grammar", "scanner",
        "mirror", "backup", "volume", "sector", "journal", "replica",
        "tensor", "matrix", "kernel", "solver", "jacobi",  "newton",
    };
    std::vector<std::vector<std::string>> out;
    for (int m = 0; m < opts.modules; ++m) {
        std::vector<std::string> words;
        if (opts.distinctive_vocabulary) {
            for (int k = 0; k < 6; ++k)
                words.push_back(pool[(m * 6 + k) % pool.size()]);
        } else {
            words = {"update", "handle", "process", "manage", "general", "shared"};
        }
        out.push_back(std::move(words));
    }
    return out;
}

inline SyntheticProject make_planted_project(const fs::path& dir, const ProjectOptions& opts) {
    fs::remove_all(dir);
    fs::create_directories(dir);
    SyntheticProject project;
    project.root = dir / "src";
    fs::create_directories(project.root);

    std::mt19937_64 rng(opts.seed);
    const auto vocab = vocabularies(opts);

    std::map<std::string, std::set<std::string>> truth;
    std::vector<std::vector<std::string>> file_ids(opts.modules);
    std::vector<std::vector<std::string>> fn_ids(opts.modules);

    for (int m = 0; m < opts.modules; ++m) {
        const std::string module = "mod" + std::to_string(m);
        for (int i = 0; i < opts.files_per_module; ++i) {
            const std::string base = module + "_" + std::to_string(i) + ".c";
            const std::string rel = opts.folders_match_modules ? module + "/" + base : base;

            archrec::Entity file;
            file.id = rel;
            file.kind = archrec::EntityKind::File;
            file.name = rel;
            file.file_id = rel;
            project.graph.add_entity(file);

            const std::string fn_name =
                "do" + std::string(1, static_cast<char>('A' + m)) + std::to_string(i) + "Work";
            archrec::Entity fn;
            fn.id = rel + "::" + fn_name;
            fn.kind = archrec::EntityKind::Function;
            fn.name = fn_name;
            fn.file_id = rel;
            project.graph.add_entity(fn);

            file_ids[m].push_back(rel);
            fn_ids[m].push_back(fn.id);
            truth[module].insert(rel);

            // source: one comment per vocabulary word, then the definition
            std::ostringstream src;
            const auto& words = vocab[m];
            for (std::size_t w = 0; w < words.size(); ++w)
                src << "/* " << words[w] << " " << words[(w + 1) % words.size()] << " */\n";
            if (!opts.distinctive_vocabulary) {
                // sprinkle incoherent extras so correlations stay noisy
                static const std::vector<std::string> noise = {
                    "quark", "lumen", "ember", "frost", "cedar", "basalt",
                    "onyx",  "tundra", "umbra", "zephyr",
                };
                for (int k = 0; k < 3; ++k)
                    src << "/* " << noise[rng() % noise.size()] << " */\n";
            }
            src << "int " << fn_name << "(void) { return " << i << "; }\n";

            const fs::path path = project.root / rel;
            fs::create_directories(path.parent_path());
            std::ofstream out(path, std::ios::binary);
            out << src.str();
        }
    }

    // intra-module call rings (dense enough to dominate)
    for (int m = 0; m < opts.modules; ++m) {
        const int n = opts.files_per_module;
        for (int i = 0; i < n; ++i) {
            for (int k = 1; k <= 2 && k < n; ++k) {
                archrec::DependencyEdge e;
                e.src = fn_ids[m][i];
                e.dst = fn_ids[m][(i + k) % n];
                e.dep_type = "Call";
                e.multiplicity = 2;
                project.graph.add_edge(e);
            }
        }
    }
    // sparse cross-module noise
    for (int t = 0; t < opts.cross_module_uses; ++t) {
        const int m1 = static_cast<int>(rng() % opts.modules);
        const int m2 = static_cast<int>(rng() % opts.modules);
        if (m1 == m2)
            continue;
        const int i1 = static_cast<int>(rng() % opts.files_per_module);
        const int i2 = static_cast<int>(rng() % opts.files_per_module);
        archrec::DependencyEdge e;
        e.src = fn_ids[m1][i1];
        e.dst = fn_ids[m2][i2];
        e.dep_type = "Use";
        e.multiplicity = 1;
        project.graph.add_edge(e);
    }

    project.deps_json = dir / "deps.json";
    archrec::write_dependency_json(project.graph, project.deps_json);
    project.ground_truth = archrec::Architecture::from_clusters(std::move(truth));
    return project;
}

} // namespace testutil

#endif
