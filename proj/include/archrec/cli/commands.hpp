#ifndef ARCHREC_CLI_COMMANDS_HPP
#define ARCHREC_CLI_COMMANDS_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "archrec/cli/config.hpp"
#include "archrec/core/model.hpp"
#include "archrec/depgraph/optimize.hpp"
#include "archrec/fusion/fusion.hpp"
#include "archrec/metrics/metrics.hpp"

namespace archrec::cli {

struct RecoverResult {
    Architecture architecture;
    fusion::FusionWeights weights;
    std::optional<double> modularity_q;
    bool importance_fallback = false;  // graph had no functions to rank
    std::filesystem::path rsf_path;
};

// Full pipeline: ingest -> importance -> weighting -> single-source
// recoveries -> fusion -> clustering. Writes architecture.rsf,
// architecture.json, provenance.json and the cached intermediates into
// the configured output directory.
RecoverResult cmd_recover(const RunConfig& cfg);

// Five-metric comparison of two RSF files; prints a CSV row and a table.
metrics::MetricReport cmd_evaluate(const std::filesystem::path& recovered,
                                   const std::filesystem::path& ground_truth, double threshold,
                                   const std::string& project, std::ostream& out);

// Runs the type-weight optimizer over the dependency files listed in the
// manifest and writes the resulting weights file. Without a manifest the
// shipped defaults are written with a warning.
OptimizeResult cmd_optimize_weights(const std::optional<std::filesystem::path>& manifest,
                                    int budget, std::uint64_t seed,
                                    const std::filesystem::path& out_file, std::ostream& log);

// One recovery per gamma with the gamma-independent artifacts shared;
// returns (gamma, cluster count) rows and writes sweep.csv.
std::vector<std::pair<double, std::size_t>> cmd_sweep(const RunConfig& cfg,
                                                      const std::vector<double>& gammas);

} // namespace archrec::cli

#endif
