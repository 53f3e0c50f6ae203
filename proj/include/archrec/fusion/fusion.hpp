#ifndef ARCHREC_FUSION_FUSION_HPP
#define ARCHREC_FUSION_FUSION_HPP

#include <optional>
#include <string>

#include "archrec/core/model.hpp"
#include "archrec/depgraph/file_graph.hpp"
#include "archrec/textual/correlation.hpp"

namespace archrec::fusion {

// Quality weights of the two supporting information sources, measured by how
// closely their single-source recoveries agree with the dependency recovery.
struct FusionWeights {
    double text = 0.0;    // in [0, 1]
    double folder = 0.0;  // in [0, 1]; clamped to <= 0.95 before coef_f use
};

struct FuseOptions {
    double coef_floor = 0.05;          // keeps coef_t positive under anticorrelation
    double corr_add_threshold = 0.8;   // add bidirectional edges above this correlation
    double max_folder_weight = 0.95;   // bounds coef_f at 20
};

// Community detection on the weighted file graph at the given resolution.
Architecture recover_dep_only(const FileGraph& fg, double resolution);

// Complete-linkage agglomerative clustering of 1 - correlation, cut at k.
Architecture recover_text_only(const textual::TopicCorrelations& correlations, std::size_t k);

// Both weights compare a single-source recovery against the dependency one
// (directional by design); a2a_adj's percent scale maps onto [0, 1].
FusionWeights assign_weights(const Architecture& dep, const Architecture& text,
                             const Architecture& folder);

// Multiplies every edge by coef_t = 1 + corr * w_text (floored), and adds a
// bidirectional edge of typical strength between unconnected pairs whose
// correlation clears the threshold. w_text == 0 leaves the graph untouched.
FileGraph apply_text_coefficients(FileGraph fg, const textual::TopicCorrelations& correlations,
                                  double w_text, const FuseOptions& opts = {});

// Multiplies edges whose endpoints share a surviving folder cluster by
// coef_f = 1 / (1 - w_folder), with w_folder clamped below 1.
FileGraph apply_folder_coefficients(FileGraph fg, const FolderTree& filtered_tree, double w_folder,
                                    const FuseOptions& opts = {});

// Final graph: original weight x coef_t x coef_f. Null correlations or tree
// skip the corresponding stage, which is the ablation identity.
FileGraph fuse(FileGraph fg, const textual::TopicCorrelations* correlations,
               const FolderTree* filtered_tree, const FusionWeights& weights,
               const FuseOptions& opts = {});

} // namespace archrec::fusion

#endif
