#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mxmap/graph.hpp"
#include "mxmap/pcm.hpp"
#include "mxmap/timeseries.hpp"

namespace mxmap {

/// Settings of the two-phase discovery driver.
///
/// Phase 1 establishes the direction with the higher absolute cross-map
/// score for every pair whose winning score reaches ccm_threshold; scores
/// within tie_epsilon of each other (both above threshold) yield a
/// bidirectional link when tie_epsilon > 0.
/// Phase 2 prunes an edge when the multiPCM ratio conditioned on its
/// intermediate nodes falls below gamma_star.
struct MXMapConfig {
    EmbedParams embed;
    double ccm_threshold = 0.5;
    double gamma_star = 0.45;
    double tie_epsilon = 0.0;
    std::size_t exclusion_radius = 0;
    int threads = 1;

    void validate() const;
};

/// Cross-map scores of one unordered pair; ok == false records a per-pair
/// failure (the pair is skipped, discovery continues).
struct PairScore {
    std::size_t i = 0;
    std::size_t j = 0;
    CCMResult result;
    bool ok = true;
    std::string error;
};

/// Phase-2 decision for one tested edge.
struct PruneRecord {
    std::size_t i = 0;
    std::size_t j = 0;
    std::vector<std::size_t> conds;
    PCMResult result;
    bool removed = false;
    bool ok = true;
    std::string error;
};

/// Full audit trail of a discovery run. final_graph edges are always a
/// subset of phase1_graph edges.
struct DiscoveryReport {
    CausalGraph phase1_graph;
    CausalGraph final_graph;
    std::vector<PairScore> pair_scores;
    std::vector<PruneRecord> prune_log;

    std::string to_json() const;
};

/// Phase 1: pairwise CCM over all unordered pairs.
CausalGraph phase1(const Dataset& data, const MXMapConfig& cfg,
                   std::vector<PairScore>* log = nullptr);

/// Phase 2: multiPCM pruning of mediated edges. Path queries run against a
/// frozen snapshot of `g`, so the result does not depend on edge order.
/// Edges without a mediating path are kept untested; a multiPCM failure
/// keeps the edge and records the error.
CausalGraph phase2(const Dataset& data, const CausalGraph& g, const MXMapConfig& cfg,
                   std::vector<PruneRecord>* log = nullptr);

/// phase1 followed by phase2, with the full audit trail.
DiscoveryReport discover(const Dataset& data, const MXMapConfig& cfg);

} // namespace mxmap
