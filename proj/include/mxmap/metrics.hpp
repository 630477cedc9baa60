#pragma once

#include <string>

#include "mxmap/graph.hpp"

namespace mxmap {

/// Edge-level precision/recall/F1 plus the structural Hamming distance
/// (entrywise adjacency disagreement count).
struct MetricsReport {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::size_t shd = 0;

    std::string to_json() const;
    /// Fixed-width text table.
    std::string to_text() const;
};

/// Compares a predicted graph against the ground truth. Ratios with an
/// empty denominator are reported as 0. Throws DataError when the node
/// names differ.
MetricsReport evaluate(const CausalGraph& truth, const CausalGraph& pred);

} // namespace mxmap
