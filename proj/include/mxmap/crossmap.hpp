#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mxmap/embedding.hpp"

namespace mxmap {

/// k nearest rows of one query row, distances sorted ascending, ties broken
/// by lower row index. The query row itself is always excluded.
struct NeighborSet {
    std::size_t query_row = 0;
    std::vector<std::size_t> neighbor_rows;
    std::vector<double> distances;
};

/// Neighbor lists for every row of an embedding, row-major [rows x k].
struct KnnTable {
    std::size_t rows = 0;
    std::size_t k = 0;
    std::vector<std::uint32_t> index;
    std::vector<double> distance;

    std::span<const std::uint32_t> neighbors(std::size_t r) const {
        return {index.data() + r * k, k};
    }
    std::span<const double> distances(std::size_t r) const {
        return {distance.data() + r * k, k};
    }
};

/// Exact brute-force k nearest neighbors of a single row by Euclidean
/// distance. Rows within `exclusion_radius` of the query (in time) are
/// skipped; radius 0 excludes only the query itself.
/// Throws ParameterError when fewer than k rows remain eligible.
NeighborSet knn_neighbors(const Embedding& emb, std::size_t query_row, std::size_t k,
                          std::size_t exclusion_radius = 0);

/// Neighbor table for all rows; identical contents to calling knn_neighbors
/// per row.
KnnTable knn_table(const Embedding& emb, std::size_t k, std::size_t exclusion_radius = 0,
                   int threads = 1);

/// Exponential simplex weights w_i = exp(-d_i / d_min), normalized to sum 1.
/// When d_min == 0 the weights degenerate to uniform over the zero-distance
/// neighbors. `dist` must be sorted ascending.
void simplex_weights(std::span<const double> dist, std::span<double> weights);

/// A reconstructed series aligned to embedding rows: values[r] corresponds
/// to absolute time offset + r.
struct AlignedSeries {
    std::size_t offset = 0;
    std::vector<double> values;
};

/// Simplex projection: for each row of the source embedding, the weighted
/// average of the target values at the neighbors' times.
/// `target` is indexed by absolute time and must cover [offset, offset + rows).
AlignedSeries simplex_reconstruct(const Embedding& source_emb, const TimeSeries& target,
                                  std::size_t k, std::size_t exclusion_radius = 0);

/// Variant over a precomputed neighbor table of the source embedding.
AlignedSeries simplex_reconstruct(const Embedding& source_emb, const KnnTable& table,
                                  std::span<const double> target_by_time);

/// Directional cross-map scores for one pair. beta_forward scores
/// X_i => X_j, beta_backward scores X_j => X_i.
struct CCMResult {
    double beta_forward = 0.0;
    double beta_backward = 0.0;
    std::size_t library_length = 0;
};

/// Cross-map correlation diagnostic over increasing library sizes.
struct ConvergenceCurve {
    std::vector<std::size_t> lengths;
    std::vector<double> scores;
};

/// CCM score for `cause => effect`: Pearson correlation between the true
/// cause values and their reconstruction cross-mapped from the effect's
/// embedding. Throws DegenerateInputError on zero-variance input and
/// ParameterError when the series are too short for (tau, dim, k).
double ccm_score(const TimeSeries& cause, const TimeSeries& effect, const EmbedParams& params,
                 std::size_t exclusion_radius = 0);

/// Both directions of ccm_score for a pair.
CCMResult ccm_pair(const TimeSeries& x_i, const TimeSeries& x_j, const EmbedParams& params,
                   std::size_t exclusion_radius = 0);

/// ccm_score computed on prefixes of the stated lengths.
/// Lengths must be strictly increasing and each at least the embedding
/// minimum plus k.
ConvergenceCurve convergence_curve(const TimeSeries& cause, const TimeSeries& effect,
                                   const EmbedParams& params, std::span<const std::size_t> lengths);

} // namespace mxmap
