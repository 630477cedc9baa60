#include "mxmap/crossmap.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mxmap/errors.hpp"
#include "mxmap/parallel.hpp"
#include "mxmap/pcm.hpp"

namespace mxmap {

namespace {

// Selects the k nearest rows to `query` into idx/dist (sorted by distance,
// ties by row index). `scratch` holds (squared distance, row) pairs.
void select_neighbors(const Embedding& emb, std::size_t query, std::size_t k,
                      std::size_t exclusion_radius,
                      std::vector<std::pair<double, std::uint32_t>>& scratch,
                      std::uint32_t* idx_out, double* dist_out) {
    const std::size_t n = emb.rows;
    const std::size_t cols = emb.cols;
    const double* base = emb.points.data();
    const double* q = base + query * cols;

    scratch.clear();
    const std::size_t lo = query > exclusion_radius ? query - exclusion_radius : 0;
    const std::size_t hi = std::min(n, query + exclusion_radius + 1);
    for (std::size_t r = 0; r < n; ++r) {
        if (r >= lo && r < hi) continue;
        const double* p = base + r * cols;
        double d2 = 0.0;
        for (std::size_t c = 0; c < cols; ++c) {
            const double diff = q[c] - p[c];
            d2 += diff * diff;
        }
        scratch.emplace_back(d2, static_cast<std::uint32_t>(r));
    }
    if (scratch.size() < k)
        throw ParameterError("k=" + std::to_string(k) + " neighbors requested but only " +
                             std::to_string(scratch.size()) + " eligible rows");
    std::partial_sort(scratch.begin(), scratch.begin() + k, scratch.end());
    for (std::size_t i = 0; i < k; ++i) {
        idx_out[i] = scratch[i].second;
        dist_out[i] = std::sqrt(scratch[i].first);
    }
}

} // namespace

NeighborSet knn_neighbors(const Embedding& emb, std::size_t query_row, std::size_t k,
                          std::size_t exclusion_radius) {
    if (k < 1) throw ParameterError("k must be >= 1");
    if (query_row >= emb.rows)
        throw ParameterError("query row " + std::to_string(query_row) + " out of range");
    if (k >= emb.rows)
        throw ParameterError("k=" + std::to_string(k) + " must be below the row count " +
                             std::to_string(emb.rows));
    NeighborSet out;
    out.query_row = query_row;
    out.neighbor_rows.resize(k);
    out.distances.resize(k);
    std::vector<std::pair<double, std::uint32_t>> scratch;
    std::vector<std::uint32_t> idx(k);
    select_neighbors(emb, query_row, k, exclusion_radius, scratch, idx.data(),
                     out.distances.data());
    std::copy(idx.begin(), idx.end(), out.neighbor_rows.begin());
    return out;
}

KnnTable knn_table(const Embedding& emb, std::size_t k, std::size_t exclusion_radius,
                   int threads) {
    if (k < 1) throw ParameterError("k must be >= 1");
    if (k >= emb.rows)
        throw ParameterError("k=" + std::to_string(k) + " must be below the row count " +
                             std::to_string(emb.rows));
    KnnTable table;
    table.rows = emb.rows;
    table.k = k;
    table.index.resize(emb.rows * k);
    table.distance.resize(emb.rows * k);
    parallel_for(emb.rows, threads, [&](std::size_t r) {
        thread_local std::vector<std::pair<double, std::uint32_t>> scratch;
        select_neighbors(emb, r, k, exclusion_radius, scratch, table.index.data() + r * k,
                         table.distance.data() + r * k);
    });
    return table;
}

void simplex_weights(std::span<const double> dist, std::span<double> weights) {
    const std::size_t k = dist.size();
    const double dmin = dist[0];
    double sum = 0.0;
    if (dmin > 0.0) {
        for (std::size_t i = 0; i < k; ++i) {
            weights[i] = std::exp(-dist[i] / dmin);
            sum += weights[i];
        }
    } else {
        for (std::size_t i = 0; i < k; ++i) {
            weights[i] = dist[i] == 0.0 ? 1.0 : 0.0;
            sum += weights[i];
        }
    }
    for (std::size_t i = 0; i < k; ++i) weights[i] /= sum;
}

AlignedSeries simplex_reconstruct(const Embedding& source_emb, const KnnTable& table,
                                  std::span<const double> target_by_time) {
    if (target_by_time.size() < source_emb.offset + source_emb.rows)
        throw ParameterError("target series does not cover the embedding's valid time range");
    AlignedSeries out;
    out.offset = source_emb.offset;
    out.values.resize(source_emb.rows);
    std::vector<double> w(table.k);
    for (std::size_t r = 0; r < source_emb.rows; ++r) {
        auto idx = table.neighbors(r);
        simplex_weights(table.distances(r), w);
        double acc = 0.0;
        for (std::size_t i = 0; i < table.k; ++i)
            acc += w[i] * target_by_time[source_emb.offset + idx[i]];
        out.values[r] = acc;
    }
    return out;
}

AlignedSeries simplex_reconstruct(const Embedding& source_emb, const TimeSeries& target,
                                  std::size_t k, std::size_t exclusion_radius) {
    KnnTable table = knn_table(source_emb, k, exclusion_radius);
    return simplex_reconstruct(source_emb, table, target.values);
}

double ccm_score(const TimeSeries& cause, const TimeSeries& effect, const EmbedParams& params,
                 std::size_t exclusion_radius) {
    params.validate();
    if (cause.length() != effect.length())
        throw DataError("series '" + cause.name + "' and '" + effect.name +
                        "' have different lengths");
    const std::size_t k = params.effective_k();
    if (effect.length() < params.min_length() + k)
        throw ParameterError("series length " + std::to_string(effect.length()) +
                             " too short for (tau=" + std::to_string(params.tau) +
                             ", dim=" + std::to_string(params.dim) + ", k=" + std::to_string(k) +
                             "); need at least " + std::to_string(params.min_length() + k));
    Embedding m_effect = build_delay_embedding(effect, params);
    AlignedSeries rec = simplex_reconstruct(m_effect, cause, k, exclusion_radius);
    return correlation({cause.values.data() + rec.offset, rec.values.size()}, rec.values);
}

CCMResult ccm_pair(const TimeSeries& x_i, const TimeSeries& x_j, const EmbedParams& params,
                   std::size_t exclusion_radius) {
    CCMResult out;
    out.beta_forward = ccm_score(x_i, x_j, params, exclusion_radius);
    out.beta_backward = ccm_score(x_j, x_i, params, exclusion_radius);
    out.library_length = x_i.length();
    return out;
}

ConvergenceCurve convergence_curve(const TimeSeries& cause, const TimeSeries& effect,
                                   const EmbedParams& params,
                                   std::span<const std::size_t> lengths) {
    if (lengths.empty()) throw ParameterError("convergence_curve needs at least one length");
    for (std::size_t i = 1; i < lengths.size(); ++i)
        if (lengths[i] <= lengths[i - 1])
            throw ParameterError("library lengths must be strictly increasing");
    if (lengths.back() > cause.length())
        throw ParameterError("library length " + std::to_string(lengths.back()) +
                             " exceeds the series length " + std::to_string(cause.length()));
    ConvergenceCurve curve;
    for (std::size_t len : lengths) {
        TimeSeries c{cause.name, {cause.values.begin(), cause.values.begin() + len}};
        TimeSeries e{effect.name, {effect.values.begin(), effect.values.begin() + len}};
        curve.lengths.push_back(len);
        curve.scores.push_back(ccm_score(c, e, params));
    }
    return curve;
}

} // namespace mxmap
