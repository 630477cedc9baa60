#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mxmap/timeseries.hpp"

namespace mxmap {

/// Delay-embedding parameters: lag tau, dimension dim, and neighbor count k.
/// k == 0 means "unset"; effective_k() then falls back to dim + 1, the
/// simplex convention.
struct EmbedParams {
    int tau = 1;
    int dim = 2;
    int k = 0;

    std::size_t effective_k() const { return k > 0 ? static_cast<std::size_t>(k) : static_cast<std::size_t>(dim) + 1; }

    /// Throws ParameterError when tau, dim, or the effective k is < 1.
    void validate() const;

    /// Smallest series length that yields at least one embedding row.
    std::size_t min_length() const { return static_cast<std::size_t>(dim - 1) * tau + 1; }
};

/// Matrix of delay vectors. Row r corresponds to absolute time
/// t = offset + r of the source series; a univariate row at time t is
/// [x_t, x_{t-tau}, ..., x_{t-(dim-1)tau}]. Stacked embeddings concatenate
/// one such block per source variable, so cols = dim * #sources.
struct Embedding {
    std::vector<double> points; // row-major, rows x cols
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t offset = 0;
    std::vector<std::string> source_names;
    EmbedParams params;

    std::span<const double> row(std::size_t r) const {
        return {points.data() + r * cols, cols};
    }
    /// Absolute time index of row r.
    std::size_t time_of(std::size_t r) const { return offset + r; }
};

/// Univariate delay embedding of one series.
/// Throws ParameterError when the series is too short for (tau, dim); the
/// message names the required minimum length.
Embedding build_delay_embedding(const TimeSeries& series, const EmbedParams& params);

/// Stacked multivariate embedding with a uniform (tau, dim) for every
/// series. Row at time t is the concatenation of the per-variable delay
/// vectors at t. Throws ParameterError on an empty collection and DataError
/// on unequal lengths.
Embedding build_multivariate_embedding(std::span<const TimeSeries> series_set,
                                       const EmbedParams& params);

} // namespace mxmap
