#include "mxmap/embedding.hpp"

#include <string>

#include "mxmap/errors.hpp"

namespace mxmap {

void EmbedParams::validate() const {
    if (tau < 1) throw ParameterError("tau must be >= 1, got " + std::to_string(tau));
    if (dim < 1) throw ParameterError("dim must be >= 1, got " + std::to_string(dim));
    if (k < 0) throw ParameterError("k must be >= 1 (or 0 for the default), got " + std::to_string(k));
}

Embedding build_delay_embedding(const TimeSeries& series, const EmbedParams& params) {
    params.validate();
    const std::size_t T = series.length();
    const std::size_t offset = static_cast<std::size_t>(params.dim - 1) * params.tau;
    if (T <= offset)
        throw ParameterError("series '" + series.name + "' has length " + std::to_string(T) +
                             " but (tau=" + std::to_string(params.tau) +
                             ", dim=" + std::to_string(params.dim) + ") needs at least " +
                             std::to_string(params.min_length()));
    const std::size_t rows = T - offset;
    const std::size_t cols = static_cast<std::size_t>(params.dim);

    Embedding emb;
    emb.rows = rows;
    emb.cols = cols;
    emb.offset = offset;
    emb.source_names = {series.name};
    emb.params = params;
    emb.points.resize(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::size_t t = offset + r;
        double* row = emb.points.data() + r * cols;
        for (std::size_t c = 0; c < cols; ++c) row[c] = series.values[t - c * params.tau];
    }
    return emb;
}

Embedding build_multivariate_embedding(std::span<const TimeSeries> series_set,
                                       const EmbedParams& params) {
    if (series_set.empty())
        throw ParameterError("multivariate embedding needs at least one series");
    const std::size_t T = series_set.front().length();
    for (const auto& s : series_set)
        if (s.length() != T)
            throw DataError("series '" + s.name + "' has length " + std::to_string(s.length()) +
                            ", expected " + std::to_string(T));

    std::vector<Embedding> parts;
    parts.reserve(series_set.size());
    for (const auto& s : series_set) parts.push_back(build_delay_embedding(s, params));

    const std::size_t rows = parts.front().rows;
    const std::size_t block = parts.front().cols;
    Embedding emb;
    emb.rows = rows;
    emb.cols = block * parts.size();
    emb.offset = parts.front().offset;
    emb.params = params;
    emb.points.resize(rows * emb.cols);
    for (const auto& p : parts) emb.source_names.push_back(p.source_names.front());
    for (std::size_t r = 0; r < rows; ++r) {
        double* row = emb.points.data() + r * emb.cols;
        for (std::size_t s = 0; s < parts.size(); ++s) {
            const double* src = parts[s].points.data() + r * block;
            for (std::size_t c = 0; c < block; ++c) row[s * block + c] = src[c];
        }
    }
    return emb;
}

} // namespace mxmap
