#include "mxmap/pcm.hpp"

#include <cmath>
#include <string>

#include "mxmap/errors.hpp"

namespace mxmap {

double correlation(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw ParameterError("correlation inputs have different lengths");
    const std::size_t n = a.size();
    if (n < 2) throw ParameterError("correlation needs at least 2 samples");
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= static_cast<double>(n);
    mb /= static_cast<double>(n);
    double saa = 0.0, sbb = 0.0, sab = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double da = a[i] - ma;
        const double db = b[i] - mb;
        saa += da * da;
        sbb += db * db;
        sab += da * db;
    }
    if (saa == 0.0 || sbb == 0.0)
        throw DegenerateInputError("correlation undefined for a zero-variance series");
    return sab / std::sqrt(saa * sbb);
}

double partial_correlation(std::span<const double> a, std::span<const double> b,
                           std::span<const double> c) {
    const double r_ab = correlation(a, b);
    const double r_ac = correlation(a, c);
    const double r_bc = correlation(b, c);
    const double den2 = (1.0 - r_ac * r_ac) * (1.0 - r_bc * r_bc);
    const double den = den2 > 0.0 ? std::sqrt(den2) : 0.0;
    if (den < 1e-12)
        throw SingularConditioningError(
            "conditioning variable is perfectly correlated with an argument");
    return (r_ab - r_ac * r_bc) / den;
}

void PCMConfig::validate() const {
    embed.validate();
    if (!(gamma_star > 0.0 && gamma_star < 1.0))
        throw ParameterError("gamma_star must lie in (0, 1)");
    if (H && !(*H >= 0.0 && *H < 1.0)) throw ParameterError("H must lie in [0, 1)");
}

PCMResult multi_pcm(const TimeSeries& x1, const TimeSeries& x2,
                    std::span<const TimeSeries> conds, const PCMConfig& cfg) {
    cfg.validate();
    if (conds.empty())
        throw ParameterError("multi_pcm requires a nonempty condition set");
    if (x1.length() != x2.length())
        throw DataError("series '" + x1.name + "' and '" + x2.name + "' have different lengths");
    const std::size_t k = cfg.embed.effective_k();

    Embedding m2 = build_delay_embedding(x2, cfg.embed);
    if (m2.rows <= k)
        throw ParameterError("series length " + std::to_string(x2.length()) +
                             " too short for (tau=" + std::to_string(cfg.embed.tau) +
                             ", dim=" + std::to_string(cfg.embed.dim) +
                             ", k=" + std::to_string(k) + ")");
    Embedding mc = build_multivariate_embedding(conds, cfg.embed);

    KnnTable nn2 = knn_table(m2, k, cfg.exclusion_radius);

    // Apparent path: x1 reconstructed straight from the effect's manifold.
    AlignedSeries x1_hat = simplex_reconstruct(m2, nn2, x1.values);

    // Conditioned path: rebuild the condition manifold point by point with
    // the same neighbor weights, then cross map from that cloud to x1.
    Embedding cloud;
    cloud.rows = mc.rows;
    cloud.cols = mc.cols;
    cloud.offset = mc.offset;
    cloud.source_names = mc.source_names;
    cloud.params = mc.params;
    cloud.points.assign(mc.rows * mc.cols, 0.0);
    {
        std::vector<double> w(k);
        for (std::size_t r = 0; r < mc.rows; ++r) {
            auto idx = nn2.neighbors(r);
            simplex_weights(nn2.distances(r), w);
            double* dst = cloud.points.data() + r * cloud.cols;
            for (std::size_t i = 0; i < k; ++i) {
                const double* src = mc.points.data() + idx[i] * mc.cols;
                const double wi = w[i];
                for (std::size_t c = 0; c < mc.cols; ++c) dst[c] += wi * src[c];
            }
        }
    }
    KnnTable nn_cloud = knn_table(cloud, k, cfg.exclusion_radius);
    AlignedSeries x1_via_conds = simplex_reconstruct(cloud, nn_cloud, x1.values);

    std::span<const double> truth{x1.values.data() + m2.offset, m2.rows};
    PCMResult out;
    out.rho_all = std::abs(correlation(truth, x1_hat.values));
    out.rho_direct = std::abs(partial_correlation(truth, x1_hat.values, x1_via_conds.values));
    out.gamma = out.rho_all > 0.0 ? out.rho_direct / out.rho_all : 0.0;
    return out;
}

PCMResult pcm_univariate(const TimeSeries& x, const TimeSeries& y, const TimeSeries& z,
                         const PCMConfig& cfg) {
    const TimeSeries conds[] = {y};
    return multi_pcm(x, z, conds, cfg);
}

LinkClass classify_link(const PCMResult& result, double gamma_star) {
    return result.gamma >= gamma_star ? LinkClass::Direct : LinkClass::Indirect;
}

LegacyLinkClass classify_link_legacy(const PCMResult& result, double H) {
    if (result.rho_all < H) return LegacyLinkClass::NoCausality;
    if (result.rho_direct >= H) return LegacyLinkClass::Direct;
    return LegacyLinkClass::Indirect;
}

} // namespace mxmap
