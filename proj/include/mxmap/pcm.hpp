#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mxmap/crossmap.hpp"

namespace mxmap {

/// Pearson product-moment correlation.
/// Throws ParameterError on length mismatch or length < 2 and
/// DegenerateInputError when either input has zero variance.
double correlation(std::span<const double> a, std::span<const double> b);

/// First-order partial correlation of a and b given c:
/// (r_ab - r_ac r_bc) / sqrt((1 - r_ac^2)(1 - r_bc^2)).
/// Throws SingularConditioningError when the denominator vanishes.
double partial_correlation(std::span<const double> a, std::span<const double> b,
                           std::span<const double> c);

/// Scores of one partial-cross-mapping test. rho_all is the absolute
/// correlation of the apparent cross map, rho_direct the absolute partial
/// correlation after conditioning, gamma their ratio (0 when rho_all == 0).
struct PCMResult {
    double rho_all = 0.0;
    double rho_direct = 0.0;
    double gamma = 0.0;
};

struct PCMConfig {
    EmbedParams embed;
    double gamma_star = 0.45;
    /// Legacy three-way correlation threshold; unused by the ratio rule.
    std::optional<double> H;
    std::size_t exclusion_radius = 0;

    void validate() const;
};

enum class LinkClass { Direct, Indirect };
enum class LegacyLinkClass { Direct, Indirect, NoCausality };

/// Multivariate partial cross mapping of the alleged link x1 => x2 given a
/// nonempty condition set.
///
/// Apparent path: x1 reconstructed from the delay embedding of x2.
/// Conditioned path: every coordinate of the stacked condition embedding is
/// reconstructed with the neighbor weights of the x2 embedding; the
/// resulting point cloud acts as a source embedding whose simplex
/// projection reconstructs x1 again.
///
/// With a single condition this is exactly the univariate PCM.
PCMResult multi_pcm(const TimeSeries& x1, const TimeSeries& x2,
                    std::span<const TimeSeries> conds, const PCMConfig& cfg);

/// Univariate partial cross mapping: does x cause z directly, or only
/// through the condition y? Identical to multi_pcm with conds = {y}.
PCMResult pcm_univariate(const TimeSeries& x, const TimeSeries& y, const TimeSeries& z,
                         const PCMConfig& cfg);

/// Ratio rule: Direct iff gamma >= gamma_star.
LinkClass classify_link(const PCMResult& result, double gamma_star);

/// Legacy threshold rule over (rho_all, rho_direct) with threshold H.
LegacyLinkClass classify_link_legacy(const PCMResult& result, double H);

} // namespace mxmap
