#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mxmap/graph.hpp"
#include "mxmap/timeseries.hpp"

namespace mxmap {

/// Noise settings of the generator. eps_std is the standard deviation of
/// additive Gaussian noise; eta is a multiplicative factor on the
/// deterministic part (identity by default).
struct NoiseConfig {
    double eps_std = 0.0;
    double eta = 1.0;
};

/// Coefficients of one benchmark system: autonomous coefficients alpha and
/// the coupling matrix beta, where beta[cause][effect] is nonzero (0.35)
/// exactly when cause -> effect is a ground-truth edge.
struct SystemPreset {
    std::string name;
    std::vector<std::string> variable_names;
    std::vector<double> alpha;
    std::vector<std::vector<double>> beta;

    std::size_t size() const { return alpha.size(); }
    /// Ground-truth graph implied by the nonzero beta entries.
    CausalGraph truth() const;
};

/// One deterministic update of the coupled competition map:
///   x_i' = x_i * (alpha_i - alpha_i x_i - sum_{j != i} beta[j][i] x_j)
SystemPreset preset(const std::string& name);
std::vector<std::string> preset_names();

std::vector<double> step(const SystemPreset& preset, const std::vector<double>& state);

/// Simulates the system from seeded random initial conditions in
/// [0.05, 0.95), discards a 1000-step burn-in, and emits `length` samples.
/// A trajectory leaving (0, 1) restarts from fresh initial conditions with
/// the next sub-seed; after 100 failed attempts a GenerationError naming
/// the preset is thrown. Output is bit-reproducible per (preset, length,
/// noise, seed).
Dataset generate(const SystemPreset& preset, std::size_t length, const NoiseConfig& noise,
                 std::uint64_t seed);

/// Preset with alpha_i sampled uniformly from [3.70, 3.80) and
/// beta = 0.35 on the given (cause, effect) edges. Requires K >= 5; the
/// 3V/4V systems use the fixed published coefficients.
SystemPreset sample_coeffs(int K, const std::vector<std::pair<int, int>>& structure,
                           std::uint64_t seed);

/// Chain system X1 -> X2 -> ... -> XK used for runtime scaling. K = 3 and
/// K = 4 reuse the fixed-coefficient chain presets.
SystemPreset nv_chain(int K, std::uint64_t seed);

/// Pairwise Pearson correlations inside randomly placed windows, exposing
/// the sign-flipping transient correlations of coupled chaotic systems.
/// Correlations of a constant-in-window variable are reported as NaN.
struct MirageTable {
    std::vector<std::string> names;
    std::vector<std::size_t> starts;
    /// corr[w][p] for window w and pair p, pairs enumerated (i, j), i < j,
    /// row-major over the upper triangle.
    std::vector<std::vector<double>> corr;

    std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
    std::string to_csv() const;
};
MirageTable mirage_subsequences(const Dataset& data, std::size_t window, std::size_t n,
                                std::uint64_t seed);

} // namespace mxmap
