#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mxmap/pcm.hpp"
#include "mxmap/timeseries.hpp"

namespace mxmap {

/// multiPCM score surfaces over a (tau, dim) grid. Cells that failed are
/// NaN in the score surfaces and -1 in the label surface.
struct GridResult {
    std::vector<int> tau_range;
    std::vector<int> dim_range;
    // surfaces indexed [tau][dim]
    std::vector<std::vector<double>> rho_all_surface;
    std::vector<std::vector<double>> rho_direct_surface;
    std::vector<std::vector<double>> ratio_surface;
    std::vector<std::vector<int>> label_surface; // 1 = Direct, 0 = Indirect, -1 = failed

    /// One CSV matrix (tau rows x dim columns) per surface name:
    /// rho_all, rho_direct, ratio, label.
    std::string surface_csv(const std::string& surface) const;
};

/// Runs multi_pcm at every (tau, dim) grid point over the full series and
/// classifies each cell with the ratio threshold. Per-cell failures are
/// recorded as missing cells and the run continues.
GridResult pcm_grid(const Dataset& data, std::size_t cause, std::size_t effect,
                    const std::vector<std::size_t>& conds, const std::vector<int>& tau_range,
                    const std::vector<int>& dim_range, double threshold, int knn = 0,
                    int threads = 1);

enum class Scenario { Direct, Indirect, Both };

/// One labeled test case of the threshold sweep: is the colored link
/// (cause -> effect) expected Direct (direct/both scenarios) or Indirect?
struct SweepCase {
    std::string name;
    Scenario scenario = Scenario::Direct;
    Dataset data;
    std::size_t cause = 0;
    std::size_t effect = 0;
    std::vector<std::size_t> conds;
};

struct SweepResult {
    std::vector<double> thresholds;
    /// gamma of each case, aligned with `cases` order.
    std::vector<double> gammas;
    std::vector<std::string> case_names;
    std::vector<Scenario> case_scenarios;
    /// mistakes[s][t]: mislabeled cases of scenario s at thresholds[t].
    std::vector<std::vector<int>> mistakes;

    /// Thresholds with at most `tolerance` mistakes in every scenario.
    std::vector<double> admissible(int tolerance) const;
    std::string to_csv() const;
};

/// Evaluates every case once with the given embedding (the reference
/// protocol pins tau = 1, dim = 7) and counts per-scenario label mistakes
/// across the threshold sequence.
SweepResult threshold_sweep(const std::vector<SweepCase>& cases,
                            const std::vector<double>& thresholds, const EmbedParams& embed,
                            int threads = 1);

/// The simulated-systems sweep suite: direct, indirect, and both scenarios
/// drawn from the 3V-7V presets, regenerated noise-free at the given length.
std::vector<SweepCase> default_sweep_suite(std::size_t length, std::uint64_t seed);

} // namespace mxmap
