#include "mxmap/gridsearch.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "mxmap/errors.hpp"
#include "mxmap/parallel.hpp"
#include "mxmap/simgen.hpp"

namespace mxmap {

GridResult pcm_grid(const Dataset& data, std::size_t cause, std::size_t effect,
                    const std::vector<std::size_t>& conds, const std::vector<int>& tau_range,
                    const std::vector<int>& dim_range, double threshold, int knn, int threads) {
    if (tau_range.empty() || dim_range.empty())
        throw ParameterError("grid ranges must be nonempty");
    if (cause >= data.size() || effect >= data.size())
        throw ParameterError("cause/effect index out of range");
    for (auto c : conds)
        if (c >= data.size()) throw ParameterError("condition index out of range");

    const double nan = std::numeric_limits<double>::quiet_NaN();
    GridResult grid;
    grid.tau_range = tau_range;
    grid.dim_range = dim_range;
    grid.rho_all_surface.assign(tau_range.size(), std::vector<double>(dim_range.size(), nan));
    grid.rho_direct_surface.assign(tau_range.size(), std::vector<double>(dim_range.size(), nan));
    grid.ratio_surface.assign(tau_range.size(), std::vector<double>(dim_range.size(), nan));
    grid.label_surface.assign(tau_range.size(), std::vector<int>(dim_range.size(), -1));

    std::vector<TimeSeries> cond_series;
    for (auto c : conds) cond_series.push_back(data[c]);

    const std::size_t cells = tau_range.size() * dim_range.size();
    parallel_for(cells, threads, [&](std::size_t cell) {
        const std::size_t ti = cell / dim_range.size();
        const std::size_t di = cell % dim_range.size();
        PCMConfig cfg;
        cfg.embed.tau = tau_range[ti];
        cfg.embed.dim = dim_range[di];
        cfg.embed.k = knn;
        try {
            PCMResult r = multi_pcm(data[cause], data[effect], cond_series, cfg);
            grid.rho_all_surface[ti][di] = r.rho_all;
            grid.rho_direct_surface[ti][di] = r.rho_direct;
            grid.ratio_surface[ti][di] = r.gamma;
            grid.label_surface[ti][di] = classify_link(r, threshold) == LinkClass::Direct ? 1 : 0;
        } catch (const Error&) {
            // missing cell, surfaces stay NaN / -1
        }
    });
    return grid;
}

std::string GridResult::surface_csv(const std::string& surface) const {
    std::ostringstream os;
    os << "tau\\dim";
    for (int d : dim_range) os << ',' << d;
    os << '\n';
    for (std::size_t ti = 0; ti < tau_range.size(); ++ti) {
        os << tau_range[ti];
        for (std::size_t di = 0; di < dim_range.size(); ++di) {
            os << ',';
            if (surface == "label") {
                int l = label_surface[ti][di];
                os << (l < 0 ? "nan" : l == 1 ? "Direct" : "Indirect");
                continue;
            }
            double v;
            if (surface == "rho_all")
                v = rho_all_surface[ti][di];
            else if (surface == "rho_direct")
                v = rho_direct_surface[ti][di];
            else if (surface == "ratio")
                v = ratio_surface[ti][di];
            else
                throw ParameterError("unknown surface '" + surface + "'");
            if (std::isnan(v)) {
                os << "nan";
            } else {
                char buf[32];
                std::snprintf(buf, sizeof(buf), "%.6f", v);
                os << buf;
            }
        }
        os << '\n';
    }
    return os.str();
}

SweepResult threshold_sweep(const std::vector<SweepCase>& cases,
                            const std::vector<double>& thresholds, const EmbedParams& embed,
                            int threads) {
    if (thresholds.empty()) throw ParameterError("threshold list must be nonempty");
    SweepResult out;
    out.thresholds = thresholds;
    out.gammas.assign(cases.size(), std::numeric_limits<double>::quiet_NaN());
    out.mistakes.assign(3, std::vector<int>(thresholds.size(), 0));
    for (const auto& c : cases) {
        out.case_names.push_back(c.name);
        out.case_scenarios.push_back(c.scenario);
    }

    parallel_for(cases.size(), threads, [&](std::size_t i) {
        const SweepCase& c = cases[i];
        std::vector<TimeSeries> conds;
        for (auto idx : c.conds) conds.push_back(c.data[idx]);
        PCMConfig cfg;
        cfg.embed = embed;
        PCMResult r = multi_pcm(c.data[c.cause], c.data[c.effect], conds, cfg);
        out.gammas[i] = r.gamma;
    });

    for (std::size_t i = 0; i < cases.size(); ++i) {
        const bool expect_direct = cases[i].scenario != Scenario::Indirect;
        for (std::size_t t = 0; t < thresholds.size(); ++t) {
            const bool direct = out.gammas[i] >= thresholds[t];
            if (direct != expect_direct)
                ++out.mistakes[static_cast<int>(cases[i].scenario)][t];
        }
    }
    return out;
}

std::vector<double> SweepResult::admissible(int tolerance) const {
    std::vector<double> out;
    for (std::size_t t = 0; t < thresholds.size(); ++t) {
        bool ok = true;
        for (const auto& scenario : mistakes) ok = ok && scenario[t] <= tolerance;
        if (ok) out.push_back(thresholds[t]);
    }
    return out;
}

std::string SweepResult::to_csv() const {
    std::ostringstream os;
    os << "threshold,direct_mistakes,indirect_mistakes,both_mistakes\n";
    for (std::size_t t = 0; t < thresholds.size(); ++t) {
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%.2f", thresholds[t]);
        os << buf << ',' << mistakes[0][t] << ',' << mistakes[1][t] << ',' << mistakes[2][t]
           << '\n';
    }
    return os.str();
}

std::vector<SweepCase> default_sweep_suite(std::size_t length, std::uint64_t seed) {
    struct Entry {
        const char* preset;
        Scenario scenario;
        std::size_t cause, effect;
        std::vector<std::size_t> conds;
    };
    // Direct / indirect / both scenarios drawn from the 3V-7V systems; the
    // condition set is always every remaining variable.
    static const std::vector<Entry> entries = {
        // direct: a true edge with no mediating path
        {"3V_immorality", Scenario::Direct, 0, 2, {1}},
        {"3V_chain", Scenario::Direct, 0, 1, {2}},
        {"4V_direct", Scenario::Direct, 0, 3, {1, 2}},
        {"4V_chain", Scenario::Direct, 1, 2, {0, 3}},
        {"5V_1_noCycle", Scenario::Direct, 2, 3, {0, 1, 4}},
        {"6V_noCycle", Scenario::Direct, 0, 1, {2, 3, 4, 5}},
        {"7V_cycle", Scenario::Direct, 3, 4, {0, 1, 2, 5, 6}},
        // indirect: connected only through mediators
        {"3V_chain", Scenario::Indirect, 0, 2, {1}},
        {"4V_indirect", Scenario::Indirect, 0, 3, {1, 2}},
        {"4V_chain", Scenario::Indirect, 0, 2, {1, 3}},
        {"5V_1_noCycle", Scenario::Indirect, 0, 3, {1, 2, 4}},
        {"6V_noCycle", Scenario::Indirect, 0, 2, {1, 3, 4, 5}},
        {"7V_cycle", Scenario::Indirect, 2, 4, {0, 1, 3, 5, 6}},
        // both: a direct edge plus a mediated path
        {"3V_noCycle", Scenario::Both, 0, 2, {1}},
        {"4V_both", Scenario::Both, 0, 3, {1, 2}},
        {"5V_2_cycle", Scenario::Both, 0, 4, {1, 2, 3}},
        {"6V_noCycle", Scenario::Both, 1, 4, {0, 2, 3, 5}},
        {"7V_cycle", Scenario::Both, 0, 5, {1, 2, 3, 4, 6}},
    };
    std::vector<SweepCase> cases;
    for (const auto& e : entries) {
        SweepCase c;
        c.name = std::string(e.preset) + ":" + std::to_string(e.cause) + "->" +
                 std::to_string(e.effect);
        c.scenario = e.scenario;
        c.data = generate(preset(e.preset), length, {}, seed);
        c.cause = e.cause;
        c.effect = e.effect;
        c.conds = e.conds;
        cases.push_back(std::move(c));
    }
    return cases;
}

} // namespace mxmap
