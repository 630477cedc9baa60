#include "mxmap/simgen.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "mxmap/errors.hpp"
#include "mxmap/pcm.hpp"

namespace mxmap {

namespace {

// Hand-rolled draws so trajectories are reproducible across standard
// library implementations.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double gaussian(std::mt19937_64& rng) {
    const double u1 = (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53; // (0, 1]
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

std::mt19937_64 seeded_rng(std::uint64_t seed, std::uint32_t attempt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      attempt};
    return std::mt19937_64(seq);
}

struct PresetSpec {
    const char* name;
    std::vector<std::string> vars;
    std::vector<double> alpha;
    std::vector<std::pair<int, int>> edges;
};

// 3V/4V coefficients are the published ones; the 5V-7V systems use fixed
// coefficients from the sampling range [3.70, 3.80) and structures
// transcribed from the benchmark ground-truth graphs.
const std::vector<PresetSpec>& preset_table() {
    static const std::vector<double> a3{3.70, 3.78, 3.72};
    static const std::vector<double> a4{3.70, 3.78, 3.72, 3.70};
    static const std::vector<double> a5{3.70, 3.78, 3.72, 3.76, 3.74};
    static const std::vector<double> a6{3.70, 3.78, 3.72, 3.76, 3.74, 3.79};
    static const std::vector<double> a7{3.70, 3.78, 3.72, 3.76, 3.74, 3.79, 3.71};
    static const std::vector<PresetSpec> table = {
        {"3V_chain", {"x", "y", "z"}, a3, {{0, 1}, {1, 2}}},
        {"3V_immorality", {"x", "y", "z"}, a3, {{0, 2}, {1, 2}}},
        {"3V_noCycle", {"x", "y", "z"}, a3, {{0, 1}, {1, 2}, {0, 2}}},
        {"3V_cycle", {"x", "y", "z"}, a3, {{0, 1}, {1, 0}, {1, 2}}},
        {"4V_chain", {"w", "x", "y", "z"}, a4, {{0, 1}, {1, 2}, {2, 3}}},
        {"4V_noCycle", {"w", "x", "y", "z"}, a4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}},
        {"4V_cycle", {"w", "x", "y", "z"}, a4, {{0, 1}, {1, 2}, {2, 1}, {2, 3}}},
        // multiPCM validation cases: the (w, z) link is direct only,
        // mediated only, or both.
        {"4V_direct", {"w", "x", "y", "z"}, a4, {{0, 3}}},
        {"4V_indirect", {"w", "x", "y", "z"}, a4, {{0, 1}, {1, 2}, {2, 3}}},
        {"4V_both", {"w", "x", "y", "z"}, a4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}},
        {"5V_1_noCycle",
         {"x1", "x2", "x3", "x4", "x5"},
         a5,
         {{0, 2}, {1, 2}, {2, 3}, {3, 4}}},
        {"5V_2_cycle",
         {"x1", "x2", "x3", "x4", "x5"},
         a5,
         {{0, 1}, {1, 2}, {2, 1}, {2, 3}, {3, 4}, {0, 4}}},
        {"6V_noCycle",
         {"x1", "x2", "x3", "x4", "x5", "x6"},
         a6,
         {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 4}}},
        {"7V_cycle",
         {"x1", "x2", "x3", "x4", "x5", "x6", "x7"},
         a7,
         {{0, 1}, {1, 2}, {2, 1}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {0, 5}}},
    };
    return table;
}

SystemPreset from_spec(const PresetSpec& spec) {
    SystemPreset p;
    p.name = spec.name;
    p.variable_names = spec.vars;
    p.alpha = spec.alpha;
    const std::size_t K = spec.alpha.size();
    p.beta.assign(K, std::vector<double>(K, 0.0));
    for (auto [i, j] : spec.edges) p.beta[i][j] = 0.35;
    return p;
}

} // namespace

CausalGraph SystemPreset::truth() const {
    CausalGraph g(variable_names);
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j)
            if (beta[i][j] != 0.0) g.add_edge(i, j);
    return g;
}

SystemPreset preset(const std::string& name) {
    for (const auto& spec : preset_table())
        if (name == spec.name) return from_spec(spec);
    std::string known;
    for (const auto& spec : preset_table()) {
        if (!known.empty()) known += ", ";
        known += spec.name;
    }
    throw ParameterError("unknown preset '" + name + "'; available: " + known);
}

std::vector<std::string> preset_names() {
    std::vector<std::string> out;
    for (const auto& spec : preset_table()) out.emplace_back(spec.name);
    return out;
}

std::vector<double> step(const SystemPreset& preset, const std::vector<double>& state) {
    const std::size_t K = preset.size();
    if (state.size() != K) throw ParameterError("state size does not match the preset");
    std::vector<double> next(K);
    for (std::size_t i = 0; i < K; ++i) {
        double drive = preset.alpha[i] - preset.alpha[i] * state[i];
        for (std::size_t j = 0; j < K; ++j) {
            if (j == i) continue;
            drive -= preset.beta[j][i] * state[j];
        }
        next[i] = state[i] * drive;
    }
    return next;
}

Dataset generate(const SystemPreset& preset, std::size_t length, const NoiseConfig& noise,
                 std::uint64_t seed) {
    if (length < 1) throw ParameterError("length must be >= 1");
    if (noise.eps_std < 0) throw ParameterError("noise std must be >= 0");
    const std::size_t K = preset.size();
    constexpr std::size_t kBurnIn = 1000;
    constexpr std::uint32_t kMaxAttempts = 100;

    for (std::uint32_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
        auto rng = seeded_rng(seed, attempt);
        std::vector<double> state(K);
        for (auto& s : state) s = 0.05 + 0.9 * uniform01(rng);

        std::vector<std::vector<double>> out(K, std::vector<double>(length));
        bool ok = true;
        for (std::size_t t = 0; t < kBurnIn + length && ok; ++t) {
            std::vector<double> next = step(preset, state);
            for (std::size_t i = 0; i < K; ++i) {
                next[i] *= noise.eta;
                if (noise.eps_std > 0.0) next[i] += noise.eps_std * gaussian(rng);
                if (!(next[i] > 0.0 && next[i] < 1.0)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
            if (t >= kBurnIn)
                for (std::size_t i = 0; i < K; ++i) out[i][t - kBurnIn] = next[i];
            state = std::move(next);
        }
        if (ok) {
            std::vector<TimeSeries> vars;
            vars.reserve(K);
            for (std::size_t i = 0; i < K; ++i)
                vars.push_back({preset.variable_names[i], std::move(out[i])});
            return Dataset(std::move(vars));
        }
    }
    throw GenerationError("preset '" + preset.name + "' left (0, 1) on all " +
                          std::to_string(kMaxAttempts) + " stabilization attempts");
}

SystemPreset sample_coeffs(int K, const std::vector<std::pair<int, int>>& structure,
                           std::uint64_t seed) {
    if (K < 5)
        throw ParameterError("sample_coeffs requires K >= 5; smaller systems use the "
                             "published coefficients");
    SystemPreset p;
    p.name = "sampled_" + std::to_string(K) + "V";
    auto rng = seeded_rng(seed, 0);
    for (int i = 0; i < K; ++i) {
        p.variable_names.push_back("x" + std::to_string(i + 1));
        p.alpha.push_back(3.70 + 0.10 * uniform01(rng));
    }
    p.beta.assign(K, std::vector<double>(K, 0.0));
    for (auto [i, j] : structure) {
        if (i < 0 || j < 0 || i >= K || j >= K || i == j)
            throw ParameterError("invalid edge in structure");
        p.beta[i][j] = 0.35;
    }
    return p;
}

SystemPreset nv_chain(int K, std::uint64_t seed) {
    if (K < 3) throw ParameterError("nv_chain requires K >= 3");
    if (K == 3) return preset("3V_chain");
    if (K == 4) return preset("4V_chain");
    std::vector<std::pair<int, int>> chain;
    for (int i = 0; i + 1 < K; ++i) chain.emplace_back(i, i + 1);
    SystemPreset p = sample_coeffs(K, chain, seed);
    p.name = std::to_string(K) + "V_chain";
    return p;
}

std::vector<std::pair<std::size_t, std::size_t>> MirageTable::pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j) out.emplace_back(i, j);
    return out;
}

std::string MirageTable::to_csv() const {
    std::ostringstream os;
    os << "start";
    for (auto [i, j] : pairs()) os << ',' << names[i] << '-' << names[j];
    os << '\n';
    for (std::size_t w = 0; w < starts.size(); ++w) {
        os << starts[w];
        for (double c : corr[w]) {
            char buf[32];
            if (std::isnan(c))
                std::snprintf(buf, sizeof(buf), "nan");
            else
                std::snprintf(buf, sizeof(buf), "%.6f", c);
            os << ',' << buf;
        }
        os << '\n';
    }
    return os.str();
}

MirageTable mirage_subsequences(const Dataset& data, std::size_t window, std::size_t n,
                                std::uint64_t seed) {
    if (window < 2 || window > data.length())
        throw ParameterError("window must lie in [2, series length]");
    if (n < 1) throw ParameterError("need at least one window");
    MirageTable table;
    table.names = data.names();
    auto rng = seeded_rng(seed, 0);
    const std::size_t span = data.length() - window + 1;
    for (std::size_t w = 0; w < n; ++w)
        table.starts.push_back(static_cast<std::size_t>(uniform01(rng) * static_cast<double>(span)));
    for (std::size_t start : table.starts) {
        std::vector<double> row;
        for (auto [i, j] : table.pairs()) {
            std::span<const double> a{data[i].values.data() + start, window};
            std::span<const double> b{data[j].values.data() + start, window};
            try {
                row.push_back(correlation(a, b));
            } catch (const DegenerateInputError&) {
                row.push_back(std::numeric_limits<double>::quiet_NaN());
            }
        }
        table.corr.push_back(std::move(row));
    }
    return table;
}

} // namespace mxmap
