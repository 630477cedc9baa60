#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mxmap/driver.hpp"
#include "mxmap/errors.hpp"
#include "mxmap/gridsearch.hpp"
#include "mxmap/metrics.hpp"
#include "mxmap/simgen.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitDegenerate = 4;

struct DiscoverOptions {
    int tau = 1;
    int dim = 4;
    int knn = 10;
    double ccm_thres = 0.5;
    double gamma_star = 0.45;
    double tie_eps = 0.0;
    int threads = 1;
    std::size_t exclusion = 0;
};

// Parameter sets of the reference experiments.
DiscoverOptions profile_options(const std::string& name) {
    DiscoverOptions o;
    if (name == "simulated") {
        o.tau = 1;
        o.dim = 4;
        o.knn = 10;
        o.gamma_star = 0.45;
        o.tie_eps = 0.02;
    } else if (name == "table2") {
        o.tau = 2;
        o.dim = 6;
        o.knn = 10;
        o.gamma_star = 0.6;
        o.tie_eps = 0.0;
    } else if (name == "appendixB") {
        o.tau = 1;
        o.dim = 7;
        o.knn = 8;
        o.gamma_star = 0.45;
        o.tie_eps = 0.0;
    } else {
        throw mxmap::ParameterError("unknown profile '" + name +
                                    "' (simulated, table2, appendixB)");
    }
    return o;
}

void write_text(const std::string& path, const std::string& body) {
    std::ofstream f(path, std::ios::trunc);
    if (!f) throw mxmap::DataError("cannot open '" + path + "' for writing");
    f << body;
    if (!f) throw mxmap::DataError("failed writing '" + path + "'");
}

mxmap::MXMapConfig make_config(const DiscoverOptions& o) {
    mxmap::MXMapConfig cfg;
    cfg.embed.tau = o.tau;
    cfg.embed.dim = o.dim;
    cfg.embed.k = o.knn;
    cfg.ccm_threshold = o.ccm_thres;
    cfg.gamma_star = o.gamma_star;
    cfg.tie_epsilon = o.tie_eps;
    cfg.exclusion_radius = o.exclusion;
    cfg.threads = o.threads;
    cfg.validate();
    return cfg;
}

std::vector<std::size_t> parse_name_list(const mxmap::Dataset& data, const std::string& csv) {
    std::vector<std::size_t> out;
    std::stringstream ss(csv);
    std::string field;
    while (std::getline(ss, field, ',')) out.push_back(data.index_of(field));
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"MXMap: multivariate cross-mapping causal discovery"};
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "Generate a benchmark system as CSV");
    std::string gen_preset = "4V_chain", gen_out = "data.csv";
    std::size_t gen_length = 3500;
    double gen_noise = 0.0;
    std::uint64_t gen_seed = 1;
    gen->add_option("--preset", gen_preset, "System preset name");
    gen->add_option("--length", gen_length, "Samples to emit")->check(CLI::PositiveNumber);
    gen->add_option("--noise-std", gen_noise, "Additive Gaussian noise std")
        ->check(CLI::NonNegativeNumber);
    gen->add_option("--seed", gen_seed, "RNG seed");
    gen->add_option("--out", gen_out, "Output CSV path");

    // ---- discover ----
    auto* disc = app.add_subcommand("discover", "Run two-phase causal discovery on a CSV");
    std::string disc_in, disc_out = "graph.json", disc_format = "json", disc_report, disc_profile;
    DiscoverOptions opts;
    bool disc_zscore = false;
    disc->add_option("--in", disc_in, "Input CSV")->required();
    disc->add_option("--out", disc_out, "Output graph path");
    disc->add_option("--format", disc_format, "Graph format")
        ->check(CLI::IsMember({"dot", "json", "csv"}));
    disc->add_option("--report", disc_report, "Write the full discovery report (json)");
    disc->add_option("--profile", disc_profile, "Parameter profile")
        ->check(CLI::IsMember({"simulated", "table2", "appendixB"}));
    auto* o_tau = disc->add_option("--tau", opts.tau, "Embedding lag")->check(CLI::PositiveNumber);
    auto* o_dim = disc->add_option("--dim", opts.dim, "Embedding dimension")
                      ->check(CLI::PositiveNumber);
    auto* o_knn = disc->add_option("--knn", opts.knn, "Neighbor count")->check(CLI::PositiveNumber);
    auto* o_ccm = disc->add_option("--ccm-thres", opts.ccm_thres, "Phase-1 score threshold");
    auto* o_gam = disc->add_option("--gamma-star", opts.gamma_star, "Phase-2 ratio threshold");
    auto* o_tie = disc->add_option("--tie-eps", opts.tie_eps, "Bidirectional tie width");
    auto* o_exc = disc->add_option("--exclusion-radius", opts.exclusion,
                                   "Temporal neighbor exclusion radius");
    disc->add_option("--threads", opts.threads, "Worker threads")->check(CLI::PositiveNumber);
    disc->add_flag("--zscore", disc_zscore, "Standardize variables before discovery");

    // ---- eval ----
    auto* eval = app.add_subcommand("eval", "Compare predicted graph against ground truth");
    std::string eval_truth, eval_pred;
    bool eval_json = false;
    eval->add_option("--truth", eval_truth, "Ground-truth graph (json or matrix csv)")->required();
    eval->add_option("--pred", eval_pred, "Predicted graph")->required();
    eval->add_flag("--json", eval_json, "Emit json instead of the text table");

    // ---- grid ----
    auto* grid = app.add_subcommand("grid", "multiPCM (tau, dim) grid search");
    std::string grid_in, grid_cause, grid_effect, grid_conds, grid_dir = ".",
                grid_case = "case";
    int grid_tau_max = 8, grid_dim_max = 8, grid_knn = 0, grid_threads = 1;
    double grid_thres = 0.45;
    grid->add_option("--in", grid_in, "Input CSV")->required();
    grid->add_option("--cause", grid_cause, "Cause variable name")->required();
    grid->add_option("--effect", grid_effect, "Effect variable name")->required();
    grid->add_option("--conds", grid_conds, "Comma-separated condition variables")->required();
    grid->add_option("--tau-max", grid_tau_max, "Lags 1..tau-max")->check(CLI::PositiveNumber);
    grid->add_option("--dim-max", grid_dim_max, "Dimensions 1..dim-max")
        ->check(CLI::PositiveNumber);
    grid->add_option("--threshold", grid_thres, "Ratio threshold");
    grid->add_option("--knn", grid_knn, "Neighbor count (default dim+1)");
    grid->add_option("--threads", grid_threads, "Worker threads")->check(CLI::PositiveNumber);
    grid->add_option("--out-dir", grid_dir, "Directory for <case>_<surface>.csv files");
    grid->add_option("--case-name", grid_case, "Case name prefix");

    // ---- sweep ----
    auto* sweep = app.add_subcommand("sweep", "Ratio-threshold sweep over the simulated suite");
    std::size_t sweep_length = 3500;
    std::uint64_t sweep_seed = 1;
    int sweep_threads = 1, sweep_tol = 2;
    std::string sweep_out;
    sweep->add_option("--length", sweep_length, "Series length")->check(CLI::PositiveNumber);
    sweep->add_option("--seed", sweep_seed, "Generation seed");
    sweep->add_option("--tolerance", sweep_tol, "Mistake tolerance per scenario");
    sweep->add_option("--threads", sweep_threads, "Worker threads")->check(CLI::PositiveNumber);
    sweep->add_option("--out", sweep_out, "Write per-threshold mistake table (csv)");

    // ---- mirage ----
    auto* mirage = app.add_subcommand("mirage", "Windowed correlations of a generated system");
    std::string mir_preset = "4V_chain", mir_out;
    std::size_t mir_window = 25, mir_n = 20, mir_length = 3500;
    double mir_noise = 0.0;
    std::uint64_t mir_seed = 1;
    mirage->add_option("--preset", mir_preset, "System preset name");
    mirage->add_option("--length", mir_length, "Samples to generate")->check(CLI::PositiveNumber);
    mirage->add_option("--window", mir_window, "Window length")->check(CLI::PositiveNumber);
    mirage->add_option("--n", mir_n, "Number of windows")->check(CLI::PositiveNumber);
    mirage->add_option("--noise-std", mir_noise, "Additive Gaussian noise std");
    mirage->add_option("--seed", mir_seed, "RNG seed");
    mirage->add_option("--out", mir_out, "Output CSV path (default stdout)");

    // ---- bench ----
    auto* bench = app.add_subcommand("bench", "Runtime scaling over chain systems");
    int bench_max_k = 8, bench_threads = 1, bench_reps = 1;
    std::size_t bench_length = 3500;
    std::uint64_t bench_seed = 1;
    std::string bench_profile = "simulated";
    bench->add_option("--max-k", bench_max_k, "Largest chain size (K = 3..max-k)")
        ->check(CLI::Range(3, 64));
    bench->add_option("--length", bench_length, "Series length")->check(CLI::PositiveNumber);
    bench->add_option("--seed", bench_seed, "Generation seed");
    bench->add_option("--reps", bench_reps, "Repetitions per K (best time kept)")
        ->check(CLI::PositiveNumber);
    bench->add_option("--threads", bench_threads, "Worker threads")->check(CLI::PositiveNumber);
    bench->add_option("--profile", bench_profile, "Parameter profile")
        ->check(CLI::IsMember({"simulated", "table2", "appendixB"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (gen->parsed()) {
        mxmap::SystemPreset p = mxmap::preset(gen_preset);
        mxmap::NoiseConfig noise;
        noise.eps_std = gen_noise;
        mxmap::Dataset data = mxmap::generate(p, gen_length, noise, gen_seed);
        mxmap::write_csv(data, gen_out);
        std::cout << "wrote " << gen_out << " (" << data.size() << " x " << data.length()
                  << ")\n";
        return 0;
    }

    if (disc->parsed()) {
        if (!disc_profile.empty()) {
            DiscoverOptions base = profile_options(disc_profile);
            // explicit flags override the profile
            if (!*o_tau) opts.tau = base.tau;
            if (!*o_dim) opts.dim = base.dim;
            if (!*o_knn) opts.knn = base.knn;
            if (!*o_ccm) opts.ccm_thres = base.ccm_thres;
            if (!*o_gam) opts.gamma_star = base.gamma_star;
            if (!*o_tie) opts.tie_eps = base.tie_eps;
            if (!*o_exc) opts.exclusion = base.exclusion;
        }
        mxmap::Dataset data = mxmap::read_csv(disc_in);
        if (disc_zscore) data.zscore();
        mxmap::MXMapConfig cfg = make_config(opts);
        mxmap::DiscoveryReport report = mxmap::discover(data, cfg);
        report.final_graph.save(disc_out, disc_format);
        if (!disc_report.empty()) write_text(disc_report, report.to_json());
        std::cout << report.final_graph.to_dot();
        return 0;
    }

    if (eval->parsed()) {
        mxmap::CausalGraph truth = mxmap::CausalGraph::load(eval_truth);
        mxmap::CausalGraph pred = mxmap::CausalGraph::load(eval_pred);
        mxmap::MetricsReport r = mxmap::evaluate(truth, pred);
        std::cout << (eval_json ? r.to_json() : r.to_text());
        return 0;
    }

    if (grid->parsed()) {
        mxmap::Dataset data = mxmap::read_csv(grid_in);
        std::vector<int> taus, dims;
        for (int t = 1; t <= grid_tau_max; ++t) taus.push_back(t);
        for (int d = 1; d <= grid_dim_max; ++d) dims.push_back(d);
        mxmap::GridResult r =
            mxmap::pcm_grid(data, data.index_of(grid_cause), data.index_of(grid_effect),
                            parse_name_list(data, grid_conds), taus, dims, grid_thres, grid_knn,
                            grid_threads);
        std::filesystem::create_directories(grid_dir);
        for (const char* s : {"rho_all", "rho_direct", "ratio", "label"}) {
            std::string path = grid_dir + "/" + grid_case + "_" + s + ".csv";
            write_text(path, r.surface_csv(s));
            std::cout << "wrote " << path << "\n";
        }
        return 0;
    }

    if (sweep->parsed()) {
        std::vector<double> thresholds;
        for (int i = 1; i <= 19; ++i) thresholds.push_back(0.05 * i);
        mxmap::EmbedParams embed;
        embed.tau = 1;
        embed.dim = 7;
        auto cases = mxmap::default_sweep_suite(sweep_length, sweep_seed);
        mxmap::SweepResult r = mxmap::threshold_sweep(cases, thresholds, embed, sweep_threads);
        std::cout << r.to_csv();
        auto adm = r.admissible(sweep_tol);
        std::cout << "admissible:";
        for (double t : adm) std::printf(" %.2f", t);
        std::cout << "\n";
        if (!sweep_out.empty()) write_text(sweep_out, r.to_csv());
        return 0;
    }

    if (mirage->parsed()) {
        mxmap::SystemPreset p = mxmap::preset(mir_preset);
        mxmap::NoiseConfig noise;
        noise.eps_std = mir_noise;
        mxmap::Dataset data = mxmap::generate(p, mir_length, noise, mir_seed);
        mxmap::MirageTable t = mxmap::mirage_subsequences(data, mir_window, mir_n, mir_seed);
        if (mir_out.empty())
            std::cout << t.to_csv();
        else
            write_text(mir_out, t.to_csv());
        return 0;
    }

    if (bench->parsed()) {
        DiscoverOptions o = profile_options(bench_profile);
        o.threads = bench_threads;
        mxmap::MXMapConfig cfg = make_config(o);
        std::vector<double> logk, logt;
        std::printf("%-4s %-10s\n", "K", "seconds");
        for (int K = 3; K <= bench_max_k; ++K) {
            mxmap::SystemPreset p = mxmap::nv_chain(K, bench_seed);
            mxmap::Dataset data = mxmap::generate(p, bench_length, {}, bench_seed);
            double best = 0.0;
            for (int rep = 0; rep < bench_reps; ++rep) {
                auto t0 = std::chrono::steady_clock::now();
                mxmap::DiscoveryReport report = mxmap::discover(data, cfg);
                auto t1 = std::chrono::steady_clock::now();
                double sec = std::chrono::duration<double>(t1 - t0).count();
                (void)report;
                if (rep == 0 || sec < best) best = sec;
            }
            std::printf("%-4d %-10.3f\n", K, best);
            logk.push_back(std::log(static_cast<double>(K)));
            logt.push_back(std::log(best));
        }
        if (logk.size() < 2) {
            std::cout << "slope: undefined (need at least two K values)\n";
            return 0;
        }
        double mk = 0, mt = 0;
        for (std::size_t i = 0; i < logk.size(); ++i) {
            mk += logk[i];
            mt += logt[i];
        }
        mk /= static_cast<double>(logk.size());
        mt /= static_cast<double>(logt.size());
        double num = 0, den = 0;
        for (std::size_t i = 0; i < logk.size(); ++i) {
            num += (logk[i] - mk) * (logt[i] - mt);
            den += (logk[i] - mk) * (logk[i] - mk);
        }
        std::printf("slope: %.3f\n", num / den);
        return 0;
    }

    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const mxmap::DegenerateInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const mxmap::GenerationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const mxmap::ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const mxmap::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
