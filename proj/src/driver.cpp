#include "mxmap/driver.hpp"

#include <cmath>

#include <json.hpp>

#include "mxmap/errors.hpp"
#include "mxmap/parallel.hpp"

namespace mxmap {

void MXMapConfig::validate() const {
    embed.validate();
    if (!(ccm_threshold >= 0.0 && ccm_threshold <= 1.0))
        throw ParameterError("ccm_threshold must lie in [0, 1]");
    if (!(gamma_star > 0.0 && gamma_star < 1.0))
        throw ParameterError("gamma_star must lie in (0, 1)");
    if (tie_epsilon < 0.0) throw ParameterError("tie_epsilon must be >= 0");
    if (threads < 1) throw ParameterError("threads must be >= 1");
}

CausalGraph phase1(const Dataset& data, const MXMapConfig& cfg, std::vector<PairScore>* log) {
    cfg.validate();
    const std::size_t K = data.size();
    if (K < 2) throw ParameterError("discovery needs at least 2 variables");

    std::vector<PairScore> scores;
    for (std::size_t i = 0; i < K; ++i)
        for (std::size_t j = i + 1; j < K; ++j) scores.push_back({i, j, {}, true, ""});

    parallel_for(scores.size(), cfg.threads, [&](std::size_t p) {
        PairScore& s = scores[p];
        try {
            s.result = ccm_pair(data[s.i], data[s.j], cfg.embed, cfg.exclusion_radius);
        } catch (const Error& e) {
            s.ok = false;
            s.error = e.what();
        }
    });

    CausalGraph g(data.names());
    for (const auto& s : scores) {
        if (!s.ok) continue;
        const double f = std::abs(s.result.beta_forward);
        const double b = std::abs(s.result.beta_backward);
        // The stronger direction wins when it clears the threshold; a
        // near-tie with both directions above threshold reads as a
        // bidirectional link when tie_epsilon allows it.
        if (cfg.tie_epsilon > 0.0 && std::abs(f - b) <= cfg.tie_epsilon &&
            f >= cfg.ccm_threshold && b >= cfg.ccm_threshold) {
            g.add_edge(s.i, s.j);
            g.add_edge(s.j, s.i);
        } else if (f > b && f >= cfg.ccm_threshold) {
            g.add_edge(s.i, s.j);
        } else if (b > f && b >= cfg.ccm_threshold) {
            g.add_edge(s.j, s.i);
        }
    }
    if (log) *log = std::move(scores);
    return g;
}

CausalGraph phase2(const Dataset& data, const CausalGraph& g, const MXMapConfig& cfg,
                   std::vector<PruneRecord>* log) {
    cfg.validate();
    if (g.size() != data.size() || g.names() != data.names())
        throw DataError("graph nodes do not match the dataset variables");

    // All path queries run against the frozen input graph; removals are
    // applied afterwards so the outcome is independent of edge order.
    std::vector<PruneRecord> records;
    for (auto [i, j] : g.edges()) {
        if (!g.has_indirect_path(i, j)) continue;
        PruneRecord r;
        r.i = i;
        r.j = j;
        for (std::size_t c : g.intermediate_nodes(i, j)) r.conds.push_back(c);
        records.push_back(std::move(r));
    }

    PCMConfig pcm_cfg;
    pcm_cfg.embed = cfg.embed;
    pcm_cfg.gamma_star = cfg.gamma_star;
    pcm_cfg.exclusion_radius = cfg.exclusion_radius;

    parallel_for(records.size(), cfg.threads, [&](std::size_t idx) {
        PruneRecord& r = records[idx];
        std::vector<TimeSeries> conds;
        conds.reserve(r.conds.size());
        for (std::size_t c : r.conds) conds.push_back(data[c]);
        try {
            r.result = multi_pcm(data[r.i], data[r.j], conds, pcm_cfg);
            r.removed = classify_link(r.result, cfg.gamma_star) == LinkClass::Indirect;
        } catch (const Error& e) {
            // Failed tests keep the edge.
            r.ok = false;
            r.error = e.what();
            r.removed = false;
        }
    });

    CausalGraph pruned = g;
    for (const auto& r : records)
        if (r.removed) pruned.remove_edge(r.i, r.j);
    if (log) *log = std::move(records);
    return pruned;
}

DiscoveryReport discover(const Dataset& data, const MXMapConfig& cfg) {
    DiscoveryReport report;
    report.phase1_graph = phase1(data, cfg, &report.pair_scores);
    report.final_graph = phase2(data, report.phase1_graph, cfg, &report.prune_log);
    return report;
}

std::string DiscoveryReport::to_json() const {
    nlohmann::json j;
    j["phase1_graph"] = nlohmann::json::parse(phase1_graph.to_json());
    j["final_graph"] = nlohmann::json::parse(final_graph.to_json());
    auto pairs = nlohmann::json::array();
    for (const auto& s : pair_scores) {
        nlohmann::json e;
        e["i"] = s.i;
        e["j"] = s.j;
        e["ok"] = s.ok;
        if (s.ok) {
            e["beta_forward"] = s.result.beta_forward;
            e["beta_backward"] = s.result.beta_backward;
            e["library_length"] = s.result.library_length;
        } else {
            e["error"] = s.error;
        }
        pairs.push_back(e);
    }
    j["pair_scores"] = pairs;
    auto prunes = nlohmann::json::array();
    for (const auto& r : prune_log) {
        nlohmann::json e;
        e["i"] = r.i;
        e["j"] = r.j;
        e["conds"] = r.conds;
        e["ok"] = r.ok;
        if (r.ok) {
            e["rho_all"] = r.result.rho_all;
            e["rho_direct"] = r.result.rho_direct;
            e["gamma"] = r.result.gamma;
        } else {
            e["error"] = r.error;
        }
        e["removed"] = r.removed;
        prunes.push_back(e);
    }
    j["prune_log"] = prunes;
    return j.dump(2) + "\n";
}

} // namespace mxmap
