#include "mxmap/metrics.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "mxmap/errors.hpp"

namespace mxmap {

MetricsReport evaluate(const CausalGraph& truth, const CausalGraph& pred) {
    if (truth.names() != pred.names())
        throw DataError("graphs have different node sets");
    const std::size_t n = truth.size();
    std::size_t tp = 0, predicted = 0, actual = 0, disagree = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const bool t = truth.has_edge(i, j);
            const bool p = pred.has_edge(i, j);
            tp += t && p;
            predicted += p;
            actual += t;
            disagree += t != p;
        }
    }
    MetricsReport r;
    r.precision = predicted ? static_cast<double>(tp) / static_cast<double>(predicted) : 0.0;
    r.recall = actual ? static_cast<double>(tp) / static_cast<double>(actual) : 0.0;
    r.f1 = (r.precision + r.recall) > 0.0 ? 2.0 * r.precision * r.recall / (r.precision + r.recall)
                                          : 0.0;
    r.shd = disagree;
    return r;
}

std::string MetricsReport::to_json() const {
    nlohmann::json j;
    j["precision"] = precision;
    j["recall"] = recall;
    j["f1"] = f1;
    j["shd"] = shd;
    return j.dump(2) + "\n";
}

std::string MetricsReport::to_text() const {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "%-10s %-10s %-10s %-6s\n%-10.4f %-10.4f %-10.4f %-6zu\n", "precision",
                  "recall", "f1", "shd", precision, recall, f1, shd);
    return buf;
}

} // namespace mxmap
