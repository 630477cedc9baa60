#include "mxmap/graph.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mxmap/errors.hpp"

namespace mxmap {

CausalGraph::CausalGraph(std::vector<std::string> names) : names_(std::move(names)) {
    adj_.assign(names_.size(), std::vector<std::uint8_t>(names_.size(), 0));
}

void CausalGraph::check_nodes(std::size_t i, std::size_t j) const {
    if (i >= size() || j >= size())
        throw ParameterError("node index out of range for a graph of " + std::to_string(size()) +
                             " nodes");
}

bool CausalGraph::has_edge(std::size_t i, std::size_t j) const {
    check_nodes(i, j);
    return adj_[i][j] != 0;
}

void CausalGraph::add_edge(std::size_t i, std::size_t j) {
    check_nodes(i, j);
    if (i == j) throw ParameterError("self-loops are not allowed");
    adj_[i][j] = 1;
}

void CausalGraph::remove_edge(std::size_t i, std::size_t j) {
    check_nodes(i, j);
    adj_[i][j] = 0;
}

std::size_t CausalGraph::edge_count() const {
    std::size_t n = 0;
    for (const auto& row : adj_)
        for (auto v : row) n += v;
    return n;
}

std::vector<std::pair<std::size_t, std::size_t>> CausalGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j)
            if (adj_[i][j]) out.emplace_back(i, j);
    return out;
}

std::vector<std::size_t> CausalGraph::children(std::size_t i) const {
    check_nodes(i, i == 0 ? 0 : i);
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < size(); ++j)
        if (adj_[i][j]) out.push_back(j);
    return out;
}

namespace {

// DFS over simple paths from u to target, collecting interior nodes of every
// complete path with >= 2 edges.
void enumerate_paths(const std::vector<std::vector<std::uint8_t>>& adj, std::size_t u,
                     std::size_t target, std::vector<std::size_t>& path,
                     std::vector<bool>& on_path, std::set<std::size_t>& interior,
                     std::size_t& count, std::size_t cap) {
    const std::size_t n = adj.size();
    for (std::size_t v = 0; v < n; ++v) {
        if (!adj[u][v]) continue;
        if (v == target) {
            if (path.size() >= 2) {
                if (++count > cap)
                    throw ParameterError("simple-path enumeration exceeded the cap of " +
                                         std::to_string(cap) + " paths");
                interior.insert(path.begin() + 1, path.end());
            }
            continue;
        }
        if (on_path[v]) continue;
        on_path[v] = true;
        path.push_back(v);
        enumerate_paths(adj, v, target, path, on_path, interior, count, cap);
        path.pop_back();
        on_path[v] = false;
    }
}

} // namespace

std::set<std::size_t> CausalGraph::intermediate_nodes(std::size_t i, std::size_t j,
                                                      std::size_t path_cap) const {
    check_nodes(i, j);
    std::set<std::size_t> interior;
    std::vector<std::size_t> path{i};
    std::vector<bool> on_path(size(), false);
    on_path[i] = true;
    std::size_t count = 0;
    enumerate_paths(adj_, i, j, path, on_path, interior, count, path_cap);
    return interior;
}

bool CausalGraph::has_indirect_path(std::size_t i, std::size_t j) const {
    check_nodes(i, j);
    // Reachability i -> j without the direct edge. Any such walk passes
    // through an interior node, so it contains a simple path of >= 2 edges.
    std::vector<bool> seen(size(), false);
    std::vector<std::size_t> stack;
    seen[i] = true;
    stack.push_back(i);
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < size(); ++v) {
            if (!adj_[u][v]) continue;
            if (u == i && v == j) continue;
            if (v == j) return true;
            if (!seen[v]) {
                seen[v] = true;
                stack.push_back(v);
            }
        }
    }
    return false;
}

std::string CausalGraph::to_dot() const {
    std::ostringstream out;
    out << "digraph causal {\n";
    for (const auto& n : names_) out << "  \"" << n << "\";\n";
    for (auto [i, j] : edges()) out << "  \"" << names_[i] << "\" -> \"" << names_[j] << "\";\n";
    out << "}\n";
    return out.str();
}

std::string CausalGraph::to_json() const {
    nlohmann::json j;
    j["names"] = names_;
    auto rows = nlohmann::json::array();
    for (const auto& row : adj_) {
        auto r = nlohmann::json::array();
        for (auto v : row) r.push_back(static_cast<int>(v));
        rows.push_back(r);
    }
    j["adjacency"] = rows;
    return j.dump(2) + "\n";
}

std::string CausalGraph::to_matrix_csv() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (i) out << ',';
        out << names_[i];
    }
    out << '\n';
    for (const auto& row : adj_) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out << ',';
            out << static_cast<int>(row[j]);
        }
        out << '\n';
    }
    return out.str();
}

CausalGraph CausalGraph::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("invalid graph json: ") + e.what());
    }
    if (!j.contains("names") || !j.contains("adjacency"))
        throw DataError("graph json must contain 'names' and 'adjacency'");
    CausalGraph g(j["names"].get<std::vector<std::string>>());
    const auto& rows = j["adjacency"];
    if (rows.size() != g.size()) throw DataError("adjacency row count does not match names");
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (rows[i].size() != g.size())
            throw DataError("adjacency column count does not match names");
        for (std::size_t k = 0; k < g.size(); ++k) {
            int v = rows[i][k].get<int>();
            if (v != 0 && v != 1) throw DataError("adjacency entries must be 0 or 1");
            if (v) g.add_edge(i, k);
        }
    }
    return g;
}

CausalGraph CausalGraph::from_matrix_csv(const std::string& text) {
    std::stringstream ss(text);
    std::string line;
    if (!std::getline(ss, line)) throw DataError("graph csv is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> names;
    {
        std::stringstream hs(line);
        std::string field;
        while (std::getline(hs, field, ',')) names.push_back(field);
    }
    CausalGraph g(names);
    std::size_t i = 0;
    while (std::getline(ss, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (i >= names.size()) throw DataError("graph csv has more rows than names");
        std::stringstream rs(line);
        std::string field;
        std::size_t j = 0;
        while (std::getline(rs, field, ',')) {
            if (j >= names.size()) throw DataError("graph csv row has too many columns");
            if (field != "0" && field != "1")
                throw DataError("graph csv entries must be 0 or 1, got '" + field + "'");
            if (field == "1") g.add_edge(i, j);
            ++j;
        }
        if (j != names.size()) throw DataError("graph csv row has too few columns");
        ++i;
    }
    if (i != names.size()) throw DataError("graph csv has fewer rows than names");
    return g;
}

CausalGraph CausalGraph::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DataError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    std::string text = buf.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw DataError("'" + path + "' is empty");
    return text[first] == '{' ? from_json(text) : from_matrix_csv(text);
}

void CausalGraph::save(const std::string& path, const std::string& format) const {
    std::string body;
    if (format == "dot")
        body = to_dot();
    else if (format == "json")
        body = to_json();
    else if (format == "csv")
        body = to_matrix_csv();
    else
        throw ParameterError("unknown graph format '" + format + "' (dot, json, csv)");
    std::ofstream f(path, std::ios::trunc);
    if (!f) throw DataError("cannot open '" + path + "' for writing");
    f << body;
    if (!f) throw DataError("failed writing '" + path + "'");
}

} // namespace mxmap
