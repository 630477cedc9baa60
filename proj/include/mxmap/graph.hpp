#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace mxmap {

/// Directed causal graph over named variables. Row index is the cause,
/// column index the effect. Self-loops are rejected; cycles are allowed,
/// and a 2-cycle represents a bidirectional link.
class CausalGraph {
  public:
    CausalGraph() = default;
    explicit CausalGraph(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }

    bool has_edge(std::size_t i, std::size_t j) const;
    /// Idempotent; throws ParameterError on i == j or out-of-range indices.
    void add_edge(std::size_t i, std::size_t j);
    void remove_edge(std::size_t i, std::size_t j);

    std::size_t edge_count() const;
    /// Edges as (cause, effect) pairs in row-major order.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;
    /// Out-neighbors of i, ascending.
    std::vector<std::size_t> children(std::size_t i) const;

    const std::vector<std::vector<std::uint8_t>>& adjacency() const { return adj_; }

    /// Union of interior nodes over all simple directed paths i -> j with at
    /// least two edges (equivalently: avoiding the direct edge). Empty when
    /// no such path exists. Throws ParameterError if path enumeration
    /// exceeds `path_cap` (unreachable for the graph sizes used here).
    std::set<std::size_t> intermediate_nodes(std::size_t i, std::size_t j,
                                             std::size_t path_cap = 10000) const;

    /// True iff some simple directed path i -> j of length >= 2 edges
    /// exists, i.e. the pair is connected other than by the direct edge.
    bool has_indirect_path(std::size_t i, std::size_t j) const;

    // Serialization. All exports are deterministic; json and matrix-csv
    // round-trip bit-exactly through the matching importer.
    std::string to_dot() const;
    std::string to_json() const;
    std::string to_matrix_csv() const;
    static CausalGraph from_json(const std::string& text);
    static CausalGraph from_matrix_csv(const std::string& text);

    /// Reads .json or .csv/.dot-free graph files by extension sniffing:
    /// content starting with '{' is parsed as json, otherwise as matrix csv.
    static CausalGraph load(const std::string& path);
    void save(const std::string& path, const std::string& format) const;

    bool operator==(const CausalGraph& other) const = default;

  private:
    void check_nodes(std::size_t i, std::size_t j) const;

    std::vector<std::string> names_;
    std::vector<std::vector<std::uint8_t>> adj_;
};

} // namespace mxmap
