#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace adjsem {

/// Finite directed graph: loops allowed, no multi-edges, possibly empty.
/// Vertices are named strings; indices follow declaration order, and every
/// enumeration in the library (assignments, homomorphism search, witnesses)
/// is lexicographic in that order, so results are deterministic.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::vector<std::string> vertex_names);

    static Graph empty_graph();
    static Graph one_loop();

    int vertex_count() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::string& name(int v) const { return names_.at(v); }
    std::optional<int> index_of(const std::string& vertex) const;
    int require_index(const std::string& vertex) const;

    bool has_edge(int a, int b) const { return adj_[idx(a, b)] != 0; }
    bool has_edge(const std::string& a, const std::string& b) const;
    void add_edge(int a, int b);
    void add_edge(const std::string& a, const std::string& b);
    void add_undirected(const std::string& a, const std::string& b);
    void add_loop(const std::string& a);

    int edge_count() const;
    /// Ordered pairs (a,b) with a->b, lexicographic in vertex order.
    std::vector<std::pair<int, int>> edges() const;

    bool is_reflexive() const;
    bool is_symmetric() const;
    bool is_loopless() const;

    bool operator==(const Graph&) const = default;

private:
    std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * names_.size() + b; }

    std::vector<std::string> names_;
    std::map<std::string, int> index_;
    std::vector<std::uint8_t> adj_;
};

/// Thrown on malformed graph/semigroup/term/sentence input.  `line` is
/// 1-based when the source is line-oriented, 0 otherwise.
struct ParseError : std::runtime_error {
    ParseError(std::string message, int line = 0);
    int line;
};

Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);
std::string graph_to_dot(const Graph& g);

// Constructions.
Graph product(const Graph& g, const Graph& h);
Graph product_of_none();
Graph induced_subgraph(const Graph& g, const std::vector<std::string>& vertices);
Graph reflexive_closure(const Graph& g);
Graph symmetric_closure(const Graph& g);

/// Named graphs with their customary vertex labels.  Parameterized names:
/// C(k>=2), K(n>=1), U(n>=1).
Graph catalog_graph(const std::string& name, std::optional<int> parameter = std::nullopt);
std::vector<std::string> catalog_names();

/// Which of the standard relational classes the graph belongs to, each
/// decided by its defining sentences via satisfies().
std::vector<std::string> classify_standard(const Graph& g);

/// Backtracking isomorphism test on adjacency matrices; vertex count capped.
std::optional<std::vector<int>> graph_isomorphism(const Graph& g, const Graph& h, int cap = 8);

}  // namespace adjsem
