#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace ecp {

/// Simple undirected graph. Vertices are 1..n (DIMACS convention); no
/// self-loops, no parallel edges. Immutable after construction, so instances
/// can be shared read-only across threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

  int num_vertices() const { return n_; }
  int num_edges() const { return m_; }

  bool adjacent(int u, int v) const { return adj_matrix_[index(u, v)]; }

  /// Open neighborhood N(v), sorted ascending.
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool is_isolated(int v) const { return adj_[v].empty(); }

  /// Closed neighborhood N[v], sorted ascending.
  std::vector<int> closed_neighborhood(int v) const;

  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& other) const;

 private:
  std::size_t index(int u, int v) const {
    return static_cast<std::size_t>(u - 1) * n_ + (v - 1);
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;  // adj_[0] unused
  std::vector<std::uint8_t> adj_matrix_;
};

/// Reads a DIMACS .col stream (c/p/e lines). Throws ParseError naming the
/// offending line on format violations.
Graph parse_dimacs(std::istream& in);
Graph parse_dimacs_file(const std::string& path);

/// Emits the same DIMACS dialect accepted by parse_dimacs.
std::string to_dimacs(const Graph& g);

/// G(n, p) with p = density/100, pairs drawn in fixed order from a seeded
/// mt19937_64; identical (n, density, seed) always give the identical graph.
/// density must lie in the open interval (0, 100).
Graph random_graph(int n, double density, std::uint64_t seed);

Graph complement(const Graph& g);

/// Subgraph induced by `vertices` (1-based ids preserved through a dense
/// relabeling); `mapping[i]` gives the original id of new vertex i+1.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices,
                       std::vector<int>* mapping = nullptr);

bool is_clique(const Graph& g, const std::vector<int>& vertices);
bool is_stable_set(const Graph& g, const std::vector<int>& vertices);
bool is_connected(const Graph& g);

/// Exact maximum stable set size within G[s], by branch and bound.
int stability_number(const Graph& g, const std::vector<int>& s);
int stability_number(const Graph& g);

/// Grows a maximal clique containing `start`, repeatedly adding the feasible
/// vertex of highest weight (ties broken toward the lowest index).
std::vector<int> grow_maximal_clique(const Graph& g,
                                     const std::vector<double>& weight,
                                     int start);

/// Maximum matching size in a general graph (blossom algorithm).
int max_matching_size(const Graph& g);
bool has_perfect_matching(const Graph& g);

struct ComponentReport {
  std::vector<int> vertices;  // sorted ascending
  bool is_bipartite = false;
};

/// Connected components, each with a 2-colorability verdict.
std::vector<ComponentReport> bipartite_components(const Graph& g);

}  // namespace ecp
