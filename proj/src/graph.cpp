#include "ecp/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <random>
#include <sstream>

#include "ecp/errors.hpp"

namespace ecp {

Graph::Graph(int n) : n_(n), m_(0), adj_(n + 1) {
  if (n < 0) throw ParameterError("graph: vertex count must be >= 0");
  adj_matrix_.assign(static_cast<std::size_t>(n) * n, 0);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : Graph(n) {
  for (auto [u, v] : edge_list) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParameterError("graph: vertex index out of range");
    if (u == v) throw ParameterError("graph: self-loop not allowed");
    if (adj_matrix_[index(u, v)]) continue;
    adj_matrix_[index(u, v)] = 1;
    adj_matrix_[index(v, u)] = 1;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++m_;
  }
  for (int v = 1; v <= n_; ++v) std::sort(adj_[v].begin(), adj_[v].end());
}

std::vector<int> Graph::closed_neighborhood(int v) const {
  std::vector<int> out = adj_[v];
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 1; u <= n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && adj_matrix_ == other.adj_matrix_;
}

Graph parse_dimacs(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  long long m_declared = -1;
  std::vector<std::pair<int, int>> edge_list;

  auto fail = [&](const std::string& what) {
    throw ParseError("dimacs: line " + std::to_string(lineno) + ": " + what +
                     (line.empty() ? "" : " [" + line + "]"));
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    if (tag == "c") continue;
    if (tag == "p") {
      if (n >= 0) fail("duplicate p line");
      std::string fmt;
      long long nn = 0, mm = 0;
      if (!(ls >> fmt >> nn >> mm) || fmt != "edge" || nn < 0)
        fail("expected 'p edge <n> <m>'");
      n = static_cast<int>(nn);
      m_declared = mm;
    } else if (tag == "e") {
      if (n < 0) fail("edge before p line");
      int u = 0, v = 0;
      if (!(ls >> u >> v)) fail("expected 'e <u> <v>'");
      if (u < 1 || u > n || v < 1 || v > n) fail("vertex index out of range");
      if (u == v) fail("self-loop");
      edge_list.emplace_back(u, v);
    } else {
      fail("unknown line type '" + tag + "'");
    }
  }
  if (n < 0) {
    line.clear();
    fail("missing p line");
  }
  (void)m_declared;  // edge count in the p line is informational only
  return Graph(n, edge_list);
}

Graph parse_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("dimacs: cannot open '" + path + "'");
  return parse_dimacs(in);
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.num_vertices() << " " << g.num_edges() << "\n";
  for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
  return out.str();
}

Graph random_graph(int n, double density, std::uint64_t seed) {
  if (n < 1) throw ParameterError("random_graph: n must be >= 1");
  if (!(density > 0.0 && density < 100.0))
    throw ParameterError("random_graph: density must lie in (0, 100)");
  std::mt19937_64 rng(seed);
  const double p = density / 100.0;
  std::vector<std::pair<int, int>> edge_list;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      // top 53 bits -> uniform double in [0,1); avoids the
      // implementation-defined std::uniform_real_distribution
      double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (draw < p) edge_list.emplace_back(u, v);
    }
  }
  return Graph(n, edge_list);
}

Graph complement(const Graph& g) {
  int n = g.num_vertices();
  std::vector<std::pair<int, int>> edge_list;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (!g.adjacent(u, v)) edge_list.emplace_back(u, v);
  return Graph(n, edge_list);
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices,
                       std::vector<int>* mapping) {
  std::vector<int> verts = vertices;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<int> pos(g.num_vertices() + 1, 0);
  for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i + 1);
  std::vector<std::pair<int, int>> edge_list;
  for (int u : verts)
    for (int v : g.neighbors(u))
      if (u < v && pos[v] != 0) edge_list.emplace_back(pos[u], pos[v]);
  if (mapping) *mapping = verts;
  return Graph(static_cast<int>(verts.size()), edge_list);
}

bool is_clique(const Graph& g, const std::vector<int>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!g.adjacent(vertices[i], vertices[j])) return false;
  return true;
}

bool is_stable_set(const Graph& g, const std::vector<int>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) return false;
  return true;
}

bool is_connected(const Graph& g) {
  int n = g.num_vertices();
  if (n <= 1) return true;
  std::vector<char> seen(n + 1, 0);
  std::vector<int> stack{1};
  seen[1] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : g.neighbors(u))
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
  }
  return count == n;
}

namespace {

// Recursive exact MIS over an explicit candidate set. Isolated candidates are
// taken outright; branching picks the highest-degree candidate.
int mis_recurse(const Graph& g, const std::vector<int>& cand) {
  if (cand.empty()) return 0;
  std::vector<char> in(g.num_vertices() + 1, 0);
  for (int v : cand) in[v] = 1;
  int taken = 0;
  std::vector<int> active;
  int max_deg = -1, branch_v = -1;
  for (int v : cand) {
    int d = 0;
    for (int u : g.neighbors(v))
      if (in[u]) ++d;
    if (d == 0) {
      ++taken;
    } else {
      active.push_back(v);
      if (d > max_deg) {
        max_deg = d;
        branch_v = v;
      }
    }
  }
  if (active.empty()) return taken;
  std::vector<int> without_v;
  without_v.reserve(active.size() - 1);
  for (int v : active)
    if (v != branch_v) without_v.push_back(v);
  std::vector<int> without_closed;
  for (int v : without_v)
    if (!g.adjacent(v, branch_v)) without_closed.push_back(v);
  int with_branch = 1 + mis_recurse(g, without_closed);
  int without_branch = mis_recurse(g, without_v);
  return taken + std::max(with_branch, without_branch);
}

}  // namespace

int stability_number(const Graph& g, const std::vector<int>& s) {
  std::vector<int> cand = s;
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  for (int v : cand)
    if (v < 1 || v > g.num_vertices())
      throw ParameterError("stability_number: vertex out of range");
  return mis_recurse(g, cand);
}

int stability_number(const Graph& g) {
  std::vector<int> all(g.num_vertices());
  for (int v = 1; v <= g.num_vertices(); ++v) all[v - 1] = v;
  return stability_number(g, all);
}

std::vector<int> grow_maximal_clique(const Graph& g,
                                     const std::vector<double>& weight,
                                     int start) {
  if (start < 1 || start > g.num_vertices())
    throw ParameterError("grow_maximal_clique: start vertex out of range");
  auto weight_of = [&](int v) -> double {
    return v < static_cast<int>(weight.size()) ? weight[v] : 0.0;
  };
  std::vector<int> clique{start};
  std::vector<int> cand = g.neighbors(start);
  while (!cand.empty()) {
    int pick = cand[0];
    for (int v : cand)
      if (weight_of(v) > weight_of(pick)) pick = v;  // ties keep lowest index
    clique.push_back(pick);
    std::vector<int> next;
    for (int v : cand)
      if (v != pick && g.adjacent(v, pick)) next.push_back(v);
    cand.swap(next);
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

std::vector<ComponentReport> bipartite_components(const Graph& g) {
  int n = g.num_vertices();
  std::vector<int> side(n + 1, -1);
  std::vector<ComponentReport> out;
  for (int root = 1; root <= n; ++root) {
    if (side[root] != -1) continue;
    ComponentReport comp;
    comp.is_bipartite = true;
    side[root] = 0;
    std::vector<int> queue{root};
    std::size_t head = 0;
    while (head < queue.size()) {
      int u = queue[head++];
      comp.vertices.push_back(u);
      for (int v : g.neighbors(u)) {
        if (side[v] == -1) {
          side[v] = side[u] ^ 1;
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          comp.is_bipartite = false;
        }
      }
    }
    std::sort(comp.vertices.begin(), comp.vertices.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace ecp
