#include "ecp/cuts.hpp"

#include <algorithm>
#include <string>

#include "ecp/errors.hpp"

namespace ecp {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void check_vertices(const Graph& g, const std::vector<int>& vs, const char* who) {
  for (int v : vs)
    if (v < 1 || v > g.num_vertices())
      throw ParameterError(std::string(who) + ": vertex out of range");
}

}  // namespace

std::vector<int> closed_dominators(const Graph& g, const std::vector<int>& s) {
  std::vector<int> q;
  for (int cand : s) {
    bool dominates = true;
    for (int other : s)
      if (other != cand && !g.adjacent(cand, other)) {
        dominates = false;
        break;
      }
    if (dominates) q.push_back(cand);
  }
  return q;
}

CutRow clique_cut(const Graph& g, const std::vector<int>& q, int j) {
  int n = g.num_vertices();
  std::vector<int> clique = sorted_unique(q);
  check_vertices(g, clique, "clique_cut");
  if (clique.size() < 2) throw ParameterError("clique_cut: |Q| must be >= 2");
  if (!is_clique(g, clique)) throw ParameterError("clique_cut: Q is not a clique");
  if (j < 1 || j > n - 1) throw ParameterError("clique_cut: color must lie in 1..n-1");
  RowBuilder builder(num_model_vars(n));
  for (int v : clique) builder.add(x_index(v, j, n), 1);
  builder.add(w_index(j, n), -1);
  return builder.finish(Sense::LessEqual, 0, CliqueTag{clique, j});
}

CutRow block_cut(int v, int j, int n) {
  if (v < 1 || v > n) throw ParameterError("block_cut: vertex out of range");
  if (j < 1 || j > n - 2) throw ParameterError("block_cut: color must lie in 1..n-2");
  RowBuilder builder(num_model_vars(n));
  for (int k = j; k <= n; ++k) builder.add(x_index(v, k, n), 1);
  builder.add(w_index(j, n), -1);
  return builder.finish(Sense::LessEqual, 0, BlockTag{v, j});
}

CutRow two_rank_cut(const Graph& g, const std::vector<int>& s, int j) {
  int n = g.num_vertices();
  std::vector<int> set = sorted_unique(s);
  check_vertices(g, set, "two_rank_cut");
  if (stability_number(g, set) != 2)
    throw ParameterError("two_rank_cut: alpha(S) must equal 2");
  if (j < 1 || j > n - 1) throw ParameterError("two_rank_cut: color must lie in 1..n-1");
  std::vector<int> q = closed_dominators(g, set);
  RowBuilder builder(num_model_vars(n));
  for (int v : set) builder.add(x_index(v, j, n), 1);
  for (int v : q) builder.add(x_index(v, j, n), 1);  // lifts Q members to 2
  builder.add(w_index(j, n), -2);
  return builder.finish(Sense::LessEqual, 0, TwoRankTag{set, q, j});
}

CutRow two_rank_empty_variant(const Graph& g, const std::vector<int>& s, int j) {
  int n = g.num_vertices();
  std::vector<int> set = sorted_unique(s);
  check_vertices(g, set, "two_rank_empty_variant");
  if (stability_number(g, set) != 2)
    throw ParameterError("two_rank_empty_variant: alpha(S) must equal 2");
  if (!closed_dominators(g, set).empty())
    throw ParameterError("two_rank_empty_variant: Q must be empty for S");
  if (j < 1 || j > n - 2)
    throw ParameterError("two_rank_empty_variant: color must lie in 1..n-2");
  RowBuilder builder(num_model_vars(n));
  for (int v : set) builder.add(x_index(v, j, n), 1);
  for (int v = 1; v <= n; ++v) builder.add(x_index(v, n - 1, n), 1);
  builder.add(w_index(j, n), -2);
  builder.add(w_index(n - 1, n), -1);
  builder.add(w_index(n, n), 1);
  return builder.finish(Sense::LessEqual, 0, TwoRankEmptyTag{set, j});
}

CutRow two_rank_singleton_variant(const Graph& g, const std::vector<int>& s,
                                  int q, int j) {
  int n = g.num_vertices();
  std::vector<int> set = sorted_unique(s);
  check_vertices(g, set, "two_rank_singleton_variant");
  if (stability_number(g, set) != 2)
    throw ParameterError("two_rank_singleton_variant: alpha(S) must equal 2");
  std::vector<int> dom = closed_dominators(g, set);
  if (dom.size() != 1 || dom[0] != q)
    throw ParameterError("two_rank_singleton_variant: Q must equal {q}");
  if (j < 1 || j > n - 1)
    throw ParameterError("two_rank_singleton_variant: color must lie in 1..n-1");
  RowBuilder builder(num_model_vars(n));
  for (int v : set)
    if (v != q) builder.add(x_index(v, j, n), 1);
  builder.add(x_index(q, j, n), 2);
  builder.add(x_index(q, n, n), 1);
  builder.add(w_index(j, n), -2);
  return builder.finish(Sense::LessEqual, 0, TwoRankSingletonTag{set, q, j});
}

int gamma(int n, int k, int alpha_s) {
  if (k < 1 || k > n) throw ParameterError("gamma: k must lie in 1..n");
  if (alpha_s < 1) throw ParameterError("gamma: alpha_s must be >= 1");
  return std::min(ceil_div(n, k), alpha_s);
}

CutRow subneighborhood_cut(const Graph& g, int u, int j, const std::vector<int>& s) {
  int n = g.num_vertices();
  if (u < 1 || u > n) throw ParameterError("subneighborhood_cut: vertex out of range");
  if (j < 1 || j > n - 1)
    throw ParameterError("subneighborhood_cut: color must lie in 1..n-1");
  std::vector<int> set = sorted_unique(s);
  check_vertices(g, set, "subneighborhood_cut");
  for (int v : set)
    if (!g.adjacent(u, v))
      throw ParameterError("subneighborhood_cut: S must be a subset of N(u)");
  int alpha = stability_number(g, set);
  if (alpha < 2) throw ParameterError("subneighborhood_cut: alpha(S) must be >= 2");

  int gamma_j = gamma(n, j, alpha);
  RowBuilder builder(num_model_vars(n));
  builder.add(x_index(u, j, n), gamma_j);
  for (int v : set) builder.add(x_index(v, j, n), 1);
  for (int k = j + 1; k <= n; ++k)
    builder.add(x_index(u, k, n), gamma_j - gamma(n, k, alpha));
  builder.add(w_index(j, n), -gamma_j);
  return builder.finish(Sense::LessEqual, 0, SubneighborhoodTag{u, j, set});
}

CutRow s_color_cut(const std::vector<int>& colors, int n) {
  std::vector<int> set = sorted_unique(colors);
  if (set.empty()) throw ParameterError("s_color_cut: S must be nonempty");
  for (int j : set)
    if (j < 1 || j > n) throw ParameterError("s_color_cut: color out of range");

  std::vector<char> in_set(n + 1, 0);
  for (int j : set) in_set[j] = 1;
  // b_k = d_k floor(n/k) + min(d_k, n - k floor(n/k)), d_k = |S ∩ {1..k}|
  std::vector<std::int64_t> b(n + 1, 0);
  int d = 0;
  for (int k = 1; k <= n; ++k) {
    if (in_set[k]) ++d;
    b[k] = static_cast<std::int64_t>(d) * (n / k) +
           std::min<std::int64_t>(d, n - static_cast<std::int64_t>(k) * (n / k));
  }
  RowBuilder builder(num_model_vars(n));
  for (int j : set)
    for (int v = 1; v <= n; ++v) builder.add(x_index(v, j, n), 1);
  builder.add(w_index(1, n), -b[1]);
  for (int k = 2; k <= n; ++k) builder.add(w_index(k, n), -(b[k] - b[k - 1]));
  return builder.finish(Sense::LessEqual, 0, SColorTag{set});
}

CutRow outside_neighborhood_cut(const Graph& g, int u, int j) {
  int n = g.num_vertices();
  if (u < 1 || u > n)
    throw ParameterError("outside_neighborhood_cut: vertex out of range");
  if (g.degree(u) == n - 1)
    throw ParameterError("outside_neighborhood_cut: u must be non-universal");
  if (j < 1 || j > n / 2)
    throw ParameterError("outside_neighborhood_cut: color must lie in 1..floor(n/2)");
  if (stability_number(g, g.neighbors(u)) < n / j)
    throw ParameterError("outside_neighborhood_cut: alpha(N(u)) must be >= floor(n/j)");

  RowBuilder builder(num_model_vars(n));
  builder.add(x_index(u, j, n), n / j - 1);
  std::vector<char> in_closed(n + 1, 0);
  in_closed[u] = 1;
  for (int v : g.neighbors(u)) in_closed[v] = 1;
  for (int v = 1; v <= n; ++v)
    if (!in_closed[v]) builder.add(x_index(v, j, n), -1);
  // b_k = floor(n/j) - floor(n/k) for k > j
  auto b = [&](int k) -> std::int64_t { return n / j - n / k; };
  for (int k = j + 1; k <= n; ++k) builder.add(x_index(u, k, n), b(k));
  builder.add(w_index(j + 1, n), -b(j + 1));
  for (int k = j + 2; k <= n; ++k) builder.add(w_index(k, n), -(b(k) - b(k - 1)));
  return builder.finish(Sense::LessEqual, 0, OutsideNeighborhoodTag{u, j});
}

CutRow clique_neighborhood_cut(const Graph& g, int u, int j, int k,
                               const std::vector<int>& q) {
  int n = g.num_vertices();
  if (u < 1 || u > n)
    throw ParameterError("clique_neighborhood_cut: vertex out of range");
  std::vector<int> clique = sorted_unique(q);
  check_vertices(g, clique, "clique_neighborhood_cut");
  if (clique.empty()) throw ParameterError("clique_neighborhood_cut: Q must be nonempty");
  if (!is_clique(g, clique))
    throw ParameterError("clique_neighborhood_cut: Q is not a clique");
  for (int v : clique)
    if (v == u || g.adjacent(u, v))
      throw ParameterError("clique_neighborhood_cut: Q must avoid N[u]");
  if (!(1 <= j && j <= k && k <= n - 2))
    throw ParameterError("clique_neighborhood_cut: need 1 <= j <= k <= n-2");
  int alpha = stability_number(g, g.neighbors(u));
  if (alpha < ceil_div(n, k) - 1)
    throw ParameterError("clique_neighborhood_cut: alpha(N(u)) must be >= ceil(n/k)-1");

  int cap = ceil_div(n, k);
  RowBuilder builder(num_model_vars(n));
  builder.add(x_index(u, j, n), cap - 1);
  for (int v : g.neighbors(u)) builder.add(x_index(v, j, n), 1);
  for (int v : clique) builder.add(x_index(v, j, n), 1);
  for (int l = k + 1; l <= n; ++l) builder.add(x_index(u, l, n), cap - ceil_div(n, l));
  for (int v = 1; v <= n; ++v) builder.add(x_index(v, n - 1, n), 1);
  for (int v = 1; v <= n; ++v)
    if (v != u) builder.add(x_index(v, n, n), 1);

  // RHS telescoped over w with per-segment constants:
  //   b_ul = min(ceil(n/l), alpha+1)  for j <= l <= k-1,
  //   ceil(n/k)                        for k <= l <= n-2,
  //   ceil(n/k) + 1                    for l in {n-1, n}.
  auto segment = [&](int l) -> std::int64_t {
    if (l < k) return std::min(ceil_div(n, l), alpha + 1);
    if (l <= n - 2) return cap;
    return cap + 1;
  };
  builder.add(w_index(j, n), -segment(j));
  for (int l = j + 1; l <= n; ++l)
    builder.add(w_index(l, n), -(segment(l) - segment(l - 1)));
  return builder.finish(Sense::LessEqual, 0, CliqueNeighborhoodTag{u, j, k, clique});
}

CutRow symmetry_cut(int v, int j, int n) {
  if (!(2 <= j && j <= v && v <= n))
    throw ParameterError("symmetry_cut: need 2 <= j <= v <= n");
  RowBuilder builder(num_model_vars(n));
  builder.add(x_index(v, j, n), 1);
  for (int u = j - 1; u <= v - 1; ++u) builder.add(x_index(u, j - 1, n), -1);
  return builder.finish(Sense::LessEqual, 0, SymmetryTag{v, j});
}

bool check_validity(const Graph& g, const CutRow& row, const OracleLimits& limits) {
  int n = g.num_vertices();
  bool valid = true;
  for (int k = 1; k <= n && valid; ++k) {
    for_each_eqcol(
        g, k,
        [&](const EquitableColoring& c) {
          if (!satisfies(row, c, n)) {
            valid = false;
            return false;
          }
          return true;
        },
        limits);
  }
  return valid;
}

}  // namespace ecp
