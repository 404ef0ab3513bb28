#include "ecp/separation.hpp"

#include <algorithm>
#include <set>

#include "ecp/cuts.hpp"

namespace ecp {

namespace {
int ceil_div(int a, int b) { return (a + b - 1) / b; }
}  // namespace

Separator::Separator(const Graph& g, SeparationOptions opts)
    : g_(g), opts_(opts), alpha_cache_(g.num_vertices() + 1, -1) {
  if (opts_.cut_round_target <= 0) opts_.cut_round_target = g.num_vertices();
}

int Separator::alpha_neighborhood(int u) {
  if (alpha_cache_[u] < 0) alpha_cache_[u] = stability_number(g_, g_.neighbors(u));
  return alpha_cache_[u];
}

bool Separator::violated(const CutRow& row, const std::vector<double>& point) const {
  return violation(row, point) > opts_.violation_eps;
}

std::vector<CutRow> Separator::clique_and_clique_neighborhood(
    const std::vector<double>& point) {
  int n = g_.num_vertices();
  std::vector<CutRow> out;
  std::set<std::pair<std::vector<int>, int>> seen_cliques;
  for (int j = 1; j <= n - 1; ++j) {
    std::vector<double> weight(n + 1, 0.0);
    for (int v = 1; v <= n; ++v) weight[v] = point[x_index(v, j, n)];
    for (int start = 1; start <= n; ++start) {
      if (weight[start] <= 1e-9) continue;
      auto clique = grow_maximal_clique(g_, weight, start);
      if (clique.size() < 2) continue;
      if (!seen_cliques.insert({clique, j}).second) continue;

      CutRow row = clique_cut(g_, clique, j);
      if (violated(row, point)) out.push_back(row);

      if (!opts_.enable_new_families) continue;
      // scan vertices u with the clique outside N[u]
      for (int u = 1; u <= n; ++u) {
        bool disjoint = true;
        for (int q : clique)
          if (q == u || g_.adjacent(q, u)) {
            disjoint = false;
            break;
          }
        if (!disjoint) continue;
        int alpha = alpha_neighborhood(u);
        for (int k = j; k <= n - 2; ++k) {
          if (alpha < ceil_div(n, k) - 1) continue;
          CutRow cn = clique_neighborhood_cut(g_, u, j, k, clique);
          if (violated(cn, point)) out.push_back(std::move(cn));
        }
      }
    }
  }
  return out;
}

std::vector<CutRow> Separator::two_rank(const std::vector<double>& point) {
  int n = g_.num_vertices();
  std::vector<CutRow> out;
  for (int j = 1; j <= n - 1; ++j) {
    auto x = [&](int v) { return point[x_index(v, j, n)]; };
    // seed: the non-adjacent pair of largest weight
    int best_a = 0, best_b = 0;
    double best = 0.0;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) {
        if (g_.adjacent(a, b)) continue;
        double w = x(a) + x(b);
        if (w > best + 1e-12) {
          best = w;
          best_a = a;
          best_b = b;
        }
      }
    if (best_a == 0 || best <= 1e-9) continue;

    std::vector<int> s{best_a, best_b};
    std::vector<char> in_s(n + 1, 0);
    in_s[best_a] = in_s[best_b] = 1;
    std::vector<int> order;
    for (int v = 1; v <= n; ++v)
      if (!in_s[v] && x(v) > 1e-9) order.push_back(v);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return x(a) > x(b) || (x(a) == x(b) && a < b); });
    for (int v : order) {
      // alpha(S) stays 2 iff the non-neighbors of v inside S form a clique
      std::vector<int> misses;
      for (int u : s)
        if (!g_.adjacent(u, v)) misses.push_back(u);
      if (!is_clique(g_, misses)) continue;
      s.push_back(v);
      in_s[v] = 1;
    }
    std::sort(s.begin(), s.end());

    auto q = closed_dominators(g_, s);
    CutRow row = q.empty() && j <= n - 2 ? two_rank_empty_variant(g_, s, j)
                 : q.size() == 1         ? two_rank_singleton_variant(g_, s, q[0], j)
                                         : two_rank_cut(g_, s, j);
    if (violated(row, point)) out.push_back(std::move(row));
  }
  return out;
}

std::vector<CutRow> Separator::enumerated_families(const std::vector<double>& point) {
  int n = g_.num_vertices();
  std::vector<CutRow> out;
  int cap = opts_.cut_round_target;

  int found = 0;
  for (int v = 1; v <= n && found < cap; ++v)
    for (int j = 1; j <= n - 2 && found < cap; ++j) {
      CutRow row = block_cut(v, j, n);
      if (violated(row, point)) {
        out.push_back(std::move(row));
        ++found;
      }
    }

  if (!opts_.enable_new_families) return out;

  found = 0;
  for (int u = 1; u <= n && found < cap; ++u) {
    const auto& nbrs = g_.neighbors(u);
    if (nbrs.size() < 2 || alpha_neighborhood(u) < 2) continue;
    for (int j = 1; j <= n - 1 && found < cap; ++j) {
      CutRow row = subneighborhood_cut(g_, u, j, nbrs);
      if (violated(row, point)) {
        out.push_back(std::move(row));
        ++found;
      }
    }
  }

  found = 0;
  for (int u = 1; u <= n && found < cap; ++u) {
    if (g_.degree(u) == n - 1) continue;
    for (int j = 1; j <= n / 2 && found < cap; ++j) {
      if (alpha_neighborhood(u) < n / j) continue;
      CutRow row = outside_neighborhood_cut(g_, u, j);
      if (violated(row, point)) {
        out.push_back(std::move(row));
        ++found;
      }
    }
  }
  return out;
}

std::vector<CutRow> Separator::s_color(const std::vector<double>& point) {
  int n = g_.num_vertices();
  std::vector<int> colors(n);
  for (int j = 1; j <= n; ++j) colors[j - 1] = j;
  std::vector<double> mass(n + 1, 0.0);
  for (int j = 1; j <= n; ++j)
    for (int v = 1; v <= n; ++v) mass[j] += point[x_index(v, j, n)];
  std::sort(colors.begin(), colors.end(), [&](int a, int b) {
    return mass[a] > mass[b] || (mass[a] == mass[b] && a < b);
  });

  auto tail_closure = [&](std::vector<int> s) {
    std::set<int> set(s.begin(), s.end());
    while (true) {
      int size = static_cast<int>(set.size());
      int threshold = n - ceil_div(size + 1, 2);
      bool grew = false;
      for (int j = threshold + 1; j <= n; ++j)
        if (set.insert(j).second) grew = true;
      if (!grew || static_cast<int>(set.size()) == size) break;
    }
    return std::vector<int>(set.begin(), set.end());
  };

  std::vector<CutRow> out;
  CutRow best_prefix, best_tail;
  double best_prefix_violation = opts_.violation_eps;
  double best_tail_violation = opts_.violation_eps;
  std::vector<int> prefix;
  for (int m = 0; m < n; ++m) {
    prefix.push_back(colors[m]);
    CutRow row = s_color_cut(prefix, n);
    double v = violation(row, point);
    if (v > best_prefix_violation) {
      best_prefix_violation = v;
      best_prefix = row;
    }
    CutRow tail_row = s_color_cut(tail_closure(prefix), n);
    double tv = violation(tail_row, point);
    if (tv > best_tail_violation) {
      best_tail_violation = tv;
      best_tail = tail_row;
    }
  }
  if (!best_prefix.coeffs.empty()) out.push_back(std::move(best_prefix));
  if (!best_tail.coeffs.empty() && !(best_tail == best_prefix))
    out.push_back(std::move(best_tail));
  return out;
}

std::vector<CutRow> Separator::symmetry(const std::vector<double>& point) {
  int n = g_.num_vertices();
  std::vector<CutRow> out;
  for (int j = 2; j <= n; ++j)
    for (int v = j; v <= n; ++v) {
      CutRow row = symmetry_cut(v, j, n);
      if (violated(row, point)) out.push_back(std::move(row));
    }
  return out;
}

std::vector<CutRow> Separator::round(const std::vector<double>& point) {
  std::vector<CutRow> cuts = clique_and_clique_neighborhood(point);
  if (opts_.enable_new_families) {
    auto rank_cuts = two_rank(point);
    cuts.insert(cuts.end(), rank_cuts.begin(), rank_cuts.end());
  }
  if (static_cast<int>(cuts.size()) < opts_.cut_round_target) {
    auto extra = enumerated_families(point);
    cuts.insert(cuts.end(), extra.begin(), extra.end());
    if (opts_.enable_new_families) {
      auto colors = s_color(point);
      cuts.insert(cuts.end(), colors.begin(), colors.end());
    }
  }
  auto sym = symmetry(point);
  cuts.insert(cuts.end(), sym.begin(), sym.end());

  std::vector<CutRow> unique_cuts;
  std::set<std::string> seen;
  for (auto& row : cuts)
    if (seen.insert(to_text(row, g_.num_vertices())).second)
      unique_cuts.push_back(std::move(row));
  return unique_cuts;
}

}  // namespace ecp
