#include "ecp/heuristics.hpp"

#include <algorithm>
#include <numeric>

namespace ecp {

namespace {

// moves vertices from over-full to under-full classes while properness
// allows; true when all class sizes land in [floor, ceil]. Each successful
// move shrinks the total deviation, so the loop terminates.
bool rebalance(const Graph& g, EquitableColoring& c) {
  int n = g.num_vertices();
  int floor_sz = n / c.k, ceil_sz = (n + c.k - 1) / c.k;
  std::vector<int> size(c.k + 1, 0);
  for (int v = 1; v <= n; ++v) ++size[c.color_of[v]];

  auto can_move = [&](int v, int to) {
    for (int u : g.neighbors(v))
      if (c.color_of[u] == to) return false;
    return true;
  };
  auto move = [&](int v, int to) {
    --size[c.color_of[v]];
    ++size[to];
    c.color_of[v] = to;
  };

  while (true) {
    int needy = 0, overfull = 0;
    for (int j = 1; j <= c.k; ++j) {
      if (size[j] < floor_sz && (needy == 0 || size[j] < size[needy])) needy = j;
      if (size[j] > ceil_sz && (overfull == 0 || size[j] > size[overfull])) overfull = j;
    }
    if (needy == 0 && overfull == 0) break;
    bool moved = false;
    if (needy != 0) {
      // donors keep at least the floor after giving a vertex away
      for (int v = 1; v <= n && !moved; ++v) {
        int from = c.color_of[v];
        if (from == needy || size[from] <= floor_sz) continue;
        if (!can_move(v, needy)) continue;
        move(v, needy);
        moved = true;
      }
    } else {
      for (int v = 1; v <= n && !moved; ++v) {
        if (c.color_of[v] != overfull) continue;
        for (int to = 1; to <= c.k && !moved; ++to) {
          if (to == overfull || size[to] >= ceil_sz) continue;
          if (!can_move(v, to)) continue;
          move(v, to);
          moved = true;
        }
      }
    }
    if (!moved) return false;
  }
  for (int j = 1; j <= c.k; ++j)
    if (size[j] < floor_sz || size[j] > ceil_sz) return false;
  return true;
}

}  // namespace

EquitableColoring initial_heuristic(const Graph& g) {
  int n = g.num_vertices();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return g.degree(a) > g.degree(b) || (g.degree(a) == g.degree(b) && a < b);
  });

  for (int k = 1; k <= n; ++k) {
    int ceil_sz = (n + k - 1) / k;
    EquitableColoring c;
    c.k = k;
    c.color_of.assign(n + 1, 0);
    std::vector<int> size(k + 1, 0);
    bool ok = true;
    for (int v : order) {
      int chosen = 0;
      for (int j = 1; j <= k && chosen == 0; ++j) {
        if (size[j] >= ceil_sz) continue;
        bool proper = true;
        for (int u : g.neighbors(v))
          if (c.color_of[u] == j) {
            proper = false;
            break;
          }
        if (proper) chosen = j;
      }
      if (chosen == 0) {
        ok = false;
        break;
      }
      c.color_of[v] = chosen;
      ++size[chosen];
    }
    if (!ok) continue;
    if (rebalance(g, c) && is_valid_eqcol(g, c)) return c;
  }
  // unreachable: k = n assigns singletons
  EquitableColoring singletons;
  singletons.k = n;
  singletons.color_of.assign(n + 1, 0);
  for (int v = 1; v <= n; ++v) singletons.color_of[v] = v;
  return singletons;
}

std::optional<EquitableColoring> primal_heuristic(const Graph& g,
                                                  const std::vector<double>& point,
                                                  int incumbent_k) {
  int n = g.num_vertices();
  EquitableColoring c;
  c.color_of.assign(n + 1, 0);
  for (int v = 1; v <= n; ++v) {
    int best = 1;
    for (int j = 2; j <= n; ++j)
      if (point[x_index(v, j, n)] > point[x_index(v, best, n)]) best = j;
    c.color_of[v] = best;
  }

  // repair conflicts: recolor the endpoint with smaller fractional support
  for (int guard = 0; guard < n * n; ++guard) {
    int bad_u = 0, bad_v = 0;
    for (auto [u, v] : g.edges())
      if (c.color_of[u] == c.color_of[v]) {
        bad_u = u;
        bad_v = v;
        break;
      }
    if (bad_u == 0) break;
    int j = c.color_of[bad_u];
    int move = point[x_index(bad_u, j, n)] <= point[x_index(bad_v, j, n)] ? bad_u : bad_v;
    int chosen = 0;
    double chosen_weight = -1.0;
    for (int target = 1; target <= n; ++target) {
      if (target == j) continue;
      bool proper = true;
      for (int u : g.neighbors(move))
        if (c.color_of[u] == target) {
          proper = false;
          break;
        }
      if (!proper) continue;
      double weight = point[x_index(move, target, n)];
      if (weight > chosen_weight) {
        chosen_weight = weight;
        chosen = target;
      }
    }
    if (chosen == 0) return std::nullopt;  // unrepairable rounding
    c.color_of[move] = chosen;
  }
  for (auto [u, v] : g.edges())
    if (c.color_of[u] == c.color_of[v]) return std::nullopt;

  // compact color labels and rebalance to equity
  std::vector<int> relabel(n + 1, 0);
  int k = 0;
  for (int v = 1; v <= n; ++v) {
    int& label = relabel[c.color_of[v]];
    if (label == 0) label = ++k;
    c.color_of[v] = label;
  }
  c.k = k;
  if (k >= incumbent_k) return std::nullopt;
  if (!rebalance(g, c)) return std::nullopt;
  if (!is_valid_eqcol(g, c) || c.k >= incumbent_k) return std::nullopt;
  return c;
}

}  // namespace ecp
