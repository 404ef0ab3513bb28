#include <algorithm>
#include <queue>
#include <vector>

#include "ecp/graph.hpp"

namespace ecp {

namespace {

// Blossom (augmenting path with contraction) maximum matching, 0-based.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g) : n_(g.num_vertices()), adj_(n_) {
    for (auto [u, v] : g.edges()) {
      adj_[u - 1].push_back(v - 1);
      adj_[v - 1].push_back(u - 1);
    }
    match_.assign(n_, -1);
  }

  int run() {
    // greedy seed matching
    for (int v = 0; v < n_; ++v)
      if (match_[v] == -1)
        for (int u : adj_[v])
          if (match_[u] == -1) {
            match_[v] = u;
            match_[u] = v;
            break;
          }
    int size = 0;
    for (int v = 0; v < n_; ++v)
      if (match_[v] != -1) ++size;
    size /= 2;
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      int leaf = find_augmenting_path(v);
      if (leaf == -1) continue;
      ++size;
      while (leaf != -1) {
        int pv = parent_[leaf];
        int next = match_[pv];
        match_[leaf] = pv;
        match_[pv] = leaf;
        leaf = next;
      }
    }
    return size;
  }

 private:
  int lowest_common_base(int a, int b) const {
    std::vector<char> seen(n_, 0);
    int x = a;
    while (true) {
      x = base_[x];
      seen[x] = 1;
      if (match_[x] == -1) break;
      x = parent_[match_[x]];
    }
    int y = b;
    while (true) {
      y = base_[y];
      if (seen[y]) return y;
      y = parent_[match_[y]];
    }
  }

  void mark_path(int v, int stem_base, int child, std::vector<char>& in_blossom) {
    while (base_[v] != stem_base) {
      in_blossom[base_[v]] = 1;
      in_blossom[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_augmenting_path(int root) {
    visited_.assign(n_, 0);
    parent_.assign(n_, -1);
    base_.resize(n_);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    visited_[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          // odd cycle: contract the blossom
          int stem = lowest_common_base(v, to);
          std::vector<char> in_blossom(n_, 0);
          mark_path(v, stem, to, in_blossom);
          mark_path(to, stem, v, in_blossom);
          for (int i = 0; i < n_; ++i)
            if (in_blossom[base_[i]]) {
              base_[i] = stem;
              if (!visited_[i]) {
                visited_[i] = 1;
                q.push(i);
              }
            }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          visited_[match_[to]] = 1;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_, parent_, base_;
  std::vector<char> visited_;
};

}  // namespace

int max_matching_size(const Graph& g) {
  if (g.num_vertices() == 0) return 0;
  return BlossomMatcher(g).run();
}

bool has_perfect_matching(const Graph& g) {
  int n = g.num_vertices();
  if (n % 2 != 0) return false;
  return max_matching_size(g) == n / 2;
}

}  // namespace ecp
