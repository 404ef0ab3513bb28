#include "ecp/coloring.hpp"

#include <algorithm>
#include <string>

#include "ecp/errors.hpp"

namespace ecp {

std::vector<int> EquitableColoring::class_of(int j) const {
  std::vector<int> out;
  for (int v = 1; v <= n(); ++v)
    if (color_of[v] == j) out.push_back(v);
  return out;
}

int EquitableColoring::class_size(int j) const {
  int count = 0;
  for (int v = 1; v <= n(); ++v)
    if (color_of[v] == j) ++count;
  return count;
}

bool is_valid_eqcol(const Graph& g, const EquitableColoring& c) {
  int n = g.num_vertices();
  if (c.n() != n || c.k < 1 || c.k > n) return false;
  std::vector<int> size(c.k + 1, 0);
  for (int v = 1; v <= n; ++v) {
    int j = c.color_of[v];
    if (j < 1 || j > c.k) return false;
    ++size[j];
  }
  int floor_sz = n / c.k, ceil_sz = (n + c.k - 1) / c.k;
  for (int j = 1; j <= c.k; ++j)
    if (size[j] < floor_sz || size[j] > ceil_sz) return false;
  for (auto [u, v] : g.edges())
    if (c.color_of[u] == c.color_of[v]) return false;
  return true;
}

std::vector<double> to_vector(const EquitableColoring& c, int n) {
  std::vector<double> vec(num_model_vars(n), 0.0);
  for (int v = 1; v <= n; ++v) vec[x_index(v, c.color_of[v], n)] = 1.0;
  for (int j = 1; j <= c.k; ++j) vec[w_index(j, n)] = 1.0;
  return vec;
}

EquitableColoring canonical_relabeling(const EquitableColoring& c) {
  int n = c.n();
  std::vector<int> new_label(c.k + 1, 0);
  int next = 0;
  EquitableColoring out;
  out.k = c.k;
  out.color_of.assign(n + 1, 0);
  for (int v = 1; v <= n; ++v) {
    int j = c.color_of[v];
    if (new_label[j] == 0) new_label[j] = ++next;
    out.color_of[v] = new_label[j];
  }
  return out;
}

std::int64_t evaluate_lhs(const CutRow& row, const EquitableColoring& c, int n) {
  std::int64_t acc = 0;
  for (auto [var, coeff] : row.coeffs) {
    if (var < n * n) {
      int v = var / n + 1;
      int j = var % n + 1;
      if (c.color_of[v] == j) acc += coeff;
    } else {
      int j = var - n * n + 1;
      if (j <= c.k) acc += coeff;
    }
  }
  return acc;
}

bool is_tight(const CutRow& row, const EquitableColoring& c, int n) {
  return evaluate_lhs(row, c, n) == row.rhs;
}

bool satisfies(const CutRow& row, const EquitableColoring& c, int n) {
  std::int64_t lhs = evaluate_lhs(row, c, n);
  switch (row.sense) {
    case Sense::LessEqual:
      return lhs <= row.rhs;
    case Sense::Equal:
      return lhs == row.rhs;
    case Sense::GreaterEqual:
      return lhs >= row.rhs;
  }
  return false;
}

namespace {

void check_cap(const Graph& g, int k, const OracleLimits& limits) {
  int n = g.num_vertices();
  if (n > limits.max_vertices)
    throw ResourceError("oracle: n = " + std::to_string(n) +
                        " exceeds the enumeration cap " +
                        std::to_string(limits.max_vertices));
  if (n > 64)
    throw ResourceError("oracle: n > 64 is not supported by the color masks");
  if (k < 1 || k > n)
    throw ParameterError("oracle: k must lie in 1..n");
}

struct IntersectionState {
  int color = 0;
  int target = 0;
  int current = 0;    // assigned members of the set with this color
  int remaining = 0;  // unassigned members of the set
  std::vector<char> in_set;
};

// Backtracking enumerator shared by enumeration, feasibility, and the
// spec-constrained witness search.
class EqcolSearch {
 public:
  EqcolSearch(const Graph& g, int k, bool canonical)
      : g_(g), n_(g.num_vertices()), k_(k), canonical_(canonical) {
    floor_ = n_ / k_;
    ceil_ = (n_ + k_ - 1) / k_;
    buffer_.k = k_;
    buffer_.color_of.assign(n_ + 1, 0);
    class_size_.assign(k_ + 1, 0);
    deficit_ = k_ * floor_;
    allowed_.assign(n_ + 1, ~std::uint64_t{0});
    smaller_neighbors_.assign(n_ + 1, {});
    for (int v = 1; v <= n_; ++v)
      for (int u : g.neighbors(v))
        if (u < v) smaller_neighbors_[v].push_back(u);
  }

  // restrict vertex v to color j; returns false when this is contradictory
  bool fix_color(int v, int j) {
    std::uint64_t mask = std::uint64_t{1} << (j - 1);
    allowed_[v] &= mask;
    return allowed_[v] != 0;
  }
  void forbid_color(int v, int j) { allowed_[v] &= ~(std::uint64_t{1} << (j - 1)); }

  void add_intersection(int color, const std::vector<int>& set, int count) {
    IntersectionState st;
    st.color = color;
    st.target = count;
    st.in_set.assign(n_ + 1, 0);
    for (int v : set)
      if (v >= 1 && v <= n_ && !st.in_set[v]) {
        st.in_set[v] = 1;
        ++st.remaining;
      }
    intersections_.push_back(std::move(st));
  }

  void set_leaf_filter(std::function<bool(const EquitableColoring&)> filter) {
    leaf_filter_ = std::move(filter);
  }

  // visit returns false to stop the whole search
  void run(const std::function<bool(const EquitableColoring&)>& visit) {
    visit_ = &visit;
    stopped_ = false;
    recurse(1, 0);
  }

 private:
  bool recurse(int v, int max_used) {
    if (stopped_) return false;
    if (v > n_) {
      if (leaf_filter_ && !leaf_filter_(buffer_)) return true;
      if (!(*visit_)(buffer_)) {
        stopped_ = true;
        return false;
      }
      return true;
    }
    int remaining = n_ - v;  // vertices after v
    int top = canonical_ ? std::min(k_, max_used + 1) : k_;
    for (int j = 1; j <= top; ++j) {
      if (!(allowed_[v] >> (j - 1) & 1)) continue;
      if (class_size_[j] == ceil_) continue;
      bool conflict = false;
      for (int u : smaller_neighbors_[v])
        if (buffer_.color_of[u] == j) {
          conflict = true;
          break;
        }
      if (conflict) continue;

      // assign
      ++class_size_[j];
      if (class_size_[j] <= floor_) --deficit_;
      buffer_.color_of[v] = j;
      bool inter_ok = true;
      for (auto& st : intersections_) {
        if (st.in_set[v]) {
          --st.remaining;
          if (st.color == j) ++st.current;
        }
        if (st.current > st.target || st.current + st.remaining < st.target)
          inter_ok = false;
      }

      if (inter_ok && deficit_ <= remaining)
        recurse(v + 1, std::max(max_used, j));

      // undo
      for (auto& st : intersections_) {
        if (st.in_set[v]) {
          ++st.remaining;
          if (st.color == j) --st.current;
        }
      }
      buffer_.color_of[v] = 0;
      if (class_size_[j] <= floor_) ++deficit_;
      --class_size_[j];
      if (stopped_) return false;
    }
    return !stopped_;
  }

  const Graph& g_;
  int n_, k_, floor_, ceil_;
  bool canonical_;
  int deficit_;  // total size still needed to reach the floor in every class
  EquitableColoring buffer_;
  std::vector<int> class_size_;
  std::vector<std::uint64_t> allowed_;
  std::vector<std::vector<int>> smaller_neighbors_;
  std::vector<IntersectionState> intersections_;
  std::function<bool(const EquitableColoring&)> leaf_filter_;
  const std::function<bool(const EquitableColoring&)>* visit_ = nullptr;
  bool stopped_ = false;
};

}  // namespace

void for_each_eqcol(const Graph& g, int k,
                    const std::function<bool(const EquitableColoring&)>& visit,
                    const OracleLimits& limits) {
  check_cap(g, k, limits);
  EqcolSearch search(g, k, /*canonical=*/false);
  search.run(visit);
}

std::vector<EquitableColoring> enumerate_eqcols(const Graph& g, int k,
                                                const OracleLimits& limits) {
  std::vector<EquitableColoring> out;
  for_each_eqcol(
      g, k,
      [&](const EquitableColoring& c) {
        out.push_back(c);
        return true;
      },
      limits);
  return out;
}

bool admits_eqcol(const Graph& g, int k, const OracleLimits& limits) {
  check_cap(g, k, limits);
  bool found = false;
  EqcolSearch search(g, k, /*canonical=*/true);
  search.run([&](const EquitableColoring&) {
    found = true;
    return false;
  });
  return found;
}

std::set<int> infeasible_k_set(const Graph& g, const OracleLimits& limits) {
  std::set<int> out;
  for (int k = 1; k <= g.num_vertices(); ++k)
    if (!admits_eqcol(g, k, limits)) out.insert(k);
  return out;
}

int chi_eq_exact(const Graph& g, const OracleLimits& limits) {
  for (int k = 1; k <= g.num_vertices(); ++k)
    if (admits_eqcol(g, k, limits)) return k;
  throw ContractViolation("chi_eq_exact: no feasible k found (k = n is always feasible)");
}

bool satisfies(const Graph& g, const EquitableColoring& c, const ColoringSpec& spec) {
  int n = g.num_vertices();
  for (const auto& inter : spec.intersections) {
    int count = 0;
    for (int v : inter.set)
      if (c.color_of[v] == inter.color) ++count;
    if (count != inter.count) return false;
  }
  for (const auto& exact : spec.exact_classes) {
    std::vector<int> members = exact.members;
    std::sort(members.begin(), members.end());
    if (c.class_of(exact.color) != members) return false;
  }
  for (auto [v, j] : spec.requires_member)
    if (c.color_of[v] != j) return false;
  for (auto [v, j] : spec.forbids_member)
    if (c.color_of[v] == j) return false;
  for (const auto& row : spec.tight_rows)
    if (!is_tight(row, c, n)) return false;
  return true;
}

std::optional<EquitableColoring> exists_eqcol_matching(const Graph& g, int k,
                                                       const ColoringSpec& spec,
                                                       const OracleLimits& limits) {
  check_cap(g, k, limits);
  int n = g.num_vertices();
  auto check_color = [&](int j, const char* where) {
    if (j < 1 || j > k)
      throw ParameterError(std::string("eqcol spec: color out of range in ") + where);
  };
  for (const auto& inter : spec.intersections) check_color(inter.color, "intersection");
  for (const auto& exact : spec.exact_classes) check_color(exact.color, "exact class");
  for (auto [v, j] : spec.requires_member) check_color(j, "membership");
  for (auto [v, j] : spec.forbids_member) check_color(j, "exclusion");

  EqcolSearch search(g, k, /*canonical=*/false);
  int floor_sz = n / k, ceil_sz = (n + k - 1) / k;
  for (const auto& exact : spec.exact_classes) {
    int size = static_cast<int>(exact.members.size());
    if (size < floor_sz || size > ceil_sz) return std::nullopt;
    std::vector<char> in_class(n + 1, 0);
    for (int v : exact.members) {
      if (v < 1 || v > n) throw ParameterError("eqcol spec: vertex out of range");
      in_class[v] = 1;
    }
    for (int v = 1; v <= n; ++v) {
      if (in_class[v]) {
        if (!search.fix_color(v, exact.color)) return std::nullopt;
      } else {
        search.forbid_color(v, exact.color);
      }
    }
  }
  for (auto [v, j] : spec.requires_member) {
    if (v < 1 || v > n) throw ParameterError("eqcol spec: vertex out of range");
    if (!search.fix_color(v, j)) return std::nullopt;
  }
  for (auto [v, j] : spec.forbids_member) {
    if (v < 1 || v > n) throw ParameterError("eqcol spec: vertex out of range");
    search.forbid_color(v, j);
  }
  for (const auto& inter : spec.intersections)
    search.add_intersection(inter.color, inter.set, inter.count);
  if (!spec.tight_rows.empty()) {
    search.set_leaf_filter([&](const EquitableColoring& c) {
      for (const auto& row : spec.tight_rows)
        if (!is_tight(row, c, n)) return false;
      return true;
    });
  }

  std::optional<EquitableColoring> witness;
  search.run([&](const EquitableColoring& c) {
    witness = c;
    return false;
  });
  return witness;
}

}  // namespace ecp
