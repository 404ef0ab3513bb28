#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ecp {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Affine dimension of a point set, certified over the rationals.
struct AffineRankReport {
  long long num_points = 0;
  int affine_dim = -1;  // -1 for the empty set, 0 for a single point
  std::vector<int> basis_witness;  // affine_dim + 1 point indices
};

/// Computes the affine rank of a stream of integer points exactly. Rows are
/// point differences against the first point. A fixed-prime modular echelon
/// screens candidates (independence mod p implies independence over Q); the
/// final dimension is certified by checking every point against an exact
/// integer basis of the affine hull's orthogonal complement, so the result
/// never depends on the prime.
class AffineRankAccumulator {
 public:
  explicit AffineRankAccumulator(int dimension);

  /// Point in sparse form: (coordinate, value), coordinates strictly
  /// increasing. Values must be small integers (the 0/1 vectors here).
  void add_point(std::vector<std::pair<int, int>> point);

  AffineRankReport finalize() const;

  long long num_points() const { return static_cast<long long>(points_.size()); }

 private:
  std::vector<std::uint64_t> to_diff_row(const std::vector<std::pair<int, int>>& point) const;
  bool reduce_mod_p(std::vector<std::uint64_t>& row) const;  // true if nonzero remains
  void insert_mod_p(std::vector<std::uint64_t> row);

  int dim_;
  std::vector<std::vector<std::pair<int, int>>> points_;
  std::vector<int> basis_;                            // indices of accepted points
  std::vector<std::vector<std::uint64_t>> echelon_;   // mod-p rows, by pivot column
  std::vector<int> pivot_col_;
};

/// Exact RREF of an integer matrix given as sparse rows; returns the rank and
/// fills `nullspace` with an integer basis of the right nullspace.
int integer_row_space_nullspace(
    const std::vector<std::vector<std::pair<int, int>>>& rows, int dim,
    std::vector<std::vector<BigInt>>* nullspace);

}  // namespace ecp
