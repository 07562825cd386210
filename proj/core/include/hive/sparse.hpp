#pragma once

#include <span>
#include <vector>

namespace hive {

/// Symmetric positive definite matrix in compressed-row form with rows
/// sorted by column. Both triangles are stored.
struct SparseSpd {
  int dimension = 0;
  std::vector<int> row_offsets{0};
  std::vector<int> columns;
  std::vector<double> values;

  std::size_t nonzeros() const noexcept { return values.size(); }
  /// out = A * in.
  void multiply(std::span<const double> in, std::span<double> out) const;
  double at(int row, int col) const;
  std::vector<double> diagonal() const;
  double norm_inf() const;
  /// Largest |a_ij - a_ji| over stored entries.
  double asymmetry() const;
};

struct Triplet {
  int row;
  int col;
  double value;
};

/// Builds a compressed-row matrix; duplicate entries are summed in a fixed
/// order (sorted by row, column, then insertion order), so the result is
/// bit-reproducible for a given triplet sequence.
SparseSpd from_triplets(int dimension, std::vector<Triplet> triplets);

} // namespace hive
