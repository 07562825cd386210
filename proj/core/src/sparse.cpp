#include "hive/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hive {

void SparseSpd::multiply(std::span<const double> in, std::span<double> out) const {
  for (int r = 0; r < dimension; ++r) {
    double sum = 0.0;
    for (int k = row_offsets[r]; k < row_offsets[r + 1]; ++k) {
      sum += values[static_cast<std::size_t>(k)] * in[static_cast<std::size_t>(columns[k])];
    }
    out[static_cast<std::size_t>(r)] = sum;
  }
}

double SparseSpd::at(int row, int col) const {
  const auto first = columns.begin() + row_offsets[row];
  const auto last = columns.begin() + row_offsets[row + 1];
  const auto it = std::lower_bound(first, last, col);
  if (it == last || *it != col) return 0.0;
  return values[static_cast<std::size_t>(it - columns.begin())];
}

std::vector<double> SparseSpd::diagonal() const {
  std::vector<double> d(static_cast<std::size_t>(dimension));
  for (int r = 0; r < dimension; ++r) d[static_cast<std::size_t>(r)] = at(r, r);
  return d;
}

double SparseSpd::norm_inf() const {
  double best = 0.0;
  for (int r = 0; r < dimension; ++r) {
    double sum = 0.0;
    for (int k = row_offsets[r]; k < row_offsets[r + 1]; ++k) sum += std::abs(values[k]);
    best = std::max(best, sum);
  }
  return best;
}

double SparseSpd::asymmetry() const {
  double worst = 0.0;
  for (int r = 0; r < dimension; ++r) {
    for (int k = row_offsets[r]; k < row_offsets[r + 1]; ++k) {
      worst = std::max(worst, std::abs(values[k] - at(columns[k], r)));
    }
  }
  return worst;
}

SparseSpd from_triplets(int dimension, std::vector<Triplet> triplets) {
  std::stable_sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  SparseSpd m;
  m.dimension = dimension;
  m.row_offsets.assign(static_cast<std::size_t>(dimension) + 1, 0);
  for (std::size_t k = 0; k < triplets.size();) {
    const Triplet& t = triplets[k];
    double sum = 0.0;
    std::size_t e = k;
    while (e < triplets.size() && triplets[e].row == t.row && triplets[e].col == t.col) {
      sum += triplets[e].value;
      ++e;
    }
    m.columns.push_back(t.col);
    m.values.push_back(sum);
    ++m.row_offsets[static_cast<std::size_t>(t.row) + 1];
    k = e;
  }
  std::partial_sum(m.row_offsets.begin(), m.row_offsets.end(), m.row_offsets.begin());
  return m;
}

} // namespace hive
