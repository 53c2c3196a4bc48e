#pragma once

// Internal helpers shared by the geometry sources. Not installed.

#include "polysym/common.hpp"

#include <vector>

namespace polysym::detail {

/// Calls fn(const std::vector<int>&) for every k-subset of {0..m-1} in
/// lexicographic order. Stops early if fn returns false.
template <typename Fn>
void for_each_combination(int m, int k, Fn&& fn) {
  if (k > m || k < 0) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(static_cast<const std::vector<int>&>(idx))) return;
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Hyperplane <normal, x> = offset with unit normal, oriented so that every
/// input point satisfies <normal, x> <= offset + eps. `members` are the
/// points within eps of it.
struct Hyperplane {
  Vector normal;
  double offset = 0.0;
  std::vector<int> members;
};

/// All supporting hyperplanes of the columns of `points` (k x m, affinely
/// spanning R^k) that pass through k affinely independent points, i.e. the
/// facets of their convex hull. Deduplicated by member set, in the order of
/// the first spanning subset found.
std::vector<Hyperplane> supporting_hyperplanes(const Matrix& points, double eps);

Matrix select_columns(const Matrix& m, const std::vector<int>& cols);

}  // namespace polysym::detail
