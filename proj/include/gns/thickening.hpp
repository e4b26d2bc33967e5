#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "gns/gns.hpp"
#include "gns/point.hpp"

namespace gns {

// inserts value at 1-based position, shifting the tail right
inline Point insert_coord(const Point& p, int axis, Coord value) {
  Point q;
  q.c.reserve(p.dim() + 1);
  for (int i = 0; i < axis - 1; ++i) q.c.push_back(p.c[i]);
  q.c.push_back(value);
  for (int i = axis - 1; i < p.dim(); ++i) q.c.push_back(p.c[i]);
  return q;
}

// The k-thickening of S in N^d along axis i of N^{d+1}: k+1 translated
// copies of the hole set stacked along the new axis, everything beyond
// filled in. The embedded copy of N^d occupies the complementary
// coordinates in order. Axis is 1-based in the new ambient space.
inline Gns thicken(const Gns& S, int axis, int k) {
  if (axis < 1 || axis > S.dim() + 1)
    throw error(errc::dimension_mismatch,
                "axis " + std::to_string(axis) + " not in 1.." +
                    std::to_string(S.dim() + 1));
  if (k < 0) throw error(errc::bad_parameters, "k must be >= 0");
  std::vector<Point> holes;
  holes.reserve(S.holes().size() * (k + 1));
  for (const Point& h : S.holes())
    for (Coord j = 0; j <= k; ++j) holes.push_back(insert_coord(h, axis, j));
  return Gns::validate_hole_set(S.dim() + 1, std::move(holes));
}

// Iterated thickening along distinct axes of the final ambient space
// N^{d+t}; the result does not depend on the step order. Each step is a
// plain thicken() with the axis translated into its intermediate ambient
// position.
inline Gns thicken_iterated(const Gns& S,
                            const std::vector<std::pair<int, int>>& steps) {
  const int final_dim = S.dim() + static_cast<int>(steps.size());
  std::vector<char> used(final_dim + 1, 0);
  for (const auto& [axis, k] : steps) {
    if (axis < 1 || axis > final_dim)
      throw error(errc::dimension_mismatch,
                  "axis " + std::to_string(axis) + " not in 1.." +
                      std::to_string(final_dim));
    if (k < 0) throw error(errc::bad_parameters, "k must be >= 0");
    if (used[axis])
      throw error(errc::repeated_axis,
                  "axis " + std::to_string(axis) + " appears twice");
    used[axis] = 1;
  }
  // final positions currently present: the embedded copy of N^d
  std::vector<int> present;
  for (int i = 1; i <= final_dim; ++i)
    if (!used[i]) present.push_back(i);

  Gns cur = S;
  for (const auto& [axis, k] : steps) {
    auto it = std::lower_bound(present.begin(), present.end(), axis);
    int local = static_cast<int>(it - present.begin()) + 1;
    cur = thicken(cur, local, k);
    present.insert(it, axis);
  }
  return cur;
}

}  // namespace gns
