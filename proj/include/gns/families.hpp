#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "gns/gns.hpp"
#include "gns/invariants.hpp"
#include "gns/point.hpp"

namespace gns {

// S = {0} u (N^d \ C(f)): the ordinary GNS below f. Satisfies n(S) = 1 and
// d c(S) = e(S); f = 0 degenerates to N^d.
inline Gns make_ordinary(const Point& f) {
  if (f.dim() < 1) throw error(errc::bad_parameters, "empty point");
  for (Coord x : f.c)
    if (x < 0) throw error(errc::bad_parameters, "negative entry in f");
  std::vector<Point> holes;
  for_each_in_box(f, [&](const Point& p) {
    if (!p.is_zero()) holes.push_back(p);
  });
  return Gns::validate_hole_set(f.dim(), std::move(holes));
}

// H(S) = {e_i, e_i + e_k, ..., e_i + (h-1) e_k}: the equality family with
// e = 2d, n = h, c = 2h. The construction is by hole set; the generator
// list this family is known to have is cross-checked.
inline Gns make_family_axis(int d, int i, int k, int h) {
  if (d < 2 || i < 1 || i > d || k < 1 || k > d || i == k || h <= 1)
    throw error(errc::bad_parameters,
                "need d >= 2, distinct axes i, k in 1..d, h > 1");
  std::vector<Point> holes;
  for (int t = 0; t < h; ++t) {
    Point p = Point::unit(d, i);
    p.c[k - 1] = t;
    holes.push_back(std::move(p));
  }
  Gns s = Gns::validate_hole_set(d, std::move(holes));

  std::vector<Point> expected;
  for (int j = 1; j <= d; ++j)
    if (j != i) expected.push_back(Point::unit(d, j));
  expected.push_back(2 * Point::unit(d, i));
  expected.push_back(3 * Point::unit(d, i));
  {
    Point p = Point::unit(d, i);
    p.c[k - 1] = h;
    expected.push_back(std::move(p));
  }
  for (int j = 1; j <= d; ++j)
    if (j != i && j != k)
      expected.push_back(Point::unit(d, i) + Point::unit(d, j));
  std::sort(expected.begin(), expected.end(), GrlexLess{});
  if (minimal_generators(s) != expected)
    throw std::logic_error("axis family generators disagree with theory");
  return s;
}

// S = N^d \ {x : x_j not in Q, x_i <= q_i for i != j}: a numerical
// semigroup Q thickened along every other axis by the box bounds q.
// q lists the bounds for the coordinates other than j in ascending order.
inline Gns make_family_box(const std::vector<int>& q_gaps, int j,
                           const std::vector<int>& q) {
  const int d = static_cast<int>(q.size()) + 1;
  if (j < 1 || j > d) throw error(errc::bad_parameters, "j out of range");
  for (int b : q)
    if (b < 0) throw error(errc::bad_parameters, "negative box bound");
  std::vector<Point> gap_points;
  for (int t : q_gaps) gap_points.push_back(Point{t});
  try {
    Gns::validate_hole_set(1, gap_points);
  } catch (const error& e) {
    throw error(errc::invalid_numerical_semigroup, e.what());
  }

  std::vector<Point> holes;
  Point box(std::vector<Coord>(q.begin(), q.end()));
  for (int t : q_gaps)
    for_each_in_box(box, [&](const Point& p) {
      Point full;
      int pos = 0;
      for (int axis = 1; axis <= d; ++axis)
        full.c.push_back(axis == j ? t : p.c[pos++]);
      holes.push_back(std::move(full));
    });
  return Gns::validate_hole_set(d, std::move(holes));
}

/*
 * The e(S) = 2d family: S = <A> with
 *   A = {e_j : j != i} u {a e_i, b e_i} u {e_i + h_j e_j : j != i},
 * 1 < a < b coprime. The hole set is computed by exact membership DP over
 * a box that provably contains every hole:
 *   - x_i >= F+1 (F = ab-a-b) puts x in S, since x_i e_i lies in <a,b> e_i
 *     and the remaining coordinates are unit-generated;
 *   - x_i = 0 likewise;
 *   - x_j >= x_i h_j lets x absorb x_i copies of e_i + h_j e_j, so holes
 *     satisfy x_j < x_i h_j <= F h_j.
 * For a = 2 the hole set matches the closed form {t e_i + sum l_j e_j :
 * t a gap of <2,b>, l_j < h_j} and S is symmetric; for a > 2 the semigroup
 * has incomparable maximal holes (both verified in tests).
 */
inline Gns make_family_e2d(int d, int i, int a, int b,
                           const std::vector<int>& h) {
  if (d < 2 || i < 1 || i > d)
    throw error(errc::bad_parameters, "need d >= 2 and i in 1..d");
  if (!(1 < a && a < b && std::gcd(a, b) == 1))
    throw error(errc::bad_parameters, "need 1 < a < b with gcd(a,b) = 1");
  if (static_cast<int>(h.size()) != d - 1)
    throw error(errc::bad_parameters, "h must list d-1 entries");
  for (int x : h)
    if (x < 1) throw error(errc::bad_parameters, "entries of h must be >= 1");

  std::vector<Point> gens;
  for (int j = 1, pos = 0; j <= d; ++j) {
    if (j == i) continue;
    gens.push_back(Point::unit(d, j));
    Point mixed = Point::unit(d, i);
    mixed.c[j - 1] = h[pos++];
    gens.push_back(std::move(mixed));
  }
  gens.push_back(a * Point::unit(d, i));
  gens.push_back(b * Point::unit(d, i));

  const int frob = a * b - a - b;
  Point hi = Point::zero(d);
  hi.c[i - 1] = frob + 1;
  for (int j = 1, pos = 0; j <= d; ++j)
    if (j != i) hi.c[j - 1] = frob * h[pos++];

  std::vector<long long> stride(d, 1);
  for (int t = d - 2; t >= 0; --t) stride[t] = stride[t + 1] * (hi.c[t + 1] + 1);
  std::vector<char> member(static_cast<std::size_t>(stride[0] * (hi.c[0] + 1)), 0);
  auto index = [&](const Point& p) {
    long long idx = 0;
    for (int t = 0; t < d; ++t) idx += stride[t] * p.c[t];
    return static_cast<std::size_t>(idx);
  };
  for_each_in_box(hi, [&](const Point& p) {
    if (p.is_zero()) {
      member[index(p)] = 1;
      return;
    }
    for (const Point& g : gens)
      if (leq(g, p) && member[index(p - g)]) {
        member[index(p)] = 1;
        return;
      }
  });
  std::vector<Point> holes;
  for_each_in_box(hi, [&](const Point& p) {
    if (!member[index(p)]) holes.push_back(p);
  });
  return Gns::validate_hole_set(d, std::move(holes));
}

}  // namespace gns
