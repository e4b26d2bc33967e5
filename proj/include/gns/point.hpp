#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

namespace gns {

using Coord = int;

// A lattice point of N^d. Componentwise order and addition only; total
// (monomial) orders live in order.hpp. The all-(-1) sentinel used as the
// Frobenius element of N^d is also representable.
struct Point {
  std::vector<Coord> c;

  Point() = default;
  explicit Point(std::vector<Coord> coords) : c(std::move(coords)) {}
  Point(std::initializer_list<Coord> coords) : c(coords) {}

  static Point zero(int dim) { return Point(std::vector<Coord>(dim, 0)); }
  static Point unit(int dim, int axis) {  // axis is 1-based
    Point p = zero(dim);
    p.c[axis - 1] = 1;
    return p;
  }
  static Point sentinel(int dim) { return Point(std::vector<Coord>(dim, -1)); }

  int dim() const { return static_cast<int>(c.size()); }
  Coord operator[](int i) const { return c[i]; }
  Coord& operator[](int i) { return c[i]; }

  long long degree() const {
    return std::accumulate(c.begin(), c.end(), 0LL);
  }
  bool is_zero() const {
    for (Coord x : c)
      if (x != 0) return false;
    return true;
  }

  friend Point operator+(const Point& a, const Point& b) {
    Point r = a;
    for (int i = 0; i < b.dim(); ++i) r.c[i] += b.c[i];
    return r;
  }
  // caller guarantees b <= a componentwise
  friend Point operator-(const Point& a, const Point& b) {
    Point r = a;
    for (int i = 0; i < b.dim(); ++i) r.c[i] -= b.c[i];
    return r;
  }
  friend Point operator*(Coord k, const Point& a) {
    Point r = a;
    for (Coord& x : r.c) x *= k;
    return r;
  }
  friend bool operator==(const Point& a, const Point& b) { return a.c == b.c; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < dim(); ++i) {
      if (i) s += ",";
      s += std::to_string(c[i]);
    }
    return s + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const Point& p) {
    return os << p.str();
  }
};

// natural partial order on N^d
inline bool leq(const Point& a, const Point& b) {
  for (int i = 0; i < a.dim(); ++i)
    if (a.c[i] > b.c[i]) return false;
  return true;
}

struct PointHash {
  std::size_t operator()(const Point& p) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (Coord x : p.c) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

// graded-lexicographic with variable priority x1 > x2 > ... > xd; this is
// the canonical order used for hole-set serialization and tree traversal.
inline bool grlex_less(const Point& a, const Point& b) {
  long long da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (int i = 0; i < a.dim(); ++i)
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
  return false;
}

struct GrlexLess {
  bool operator()(const Point& a, const Point& b) const {
    return grlex_less(a, b);
  }
};

// Visits every point of the box [0,hi[0]] x ... x [0,hi[d-1]] once.
// F: void(const Point&). Iteration order is lexicographic (last axis
// fastest), so any point precedes everything componentwise above it.
template <typename F>
void for_each_in_box(const Point& hi, F&& f) {
  const int d = hi.dim();
  for (int i = 0; i < d; ++i)
    if (hi.c[i] < 0) return;
  Point cur = Point::zero(d);
  while (true) {
    f(static_cast<const Point&>(cur));
    int i = d - 1;
    while (i >= 0 && cur.c[i] == hi.c[i]) {
      cur.c[i] = 0;
      --i;
    }
    if (i < 0) return;
    ++cur.c[i];
  }
}

// Early-exit variant: F returns false to stop. Returns false if stopped.
template <typename F>
bool for_each_in_box_while(const Point& hi, F&& f) {
  const int d = hi.dim();
  for (int i = 0; i < d; ++i)
    if (hi.c[i] < 0) return true;
  Point cur = Point::zero(d);
  while (true) {
    if (!f(static_cast<const Point&>(cur))) return false;
    int i = d - 1;
    while (i >= 0 && cur.c[i] == hi.c[i]) {
      cur.c[i] = 0;
      --i;
    }
    if (i < 0) return true;
    ++cur.c[i];
  }
}

// Visits every point of N^d with the given total degree, in lexicographic
// (x1-major) order.
template <typename F>
void for_each_of_degree(int dim, long long degree, F&& f) {
  Point cur = Point::zero(dim);
  auto rec = [&](auto&& self, int axis, long long rest) -> void {
    if (axis == dim - 1) {
      cur.c[axis] = static_cast<Coord>(rest);
      f(static_cast<const Point&>(cur));
      return;
    }
    for (long long v = 0; v <= rest; ++v) {
      cur.c[axis] = static_cast<Coord>(v);
      self(self, axis + 1, rest - v);
    }
  };
  if (dim >= 1 && degree >= 0) rec(rec, 0, degree);
}

}  // namespace gns
