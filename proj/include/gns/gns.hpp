#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gns/error.hpp"
#include "gns/point.hpp"

namespace gns {

// A generalized numerical semigroup S = N^d \ H, represented by its finite
// hole set H. Instances are immutable once validated and safe to share
// across threads. Holes are kept in canonical graded-lex order; equality of
// two Gns is hole-set equality.
//
// Membership is O(d): a point is a hole only if it fits under the
// per-coordinate hole maxima, in which case either a dense grid over the
// bounding box or a hash set answers the query (the grid is used while the
// box stays small).
class Gns {
 public:
  // Validates and canonicalizes a hole set:
  //  * every point must have length dim and non-negative entries,
  //  * 0 must not be a hole,
  //  * the complement must be closed under addition: every splitting
  //    h = a + b of a hole into nonzero parts has a hole part.
  // Throws error(errc::dimension_mismatch | zero_is_hole | not_closed).
  static Gns validate_hole_set(int dim, std::vector<Point> holes) {
    Gns s = prevalidated(dim, std::move(holes));
    for (const Point& h : s.holes_) {
      bool bad = false;
      Point part;
      for_each_in_box_while(h, [&](const Point& a) {
        if (a.is_zero() || a == h) return true;
        if (!s.is_hole(a) && !s.is_hole(h - a)) {
          bad = true;
          part = a;
          return false;
        }
        return true;
      });
      if (bad)
        throw error(errc::not_closed,
                    "hole " + h.str() + " = " + part.str() + " + " +
                        (h - part).str() + " with both parts in S",
                    h, part);
    }
    return s;
  }

  static Gns full_space(int dim) { return validate_hole_set(dim, {}); }

  int dim() const { return dim_; }
  const std::vector<Point>& holes() const { return holes_; }
  long long genus() const { return static_cast<long long>(holes_.size()); }

  // M_i = max over holes of coordinate i, or -1 if no hole touches axis i.
  const std::vector<Coord>& hole_max() const { return max_; }

  bool is_hole(const Point& p) const {
    for (int i = 0; i < dim_; ++i)
      if (p.c[i] < 0 || p.c[i] > max_[i]) return false;
    if (use_grid_) {
      long long idx = 0;
      for (int i = 0; i < dim_; ++i) idx += stride_[i] * p.c[i];
      return grid_[static_cast<std::size_t>(idx)] != 0;
    }
    return hole_lookup_.count(p) != 0;
  }

  // x in S, i.e. x is not a hole. Throws on dimension mismatch.
  bool contains(const Point& x) const {
    if (x.dim() != dim_)
      throw error(errc::dimension_mismatch,
                  "point " + x.str() + " does not have length " +
                      std::to_string(dim_));
    return !is_hole(x);
  }

  // membership without the dimension guard, for hot loops
  bool in_s(const Point& x) const { return !is_hole(x); }
  bool in_s_star(const Point& x) const { return !x.is_zero() && !is_hole(x); }

  friend bool operator==(const Gns& a, const Gns& b) {
    return a.dim_ == b.dim_ && a.holes_ == b.holes_;
  }
  friend bool operator!=(const Gns& a, const Gns& b) { return !(a == b); }

 private:
  // canonicalization, basic input checks, membership structures
  static Gns prevalidated(int dim, std::vector<Point> holes) {
    if (dim < 1) throw error(errc::dimension_mismatch, "dim must be >= 1");
    for (const Point& h : holes) {
      if (h.dim() != dim)
        throw error(errc::dimension_mismatch,
                    "hole " + h.str() + " does not have length " +
                        std::to_string(dim));
      for (Coord x : h.c)
        if (x < 0)
          throw error(errc::dimension_mismatch,
                      "hole " + h.str() + " has a negative entry");
      if (h.is_zero()) throw error(errc::zero_is_hole, "0 is never a hole");
    }
    std::sort(holes.begin(), holes.end(), GrlexLess{});
    holes.erase(std::unique(holes.begin(), holes.end()), holes.end());
    return Gns(dim, std::move(holes));
  }

  Gns(int dim, std::vector<Point> holes)
      : dim_(dim), holes_(std::move(holes)), max_(dim, -1) {
    for (const Point& h : holes_)
      for (int i = 0; i < dim_; ++i) max_[i] = std::max(max_[i], h.c[i]);
    long long cells = 1;
    for (int i = 0; i < dim_; ++i) {
      cells *= max_[i] + 1;
      if (cells > kGridLimit) break;
    }
    use_grid_ = !holes_.empty() && cells > 0 && cells <= kGridLimit;
    if (use_grid_) {
      stride_.assign(dim_, 1);
      for (int i = dim_ - 2; i >= 0; --i)
        stride_[i] = stride_[i + 1] * (max_[i + 1] + 1);
      grid_.assign(static_cast<std::size_t>(cells), 0);
      for (const Point& h : holes_) {
        long long idx = 0;
        for (int i = 0; i < dim_; ++i) idx += stride_[i] * h.c[i];
        grid_[static_cast<std::size_t>(idx)] = 1;
      }
    } else {
      hole_lookup_.reserve(holes_.size() * 2);
      for (const Point& h : holes_) hole_lookup_.insert(h);
    }
  }

  static constexpr long long kGridLimit = 1LL << 22;

  int dim_;
  std::vector<Point> holes_;
  std::vector<Coord> max_;
  bool use_grid_ = false;
  std::vector<long long> stride_;
  std::vector<std::uint8_t> grid_;
  std::unordered_set<Point, PointHash> hole_lookup_;
};

}  // namespace gns
