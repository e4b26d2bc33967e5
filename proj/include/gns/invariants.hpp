#pragma once

#include <algorithm>
#include <optional>
#include <unordered_set>
#include <vector>

#include "gns/gns.hpp"
#include "gns/order.hpp"
#include "gns/point.hpp"

namespace gns {

// ---------------------------------------------------------------------------
// minimal generators
// ---------------------------------------------------------------------------

/*
 * G(S) = S* \ (S* + S*). Every minimal generator satisfies x_i <= 2*M_i + 1:
 * if x_i >= 2(M_i+1), then x = (x - (M_i+1)e_i) + (M_i+1)e_i splits into two
 * points whose i-th coordinate exceeds M_i, so both lie in S*. Inside that
 * box we only test a proven candidate superset:
 *
 *   - unit vectors (degree one never decomposes);
 *   - H(S) + units: if x has degree >= 2 and no element of S* sits strictly
 *     below it, then x - e_i is a hole for every i in the support;
 *   - H(S) + minS, where minS is the set of <=-minimal elements of S*:
 *     otherwise pick s in S* strictly below x and a minimal s' <= s; x - s'
 *     must be a hole or x would decompose.
 *
 * minS itself is contained in the first two candidate families. Candidates
 * are processed in graded order against the generators found so far, using
 * the fact that any decomposition refines to (generator of smaller degree)
 * + (element of S*).
 */
inline std::vector<Point> minimal_generators(const Gns& S) {
  const int d = S.dim();
  std::vector<Point> units;
  for (int i = 1; i <= d; ++i) units.push_back(Point::unit(d, i));

  std::unordered_set<Point, PointHash> seen;
  std::vector<Point> pool;
  auto add = [&](const Point& p) {
    if (seen.insert(p).second) pool.push_back(p);
  };
  for (const Point& u : units) add(u);
  for (const Point& h : S.holes())
    for (const Point& u : units) add(h + u);
  std::sort(pool.begin(), pool.end(), GrlexLess{});

  // minS: elements of S* whose strict down-set avoids S*
  std::vector<Point> min_s;
  for (const Point& x : pool) {
    if (!S.in_s_star(x)) continue;
    bool minimal = true;
    for (const Point& m : min_s)
      if (m != x && leq(m, x)) {
        minimal = false;
        break;
      }
    if (minimal) min_s.push_back(x);
  }

  std::vector<Point> cands = pool;
  for (const Point& h : S.holes())
    for (const Point& m : min_s)
      if (seen.insert(h + m).second) cands.push_back(h + m);
  std::sort(cands.begin(), cands.end(), GrlexLess{});

  std::vector<Point> gens;
  for (const Point& x : cands) {
    if (!S.in_s_star(x)) continue;
    bool decomposable = false;
    for (const Point& g : gens) {
      if (g.degree() >= x.degree()) break;  // gens are graded-sorted
      if (leq(g, x) && S.in_s_star(x - g)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) gens.push_back(x);
  }
  return gens;
}

// ---------------------------------------------------------------------------
// regions C(S), N(S)
// ---------------------------------------------------------------------------

struct Regions {
  std::vector<Point> c_region;  // points below some hole, canonical order
  std::vector<Point> n_region;  // C(S) intersected with S
};

inline Regions region_sets(const Gns& S) {
  std::unordered_set<Point, PointHash> c_set;
  for (const Point& h : S.holes())
    for_each_in_box(h, [&](const Point& p) { c_set.insert(p); });
  Regions r;
  r.c_region.assign(c_set.begin(), c_set.end());
  std::sort(r.c_region.begin(), r.c_region.end(), GrlexLess{});
  for (const Point& p : r.c_region)
    if (S.in_s(p)) r.n_region.push_back(p);
  return r;
}

// |C(S)| without materializing N(S); used in hot paths
inline long long c_count(const Gns& S) {
  std::unordered_set<Point, PointHash> c_set;
  for (const Point& h : S.holes())
    for_each_in_box(h, [&](const Point& p) { c_set.insert(p); });
  return static_cast<long long>(c_set.size());
}

// ---------------------------------------------------------------------------
// fundamental holes and multiplicity
// ---------------------------------------------------------------------------

// M(S)* = holes h with C(h) and S meeting only in 0; m(S) = |M(S)*| + 1.
inline std::vector<Point> fundamental_holes(const Gns& S) {
  std::vector<Point> out;
  for (const Point& h : S.holes()) {
    bool fundamental = for_each_in_box_while(h, [&](const Point& p) {
      return p.is_zero() || !S.in_s(p);
    });
    if (fundamental) out.push_back(h);
  }
  return out;
}

struct InvariantRecord {
  long long e = 0;  // |G(S)|
  long long g = 0;  // genus |H(S)|
  long long n = 0;  // |N(S)|
  long long c = 0;  // |C(S)|
  long long m = 0;  // multiplicity |M(S)* u {0}|
};

inline InvariantRecord invariants(const Gns& S) {
  InvariantRecord r;
  r.e = static_cast<long long>(minimal_generators(S).size());
  r.g = S.genus();
  r.c = c_count(S);
  r.n = r.c - r.g;  // C(S) is the disjoint union of H(S) and N(S)
  r.m = static_cast<long long>(fundamental_holes(S).size()) + 1;
  return r;
}

// ---------------------------------------------------------------------------
// pseudo-Frobenius elements and special gaps
// ---------------------------------------------------------------------------

struct PfEh {
  bool defined = false;  // false when the hole set is empty
  std::vector<Point> pf;
  std::vector<Point> eh;
};

// PF(S) = {h in H : h + S* subset of S}, decided through the finite
// criterion h + g in S for every minimal generator g (S is generated by
// G(S) and closed under addition, so the condition propagates to sums).
// EH(S) = {h in PF : 2h in S}.
inline PfEh pseudo_frobenius_and_special_gaps(
    const Gns& S, const std::vector<Point>& gens) {
  PfEh out;
  if (S.genus() == 0) return out;
  out.defined = true;
  for (const Point& h : S.holes()) {
    bool pf = true;
    for (const Point& g : gens)
      if (S.is_hole(h + g)) {
        pf = false;
        break;
      }
    if (pf) {
      out.pf.push_back(h);
      if (!S.is_hole(2 * h)) out.eh.push_back(h);
    }
  }
  return out;
}

inline PfEh pseudo_frobenius_and_special_gaps(const Gns& S) {
  return pseudo_frobenius_and_special_gaps(S, minimal_generators(S));
}

// ---------------------------------------------------------------------------
// classification
// ---------------------------------------------------------------------------

struct Classification {
  std::optional<Point> frobenius_element;  // unique maximal hole, if any
  bool is_symmetric = false;
  bool is_pseudo_symmetric = false;
  bool is_irreducible = false;
  bool is_ordinary = false;
  bool is_monomial = false;
  bool has_minimal_multiplicity = false;
  std::vector<Point> pf;
  std::vector<Point> eh;
  std::vector<int> axes;  // 1-based coordinates untouched by holes
  int span_rank = 0;
};

// coordinates with h^(k) = 0 across the hole set (every coordinate when
// there are no holes)
inline std::vector<int> axes_of(const Gns& S) {
  std::vector<int> axes;
  for (int i = 0; i < S.dim(); ++i)
    if (S.hole_max()[i] <= 0) axes.push_back(i + 1);
  return axes;
}

inline std::optional<Point> frobenius_element(const Gns& S) {
  std::optional<Point> fb;
  int maximal = 0;
  for (const Point& h : S.holes()) {
    bool is_max = true;
    for (const Point& k : S.holes())
      if (k != h && leq(h, k)) {
        is_max = false;
        break;
      }
    if (is_max) {
      ++maximal;
      fb = h;
    }
  }
  if (maximal != 1) return std::nullopt;
  return fb;
}

inline Classification classify(const Gns& S) {
  Classification out;
  out.axes = axes_of(S);
  out.span_rank = S.dim() - static_cast<int>(out.axes.size());
  if (S.genus() == 0) return out;  // all flags false, no Frobenius element

  InvariantRecord inv = invariants(S);
  PfEh pf = pseudo_frobenius_and_special_gaps(S);
  out.pf = pf.pf;
  out.eh = pf.eh;
  out.frobenius_element = frobenius_element(S);
  out.is_irreducible = out.eh.size() == 1;
  out.is_monomial = inv.n == 1;
  out.has_minimal_multiplicity = inv.c == inv.m * inv.n;
  if (out.frobenius_element) {
    long long box = 1;
    for (Coord x : out.frobenius_element->c) box *= x + 1;
    out.is_symmetric = 2 * inv.g == box;
    out.is_pseudo_symmetric = 2 * inv.g - 1 == box;
    out.is_ordinary = inv.g + 1 == box;  // holes fill C(f) \ {0}
  }
  return out;
}

// ---------------------------------------------------------------------------
// canonical decomposition x = m + s
// ---------------------------------------------------------------------------

struct Decomposition {
  Point m;  // in M(S) = fundamental holes u {0}
  Point s;  // order-max element of S below x
};

inline Decomposition canonical_decompose(const Gns& S, const Point& x,
                                         const MonomialOrder& order) {
  if (x.dim() != S.dim())
    throw error(errc::dimension_mismatch, "point " + x.str());
  for (Coord v : x.c)
    if (v < 0) throw error(errc::dimension_mismatch, "point " + x.str());
  Decomposition d;
  d.s = Point::zero(S.dim());
  for_each_in_box(x, [&](const Point& t) {
    if (S.in_s(t) && order.less(d.s, t)) d.s = t;
  });
  d.m = x - d.s;
  return d;
}

// ---------------------------------------------------------------------------
// axes and restriction
// ---------------------------------------------------------------------------

struct Restriction {
  std::vector<int> axes;  // 1-based
  int rank = 0;           // d - |axes|
  std::optional<Gns> restricted;  // undefined when the hole set is empty
};

// Axes(S) = coordinates zero on every hole; the restriction S-bar is the
// GNS of N^r obtained by deleting those coordinates from the holes.
inline Restriction axes_and_restriction(const Gns& S) {
  Restriction r;
  r.axes = axes_of(S);
  r.rank = S.dim() - static_cast<int>(r.axes.size());
  if (S.genus() == 0) return r;  // axes = everything, restriction undefined
  std::vector<char> drop(S.dim(), 0);
  for (int a : r.axes) drop[a - 1] = 1;
  std::vector<Point> holes;
  for (const Point& h : S.holes()) {
    Point p;
    for (int i = 0; i < S.dim(); ++i)
      if (!drop[i]) p.c.push_back(h.c[i]);
    holes.push_back(std::move(p));
  }
  r.restricted = Gns::validate_hole_set(r.rank, std::move(holes));
  return r;
}

}  // namespace gns
