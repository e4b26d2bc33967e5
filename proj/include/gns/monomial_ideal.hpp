#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "gns/error.hpp"
#include "gns/gns.hpp"
#include "gns/invariants.hpp"
#include "gns/point.hpp"
#include "gns/wilf.hpp"

namespace gns {

// A monomial ideal in d variables, stored as its minimal generating
// exponent vectors (an antichain under divisibility, graded-lex sorted).
// The coefficient field plays no role. The unit ideal (whole ring) is
// represented by the single zero vector.
class MonomialIdeal {
 public:
  MonomialIdeal(int vars, std::vector<Point> generators) : vars_(vars) {
    if (vars < 1) throw error(errc::dimension_mismatch, "vars must be >= 1");
    for (const Point& g : generators) {
      if (g.dim() != vars)
        throw error(errc::dimension_mismatch,
                    "generator " + g.str() + " does not have length " +
                        std::to_string(vars));
      for (Coord x : g.c)
        if (x < 0)
          throw error(errc::dimension_mismatch,
                      "generator " + g.str() + " has a negative entry");
    }
    gens_ = minimalize(std::move(generators));
  }

  static MonomialIdeal unit(int vars) {
    return MonomialIdeal(vars, {Point::zero(vars)});
  }

  int vars() const { return vars_; }
  const std::vector<Point>& gens() const { return gens_; }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_zero(); }

  // x^m lies in the ideal iff some generator divides it
  bool contains_monomial(const Point& m) const {
    for (const Point& g : gens_)
      if (leq(g, m)) return true;
    return false;
  }

  // every variable must admit a pure-power generator
  bool is_zero_dimensional() const {
    if (is_unit()) return true;
    std::vector<char> covered(vars_, 0);
    for (const Point& g : gens_) {
      int support = -1;
      for (int i = 0; i < vars_; ++i)
        if (g.c[i] > 0) {
          if (support >= 0) {
            support = -2;
            break;
          }
          support = i;
        }
      if (support >= 0) covered[support] = 1;
    }
    for (char c : covered)
      if (!c) return false;
    return true;
  }

  // a_i = smallest exponent with x_i^{a_i} in the ideal (0 for the unit
  // ideal); defined only for zero-dimensional ideals.
  std::vector<Coord> pure_power_exponents() const {
    if (!is_zero_dimensional())
      throw error(errc::not_zero_dimensional,
                  "ideal has no pure power in some variable");
    std::vector<Coord> a(vars_, 0);
    if (is_unit()) return a;
    for (int i = 0; i < vars_; ++i) {
      for (const Point& g : gens_) {
        bool pure = g.c[i] > 0;
        for (int j = 0; pure && j < vars_; ++j)
          if (j != i && g.c[j] > 0) pure = false;
        if (pure) a[i] = g.c[i];
      }
    }
    return a;
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.vars_ == b.vars_ && a.gens_ == b.gens_;
  }
  friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) {
    return !(a == b);
  }

 private:
  static std::vector<Point> minimalize(std::vector<Point> gens) {
    std::sort(gens.begin(), gens.end(), GrlexLess{});
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Point> out;
    for (const Point& g : gens) {
      bool dominated = false;
      for (const Point& kept : out)
        if (leq(kept, g)) {
          dominated = true;
          break;
        }
      if (!dominated) out.push_back(g);
    }
    return out;
  }

  int vars_;
  std::vector<Point> gens_;
};

// ---------------------------------------------------------------------------
// staircase enumeration
// ---------------------------------------------------------------------------

// Exponent vectors of the monomials outside I; finite exactly when I is
// zero-dimensional (they live in the box prod [0, a_i - 1]).
inline std::vector<Point> standard_monomials(const MonomialIdeal& I) {
  std::vector<Coord> a = I.pure_power_exponents();
  std::vector<Point> out;
  Point hi(a);
  for (Coord& x : hi.c) --x;
  for_each_in_box(hi, [&](const Point& p) {
    if (!I.contains_monomial(p)) out.push_back(p);
  });
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

// l(R/I); the unit ideal has length 0
inline long long length(const MonomialIdeal& I) {
  std::vector<Coord> a = I.pure_power_exponents();
  long long count = 0;
  Point hi(a);
  for (Coord& x : hi.c) --x;
  for_each_in_box(hi, [&](const Point& p) {
    if (!I.contains_monomial(p)) ++count;
  });
  return count;
}

// ---------------------------------------------------------------------------
// ideal arithmetic
// ---------------------------------------------------------------------------

inline MonomialIdeal ideal_product(const MonomialIdeal& A,
                                   const MonomialIdeal& B) {
  if (A.vars() != B.vars())
    throw error(errc::dimension_mismatch, "ideals in different rings");
  std::vector<Point> gens;
  gens.reserve(A.gens().size() * B.gens().size());
  for (const Point& a : A.gens())
    for (const Point& b : B.gens()) gens.push_back(a + b);
  return MonomialIdeal(A.vars(), std::move(gens));
}

inline MonomialIdeal ideal_square(const MonomialIdeal& I) {
  return ideal_product(I, I);
}

// I : x_i, by decrementing the i-th exponent of each generator (floor 0);
// var is 1-based. May come out as the unit ideal.
inline MonomialIdeal colon_by_variable(const MonomialIdeal& I, int var) {
  if (var < 1 || var > I.vars())
    throw error(errc::dimension_mismatch, "variable index out of range");
  std::vector<Point> gens = I.gens();
  for (Point& g : gens)
    if (g.c[var - 1] > 0) --g.c[var - 1];
  return MonomialIdeal(I.vars(), std::move(gens));
}

// (I + <x_i>)/<x_i>: keep generators free of x_i, drop the coordinate
inline MonomialIdeal eliminate_variable(const MonomialIdeal& I, int var) {
  if (var < 1 || var > I.vars())
    throw error(errc::dimension_mismatch, "variable index out of range");
  if (I.vars() == 1)
    throw error(errc::bad_parameters, "cannot eliminate the last variable");
  std::vector<Point> gens;
  for (const Point& g : I.gens()) {
    if (g.c[var - 1] != 0) continue;
    Point p;
    for (int i = 0; i < I.vars(); ++i)
      if (i != var - 1) p.c.push_back(g.c[i]);
    gens.push_back(std::move(p));
  }
  return MonomialIdeal(I.vars() - 1, std::move(gens));
}

inline bool ideal_contains(const MonomialIdeal& outer,
                           const MonomialIdeal& inner) {
  for (const Point& g : inner.gens())
    if (!outer.contains_monomial(g)) return false;
  return true;
}

// l(A/B) for B subset of A with B zero-dimensional; counts monomials in A
// but not in B. Equals l(R/B) - l(R/A) since the staircases nest.
inline long long length_of_quotient(const MonomialIdeal& A,
                                    const MonomialIdeal& B) {
  if (A.vars() != B.vars())
    throw error(errc::dimension_mismatch, "ideals in different rings");
  if (!B.is_zero_dimensional())
    throw error(errc::not_zero_dimensional, "quotient divisor ideal");
  if (!ideal_contains(A, B))
    throw error(errc::not_contained, "B is not contained in A");
  return length(B) - length(A);
}

// ---------------------------------------------------------------------------
// complete intersections and reductions
// ---------------------------------------------------------------------------

struct CiAnalysis {
  bool is_ci = false;
  MonomialIdeal j;  // <x_i^{a_i}> for the minimal pure powers a_i
};

inline CiAnalysis ci_analysis(const MonomialIdeal& I) {
  std::vector<Coord> a = I.pure_power_exponents();
  std::vector<Point> gens;
  for (int i = 0; i < I.vars(); ++i) {
    Point p = Point::zero(I.vars());
    p.c[i] = a[i];
    gens.push_back(std::move(p));
  }
  CiAnalysis out{false, MonomialIdeal(I.vars(), std::move(gens))};
  out.is_ci = out.j == I;
  return out;
}

// Smallest k <= cap with I^{k+1} = J I^k, or nullopt. Ideal equality is
// minimal-generator-set equality, so the loop is deterministic.
inline std::optional<int> reduction_number(const MonomialIdeal& I,
                                           const MonomialIdeal& J, int cap) {
  if (!ideal_contains(I, J))
    throw error(errc::not_contained, "J is not contained in I");
  if (!I.is_zero_dimensional() || !J.is_zero_dimensional())
    throw error(errc::not_zero_dimensional, "reduction_number arguments");
  MonomialIdeal ik = MonomialIdeal::unit(I.vars());  // I^0
  for (int k = 0; k <= cap; ++k) {
    if (ideal_product(ik, I) == ideal_product(ik, J)) return k;
    ik = ideal_product(ik, I);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// conjecture checks from the translated statistics
// ---------------------------------------------------------------------------

// d l(R/I) <= l(I/I^2). The report keeps the e(S) n(S) >= d c(S) shape:
// lhs = l(I/I^2), rhs = d l(R/I); equality happens exactly on complete
// intersections.
inline WilfReport verify_monomial_wilf(const MonomialIdeal& I) {
  long long len = length(I);
  long long len2 = length(ideal_square(I));
  return make_report(len2 - len, I.vars() * len, "monomial-wilf");
}

struct ColonReport {
  long long lhs = 0;  // l(Rbar/Ibar)
  long long rhs = 0;  // l((I:y)^2 / (I^2:y))
  bool holds = false;
  bool colon_product_identity = false;  // I^2 : y == I (I : y)
};

// l(Rbar/Ibar) <= l((I:y)^2/(I^2:y)) with y = x_var, plus the identity
// I^2 : y = I (I : y) used in its proof.
inline ColonReport verify_colon_inequality(const MonomialIdeal& I, int var) {
  if (!I.is_zero_dimensional())
    throw error(errc::not_zero_dimensional, "verify_colon_inequality");
  ColonReport out;
  MonomialIdeal iy = colon_by_variable(I, var);
  MonomialIdeal i2y = colon_by_variable(ideal_square(I), var);
  out.colon_product_identity = i2y == ideal_product(I, iy);
  out.lhs = I.vars() == 1 ? (I.is_unit() ? 0 : 1)
                          : length(eliminate_variable(I, var));
  out.rhs = length_of_quotient(ideal_square(iy), i2y);
  out.holds = out.lhs <= out.rhs;
  return out;
}

struct PropIjReport {
  long long wilf_slack = 0;    // l(I/I^2) - d l(R/I)
  long long length_defect = 0; // l(R/J) - l(R/I)
  bool equal = false;
};

// When I^2 = I J for the pure-power reduction J, the Wilf slack equals
// l(R/J) - l(R/I). Throws HypothesisFailed when I^2 != I J.
inline PropIjReport verify_prop_ij(const MonomialIdeal& I) {
  CiAnalysis ci = ci_analysis(I);
  std::optional<int> r = reduction_number(I, ci.j, 1);
  if (!r)
    throw error(errc::hypothesis_failed, "I^2 != I J");
  PropIjReport out;
  long long len = length(I);
  out.wilf_slack = length(ideal_square(I)) - len - I.vars() * len;
  out.length_defect = length(ci.j) - len;
  out.equal = out.wilf_slack == out.length_defect;
  return out;
}

// ---------------------------------------------------------------------------
// translation between monomial semigroups and ideals
// ---------------------------------------------------------------------------

// S with n(S) = 1 corresponds to the ideal whose monomials are exactly S*;
// its minimal generators are the divisibility-minimal elements of S*,
// i.e. G(S) minimalized.
inline MonomialIdeal gns_to_ideal(const Gns& S) {
  InvariantRecord inv = invariants(S);
  if (inv.n != 1)
    throw error(errc::not_monomial_semigroup,
                "n(S) = " + std::to_string(inv.n) + ", expected 1");
  return MonomialIdeal(S.dim(), minimal_generators(S));
}

// Holes are the nonzero standard monomials; round-trips with gns_to_ideal.
inline Gns ideal_to_gns(const MonomialIdeal& I) {
  if (!I.is_zero_dimensional())
    throw error(errc::not_zero_dimensional, "ideal_to_gns");
  if (I.is_unit())
    throw error(errc::not_zero_dimensional,
                "the unit ideal corresponds to no semigroup");
  std::vector<Point> holes;
  for (const Point& p : standard_monomials(I))
    if (!p.is_zero()) holes.push_back(p);
  return Gns::validate_hole_set(I.vars(), std::move(holes));
}

}  // namespace gns
