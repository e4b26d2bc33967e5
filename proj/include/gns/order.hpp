#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "gns/error.hpp"
#include "gns/point.hpp"

namespace gns {

enum class OrderKind { grlex, grevlex };

// A graded monomial order on N^d: total degree first, ties broken
// lexicographically (grlex) or reverse-lexicographically (grevlex) with
// respect to a variable priority permutation. Graded orders refine the
// natural partial order and every point has a finite down-set, which is
// what the order-Frobenius machinery needs.
struct MonomialOrder {
  OrderKind kind = OrderKind::grlex;
  std::vector<int> priority;  // permutation of 1..d

  static MonomialOrder grlex_default(int dim) {
    MonomialOrder o;
    o.priority.resize(dim);
    std::iota(o.priority.begin(), o.priority.end(), 1);
    return o;
  }
  static MonomialOrder grevlex_default(int dim) {
    MonomialOrder o = grlex_default(dim);
    o.kind = OrderKind::grevlex;
    return o;
  }

  int dim() const { return static_cast<int>(priority.size()); }

  bool less(const Point& a, const Point& b) const {
    long long da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    if (kind == OrderKind::grlex) {
      for (int p : priority) {
        Coord x = a.c[p - 1], y = b.c[p - 1];
        if (x != y) return x < y;
      }
      return false;
    }
    // grevlex: among equal degrees, a precedes b when the last differing
    // coordinate (in priority order) of a is the larger one.
    for (auto it = priority.rbegin(); it != priority.rend(); ++it) {
      Coord x = a.c[*it - 1], y = b.c[*it - 1];
      if (x != y) return x > y;
    }
    return false;
  }

  bool greater(const Point& a, const Point& b) const { return less(b, a); }

  std::string name() const {
    std::string s = kind == OrderKind::grlex ? "grlex[" : "grevlex[";
    for (std::size_t i = 0; i < priority.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(priority[i]);
    }
    return s + "]";
  }
};

// All priority permutations of the given kind; used by sweeps that check
// the Extended Wilf Conjecture against every graded-lex order.
inline std::vector<MonomialOrder> all_priority_orders(int dim, OrderKind kind) {
  std::vector<int> perm(dim);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<MonomialOrder> out;
  do {
    MonomialOrder o;
    o.kind = kind;
    o.priority = perm;
    out.push_back(o);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace gns
