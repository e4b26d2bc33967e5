#pragma once

#include <string>

#include "gns/gns.hpp"
#include "gns/invariants.hpp"
#include "gns/order.hpp"

namespace gns {

// Evaluated sides of a conjecture check. holds <=> lhs >= rhs,
// equality <=> lhs == rhs, slack = lhs - rhs.
struct WilfReport {
  long long lhs = 0;
  long long rhs = 0;
  bool holds = false;
  bool equality = false;
  long long slack = 0;
  std::string context;
};

inline WilfReport make_report(long long lhs, long long rhs,
                              std::string context) {
  WilfReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.holds = lhs >= rhs;
  r.equality = lhs == rhs;
  r.slack = lhs - rhs;
  r.context = std::move(context);
  return r;
}

// e(S) n(S) >= d c(S)
inline WilfReport generalized_wilf(const InvariantRecord& inv, int dim) {
  return make_report(inv.e * inv.n, dim * inv.c, "gwc");
}

inline WilfReport generalized_wilf(const Gns& S) {
  return generalized_wilf(invariants(S), S.dim());
}

struct OrderFrobenius {
  Point fb;              // order-max hole; (-1,...,-1) when there are none
  long long n_order = 0;  // |{x in S : x < fb in the order}|
};

// The order-Frobenius element and n_<(S). Graded orders have finite
// down-sets, so the count scans degrees up to deg(fb). Works for any
// semigroup-like type exposing dim(), holes() and in_s().
template <typename SemigroupLike>
OrderFrobenius order_frobenius(const SemigroupLike& S,
                               const MonomialOrder& order) {
  OrderFrobenius out;
  out.fb = Point::sentinel(S.dim());
  if (S.holes().empty()) return out;
  for (const Point& h : S.holes())
    if (order.less(out.fb, h)) out.fb = h;
  long long count = 0;
  for (long long deg = 0; deg < out.fb.degree(); ++deg)
    for_each_of_degree(S.dim(), deg, [&](const Point& p) {
      if (S.in_s(p)) ++count;
    });
  for_each_of_degree(S.dim(), out.fb.degree(), [&](const Point& p) {
    if (order.less(p, out.fb) && S.in_s(p)) ++count;
  });
  out.n_order = count;
  return out;
}

// Extended Wilf Conjecture: n_<(S) e(S) against the number of lattice
// points preceding-or-equal the order-Frobenius element, n_<(S) + g(S).
// The strict variant adds the literal +1; for d = 1 the default variant
// coincides with classical Wilf e(S) n(S) >= F(S) + 1. With no holes both
// variants read 0 >= 0.
inline WilfReport extended_wilf(const Gns& S, const MonomialOrder& order,
                                long long e, bool strict = false) {
  OrderFrobenius of = order_frobenius(S, order);
  long long rhs = of.n_order + S.genus();
  if (strict && S.genus() > 0) rhs += 1;
  return make_report(of.n_order * e, rhs,
                     std::string(strict ? "ewc-strict:" : "ewc:") +
                         order.name());
}

inline WilfReport extended_wilf(const Gns& S, const MonomialOrder& order,
                                bool strict = false) {
  return extended_wilf(
      S, order, static_cast<long long>(minimal_generators(S).size()), strict);
}

}  // namespace gns
