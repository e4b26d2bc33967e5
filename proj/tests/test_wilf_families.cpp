#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gns/enumeration.hpp"
#include "gns/families.hpp"
#include "gns/invariants.hpp"
#include "gns/sweep.hpp"
#include "gns/thickening.hpp"
#include "gns/wilf.hpp"

using namespace gns;

namespace {

Gns figure1() {
  return Gns::validate_hole_set(
      2, {{0, 1}, {1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 1}, {3, 0},
          {3, 2}});
}

}  // namespace

TEST_CASE("generalized Wilf reports") {
  SECTION("running example: 56 >= 32 with slack 24") {
    WilfReport r = generalized_wilf(figure1());
    CHECK(r.lhs == 56);
    CHECK(r.rhs == 32);
    CHECK(r.holds);
    CHECK_FALSE(r.equality);
    CHECK(r.slack == 24);
  }
  SECTION("ordinary semigroups meet the bound exactly") {
    WilfReport r = generalized_wilf(make_ordinary(Point{2, 3}));
    CHECK(r.lhs == 24);
    CHECK(r.rhs == 24);
    CHECK(r.equality);
  }
  SECTION("no holes: 0 >= 0") {
    WilfReport r = generalized_wilf(Gns::full_space(3));
    CHECK(r.lhs == 0);
    CHECK(r.rhs == 0);
    CHECK(r.holds);
  }
}

TEST_CASE("order Frobenius element") {
  SECTION("<2,3>") {
    OrderFrobenius f = order_frobenius(Gns::validate_hole_set(1, {{1}}),
                                       MonomialOrder::grlex_default(1));
    CHECK(f.fb == Point{1});
    CHECK(f.n_order == 1);
  }
  SECTION("running example under graded-lex x > y") {
    OrderFrobenius f =
        order_frobenius(figure1(), MonomialOrder::grlex_default(2));
    CHECK(f.fb == Point{3, 2});
    CHECK(f.n_order == 10);
  }
  SECTION("no holes: sentinel") {
    OrderFrobenius f = order_frobenius(Gns::full_space(3),
                                       MonomialOrder::grlex_default(3));
    CHECK(f.fb == Point::sentinel(3));
    CHECK(f.n_order == 0);
  }
}

TEST_CASE("extended Wilf reports") {
  SECTION("<2,3> reproduces classical Wilf with equality") {
    WilfReport r = extended_wilf(Gns::validate_hole_set(1, {{1}}),
                                 MonomialOrder::grlex_default(1));
    CHECK(r.lhs == 2);
    CHECK(r.rhs == 2);
    CHECK(r.equality);
  }
  SECTION("running example: 80 >= 19") {
    WilfReport r = extended_wilf(figure1(), MonomialOrder::grlex_default(2));
    CHECK(r.lhs == 80);
    CHECK(r.rhs == 19);
    CHECK(r.holds);
  }
  SECTION("no holes: 0 >= 0 in both variants") {
    WilfReport r = extended_wilf(Gns::full_space(2),
                                 MonomialOrder::grlex_default(2));
    CHECK(r.lhs == 0);
    CHECK(r.rhs == 0);
    r = extended_wilf(Gns::full_space(2), MonomialOrder::grlex_default(2),
                      true);
    CHECK(r.rhs == 0);
  }
  SECTION("the strict variant adds one") {
    Gns s = figure1();
    WilfReport lax = extended_wilf(s, MonomialOrder::grlex_default(2), false);
    WilfReport strict = extended_wilf(s, MonomialOrder::grlex_default(2),
                                      true);
    CHECK(strict.rhs == lax.rhs + 1);
  }
  SECTION("classical Wilf on the d = 1 tree") {
    // rhs = F + 1 exactly
    for_each_tree_node(1, 7, MonomialOrder::grlex_default(1), 1,
                       [&](const TreeNode& node, int genus) {
                         if (genus == 0) return;
                         WilfReport r = extended_wilf(
                             node.semigroup, MonomialOrder::grlex_default(1));
                         CHECK(r.rhs ==
                               node.semigroup.holes().back().c[0] + 1);
                         CHECK(r.holds);
                       });
  }
}

TEST_CASE("ordinary family") {
  Gns s = make_ordinary(Point{2, 3});
  CHECK(s.genus() == 11);
  InvariantRecord v = invariants(s);
  CHECK(v.c == 12);
  CHECK(v.n == 1);
  CHECK(v.e == 24);
  CHECK(make_ordinary(Point{0, 0}) == Gns::full_space(2));
  CHECK(make_ordinary(Point{3}) ==
        Gns::validate_hole_set(1, {{1}, {2}, {3}}));
  SECTION("the generators split into two translated copies of C(f)") {
    std::vector<Point> expected;
    for_each_in_box(Point{2, 3}, [&](const Point& p) {
      expected.push_back(p + Point{3, 0});
      expected.push_back(p + Point{0, 4});
    });
    std::sort(expected.begin(), expected.end(), GrlexLess{});
    CHECK(minimal_generators(s) == expected);
  }
  SECTION("random ordinary semigroups satisfy d c = e and n = 1") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 60; ++trial) {
      int d = 1 + static_cast<int>(rng() % 4);
      Point f = Point::zero(d);
      for (int i = 0; i < d; ++i) f.c[i] = static_cast<Coord>(rng() % 5);
      Gns o = make_ordinary(f);
      InvariantRecord w = invariants(o);
      if (o.genus() > 0) {
        CHECK(w.n == 1);
        CHECK(d * w.c == w.e);
      }
      CHECK(w.e * w.n == d * w.c);
      Classification cls = classify(o);
      if (o.genus() > 0) {
        CHECK(cls.is_ordinary);
        CHECK(cls.is_monomial);
      }
    }
  }
}

TEST_CASE("axis family") {
  SECTION("d=2, holes along the second axis") {
    Gns s = make_family_axis(2, 1, 2, 3);
    CHECK(s.holes() == std::vector<Point>{{1, 0}, {1, 1}, {1, 2}});
    InvariantRecord v = invariants(s);
    CHECK(v.e == 4);
    CHECK(v.n == 3);
    CHECK(v.c == 6);
    WilfReport r = generalized_wilf(s);
    CHECK(r.equality);
  }
  SECTION("d=3") {
    InvariantRecord v = invariants(make_family_axis(3, 2, 1, 2));
    CHECK(v.e == 6);
    CHECK(v.n == 2);
    CHECK(v.c == 4);
    CHECK(3 * v.c == v.e * v.n);
  }
  SECTION("h must exceed one") {
    CHECK_THROWS_MATCHES(make_family_axis(2, 1, 2, 1), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                           return e.code() == errc::bad_parameters;
                         }));
  }
  SECTION("equality across parameters") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
      int d = 2 + static_cast<int>(rng() % 3);
      int i = 1 + static_cast<int>(rng() % d);
      int k = 1 + static_cast<int>(rng() % d);
      if (k == i) k = k % d + 1;
      int h = 2 + static_cast<int>(rng() % 4);
      WilfReport r = generalized_wilf(make_family_axis(d, i, k, h));
      CHECK(r.equality);
    }
  }
}

TEST_CASE("box family") {
  SECTION("single gap with box bound two") {
    Gns s = make_family_box({1}, 1, {2});
    CHECK(s == make_family_axis(2, 1, 2, 3));
  }
  SECTION("gaps {1,2} on the second axis") {
    Gns s = make_family_box({1, 2}, 2, {1});
    CHECK(s == Gns::validate_hole_set(2, {{0, 1}, {1, 1}, {0, 2}, {1, 2}}));
  }
  SECTION("no gaps gives the full space") {
    CHECK(make_family_box({}, 1, {3, 2}) == Gns::full_space(3));
  }
  SECTION("invalid gap sets are rejected") {
    CHECK_THROWS_MATCHES(make_family_box({2}, 1, {1}), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                           return e.code() ==
                                  errc::invalid_numerical_semigroup;
                         }));
  }
  SECTION("equals the iterated thickening of the numerical semigroup") {
    std::vector<int> gaps{1, 2, 5};
    Gns q = Gns::validate_hole_set(1, {{1}, {2}, {5}});
    // j = 2 in d = 3: thicken along final axes 1 and 3 with bounds q1, q3
    Gns s = make_family_box(gaps, 2, {2, 1});
    CHECK(s == thicken_iterated(q, {{1, 2}, {3, 1}}));
    CHECK(generalized_wilf(s).holds);
  }
}

TEST_CASE("e = 2d family") {
  SECTION("a = 2, b = 3: the two-hole symmetric semigroup") {
    Gns s = make_family_e2d(2, 1, 2, 3, {2});
    CHECK(s == Gns::validate_hole_set(2, {{1, 0}, {1, 1}}));
    Classification c = classify(s);
    CHECK(c.is_symmetric);
    REQUIRE(c.frobenius_element.has_value());
    CHECK(*c.frobenius_element == Point{1, 1});
    CHECK(invariants(s).e == 4);
  }
  SECTION("a = 2, b = 5: gaps 1 and 3 on the first axis") {
    Gns s = make_family_e2d(2, 1, 2, 5, {1});
    CHECK(s == Gns::validate_hole_set(2, {{1, 0}, {3, 0}}));
    CHECK(classify(s).is_symmetric);
  }
  SECTION("a = 3 is never Frobenius") {
    Gns s = make_family_e2d(2, 1, 3, 4, {1});
    Classification c = classify(s);
    CHECK_FALSE(c.frobenius_element.has_value());
    CHECK(s.is_hole(Point{5, 0}));
    CHECK(s.is_hole(Point{2, 1}));
    CHECK(invariants(s).e == 4);
  }
  SECTION("a = 2 hole formula across parameters") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 15; ++trial) {
      int d = 2 + static_cast<int>(rng() % 2);
      int i = 1 + static_cast<int>(rng() % d);
      int b = 3 + 2 * static_cast<int>(rng() % 3);  // odd, coprime with 2
      std::vector<int> h;
      for (int t = 0; t < d - 1; ++t)
        h.push_back(1 + static_cast<int>(rng() % 3));
      Gns s = make_family_e2d(d, i, 2, b, h);
      std::vector<Point> expected;
      for (int gap = 1; gap <= b - 2; gap += 2) {
        Point base = Point::zero(d);
        base.c[i - 1] = gap;
        Point hi = Point::zero(d);
        for (int j = 1, pos = 0; j <= d; ++j)
          if (j != i) hi.c[j - 1] = h[pos++] - 1;
        for_each_in_box(hi, [&](const Point& l) {
          expected.push_back(base + l);
        });
      }
      std::sort(expected.begin(), expected.end(), GrlexLess{});
      CHECK(s.holes() == expected);
      Classification cls = classify(s);
      CHECK(cls.is_symmetric);
      // Frobenius element (b-2) e_i + sum (h_j - 1) e_j, genus
      // (b-1)/2 * prod h_j
      Point f = Point::zero(d);
      f.c[i - 1] = b - 2;
      long long prod_h = 1;
      for (int j = 1, pos = 0; j <= d; ++j)
        if (j != i) {
          f.c[j - 1] = h[pos] - 1;
          prod_h *= h[pos++];
        }
      REQUIRE(cls.frobenius_element.has_value());
      CHECK(*cls.frobenius_element == f);
      CHECK(s.genus() == (b - 1) / 2 * prod_h);
      CHECK(invariants(s).e == 2 * d);
    }
  }
  SECTION("parameter validation") {
    CHECK_THROWS_AS(make_family_e2d(2, 1, 2, 4, {1}), error);  // gcd 2
    CHECK_THROWS_AS(make_family_e2d(2, 1, 1, 3, {1}), error);  // a = 1
    CHECK_THROWS_AS(make_family_e2d(2, 1, 2, 3, {1, 1}), error);
  }
}

TEST_CASE("irreducible semigroups pass the conjecture in a filtered sweep") {
  long long irreducible_seen = 0;
  for (int d = 1; d <= 2; ++d)
    for_each_tree_node(d, 6, MonomialOrder::grlex_default(d), 1,
                       [&](const TreeNode& node, int genus) {
                         if (genus == 0) return;
                         if (!classify(node.semigroup).is_irreducible) return;
                         ++irreducible_seen;
                         CHECK(generalized_wilf(node.semigroup).holds);
                       });
  CHECK(irreducible_seen > 0);
}

TEST_CASE("the strict extended variant fails at d = 1, as documented") {
  // rhs = F + 2 there, one more than classical Wilf; <2,3> gives 2 >= 3
  Gns s = Gns::validate_hole_set(1, {{1}});
  WilfReport strict = extended_wilf(s, MonomialOrder::grlex_default(1), true);
  CHECK(strict.lhs == 2);
  CHECK(strict.rhs == 3);
  CHECK_FALSE(strict.holds);
  SweepOptions opt;
  opt.dim = 1;
  opt.max_genus = 1;
  opt.ewc_strict = true;
  SweepSummary sum = run_sweep(opt);
  CHECK(sum.violations > 0);
}

TEST_CASE("the generalized conjecture implies the extended one") {
  std::vector<MonomialOrder> orders = all_priority_orders(2, OrderKind::grlex);
  for (const MonomialOrder& o : all_priority_orders(2, OrderKind::grevlex))
    orders.push_back(o);
  for_each_tree_node(2, 5, MonomialOrder::grlex_default(2), 1,
                     [&](const TreeNode& node, int genus) {
                       const Gns& s = node.semigroup;
                       InvariantRecord v = invariants(s);
                       WilfReport gwc = generalized_wilf(v, 2);
                       REQUIRE(gwc.holds);
                       for (const MonomialOrder& o : orders) {
                         WilfReport ewc = extended_wilf(s, o, v.e);
                         CHECK(ewc.holds);
                         if (genus >= 1) {
                           WilfReport strict = extended_wilf(s, o, v.e, true);
                           CHECK(strict.holds);
                         }
                         // n(S) <= n_<(S)
                         OrderFrobenius of = order_frobenius(s, o);
                         CHECK(v.n <= of.n_order);
                       }
                     });
}
