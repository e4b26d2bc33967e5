#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gns/enumeration.hpp"
#include "gns/invariants.hpp"
#include "gns/thickening.hpp"

using namespace gns;

namespace {

std::vector<Point> sorted(std::vector<Point> v) {
  std::sort(v.begin(), v.end(), GrlexLess{});
  return v;
}

}  // namespace

TEST_CASE("single thickening") {
  Gns two_three = Gns::validate_hole_set(1, {{1}});  // <2,3>
  SECTION("1-thickening of <2,3> along the second axis") {
    Gns t = thicken(two_three, 2, 1);
    CHECK(t.holes() == sorted({{1, 0}, {1, 1}}));
    CHECK(minimal_generators(t) ==
          sorted({{0, 1}, {2, 0}, {3, 0}, {1, 2}}));
    CHECK(invariants(t).e == 4);
  }
  SECTION("0-thickening embeds with unchanged genus") {
    Gns t = thicken(two_three, 1, 0);
    CHECK(t.dim() == 2);
    CHECK(t.genus() == two_three.genus());
    CHECK(t.holes() == sorted({{0, 1}}));
  }
  SECTION("2-thickening scales n and c by three") {
    InvariantRecord base = invariants(two_three);
    CHECK(base.n == 1);
    CHECK(base.c == 2);
    InvariantRecord t = invariants(thicken(two_three, 2, 2));
    CHECK(t.n == 3);
    CHECK(t.c == 6);
  }
  SECTION("axis out of range") {
    CHECK_THROWS_AS(thicken(two_three, 3, 0), error);
    CHECK_THROWS_AS(thicken(two_three, 0, 0), error);
  }
}

TEST_CASE("iterated thickening") {
  Gns two_three = Gns::validate_hole_set(1, {{1}});
  SECTION("all-zero steps embed into N^3") {
    Gns t = thicken_iterated(two_three, {{2, 0}, {3, 0}});
    CHECK(t.dim() == 3);
    CHECK(t.genus() == 1);
    CHECK(t.holes() == sorted({{1, 0, 0}}));
  }
  SECTION("the N^5 example arises from its restriction") {
    Gns sbar = Gns::validate_hole_set(2, {{0, 1}, {0, 2}, {1, 0}, {1, 3}});
    Gns s = thicken_iterated(sbar, {{1, 0}, {3, 0}, {5, 0}});
    Gns expected = Gns::validate_hole_set(5, {{0, 0, 0, 1, 0},
                                              {0, 0, 0, 2, 0},
                                              {0, 1, 0, 0, 0},
                                              {0, 1, 0, 3, 0}});
    CHECK(s == expected);
    InvariantRecord v = invariants(s);
    CHECK(v.e == 20);
    CHECK(v.g == 4);
  }
  SECTION("step order does not matter") {
    Gns a = thicken_iterated(two_three, {{2, 1}, {3, 2}});
    Gns b = thicken_iterated(two_three, {{3, 2}, {2, 1}});
    CHECK(a == b);
  }
  SECTION("repeated axis is rejected") {
    CHECK_THROWS_MATCHES(thicken_iterated(two_three, {{2, 1}, {2, 0}}), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                           return e.code() == errc::repeated_axis;
                         }));
  }
}

TEST_CASE("thickening statistics") {
  // e' = e + m, n' = (k+1) n, c' = (k+1) c, g' = (k+1) g over random inputs
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int d = 1 + static_cast<int>(rng() % 2);
    int g = static_cast<int>(rng() % 5);
    Gns s = random_gns(d, g, rng());
    InvariantRecord base = invariants(s);
    int axis = 1 + static_cast<int>(rng() % (d + 1));
    int k = static_cast<int>(rng() % 3);
    Gns t = thicken(s, axis, k);
    InvariantRecord after = invariants(t);
    CHECK(after.e == base.e + base.m);
    CHECK(after.n == (k + 1) * base.n);
    CHECK(after.c == (k + 1) * base.c);
    CHECK(after.g == (k + 1) * base.g);

    // the generator formula: {e_axis} u i(G(S)) u ((k+1)e_axis + i(M(S)*))
    std::vector<Point> expected;
    expected.push_back(Point::unit(d + 1, axis));
    for (const Point& g0 : minimal_generators(s))
      expected.push_back(insert_coord(g0, axis, 0));
    for (const Point& m0 : fundamental_holes(s))
      expected.push_back(insert_coord(m0, axis, static_cast<Coord>(k + 1)));
    std::sort(expected.begin(), expected.end(), GrlexLess{});
    expected.erase(std::unique(expected.begin(), expected.end()),
                   expected.end());
    CHECK(minimal_generators(t) == expected);

    // Wilf transport: if S satisfies the conjecture so does the thickening
    if (base.e * base.n >= d * base.c)
      CHECK(after.e * after.n >= (d + 1) * after.c);
    if (base.c == base.m * base.n && base.e * base.n == d * base.c)
      CHECK(after.e * after.n == (d + 1) * after.c);
  }
}

TEST_CASE("restriction and zero-thickening are inverse") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    int d = 1 + static_cast<int>(rng() % 3);
    int g = 1 + static_cast<int>(rng() % 5);
    Gns s = random_gns(d, g, rng());
    Restriction r = axes_and_restriction(s);
    REQUIRE(r.restricted.has_value());
    std::vector<std::pair<int, int>> steps;
    for (int a : r.axes) steps.push_back({a, 0});
    CHECK(thicken_iterated(*r.restricted, steps) == s);
  }
}
