#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <random>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gns/gns.hpp"
#include "gns/invariants.hpp"
#include "gns/order.hpp"
#include "gns/point.hpp"

namespace gns {

// ---------------------------------------------------------------------------
// semigroup tree
// ---------------------------------------------------------------------------

// A node of the semigroup tree rooted at N^d. Children remove one minimal
// generator strictly order-above the node's order-Frobenius element, so
// every GNS of genus g appears exactly once at depth g.
struct TreeNode {
  Gns semigroup;
  std::vector<Point> generators;        // full G(S), graded-lex sorted
  Point order_frobenius;                // order-max hole, sentinel at the root
  std::vector<Point> generators_above;  // generators order-above frobenius
};

/*
 * Generator update when the minimal generator x is removed: kept = G(S)\{x}
 * stay minimal (fewer decompositions), and any new generator y must have
 * every S-splitting go through x, which forces y in (x + G(S)) u {3x}:
 * writing y = x + s and splitting s = g + t with g != x yields the x-free
 * decomposition y = g + (x+t); iterating leaves s in G(S), s = x, or s = 2x.
 * Candidates are tested in graded order against the child generators found
 * so far (a decomposition refines to generator-of-smaller-degree + S*).
 */
inline std::vector<Point> update_generators(const std::vector<Point>& gens,
                                            const Point& x, const Gns& child) {
  std::vector<Point> kept;
  kept.reserve(gens.size());
  for (const Point& g : gens)
    if (g != x) kept.push_back(g);

  std::vector<Point> cands;
  cands.reserve(gens.size() + 1);
  for (const Point& g : gens) cands.push_back(x + g);
  cands.push_back(3 * x);
  std::sort(cands.begin(), cands.end(), GrlexLess{});
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

  std::vector<Point> accepted;
  auto decomposes_via = [&](const std::vector<Point>& pool, const Point& y) {
    for (const Point& g : pool) {
      if (g.degree() >= y.degree()) break;
      if (leq(g, y) && child.in_s_star(y - g)) return true;
    }
    return false;
  };
  for (const Point& y : cands)
    if (!decomposes_via(kept, y) && !decomposes_via(accepted, y))
      accepted.push_back(y);

  std::vector<Point> out;
  out.reserve(kept.size() + accepted.size());
  std::merge(kept.begin(), kept.end(), accepted.begin(), accepted.end(),
             std::back_inserter(out), GrlexLess{});
  return out;
}

inline std::vector<Point> generators_above(const std::vector<Point>& gens,
                                           const Point& fb,
                                           const MonomialOrder& order) {
  std::vector<Point> out;
  for (const Point& g : gens)
    if (order.less(fb, g)) out.push_back(g);
  return out;
}

inline TreeNode root_node(int dim, const MonomialOrder& order) {
  TreeNode n{Gns::full_space(dim), minimal_generators(Gns::full_space(dim)),
             Point::sentinel(dim), {}};
  n.generators_above = generators_above(n.generators, n.order_frobenius, order);
  return n;
}

// One child per cached generator above the Frobenius element; children are
// validated on construction.
inline std::vector<TreeNode> children(const TreeNode& node,
                                      const MonomialOrder& order) {
  std::vector<TreeNode> out;
  out.reserve(node.generators_above.size());
  for (const Point& x : node.generators_above) {
    std::vector<Point> holes = node.semigroup.holes();
    holes.push_back(x);
    TreeNode child{Gns::validate_hole_set(node.semigroup.dim(),
                                          std::move(holes)),
                   {}, x, {}};
    child.generators = update_generators(node.generators, x, child.semigroup);
    child.generators_above = generators_above(child.generators, x, order);
    out.push_back(std::move(child));
  }
  return out;
}

// ---------------------------------------------------------------------------
// traversal
// ---------------------------------------------------------------------------

// Visits every tree node of depth <= max_genus exactly once. With jobs > 1
// the tree is split at a shallow frontier and subtrees run on worker
// threads, so the visitor must be safe under concurrent invocation;
// jobs = 1 is the deterministic serial mode.
template <typename Visitor>
void for_each_tree_node(int dim, int max_genus, const MonomialOrder& order,
                        int jobs, Visitor&& visit) {
  TreeNode root = root_node(dim, order);
  if (jobs <= 1) {
    auto rec = [&](auto&& self, const TreeNode& node, int genus) -> void {
      visit(node, genus);
      if (genus == max_genus) return;
      for (const TreeNode& child : children(node, order))
        self(self, child, genus + 1);
    };
    rec(rec, root, 0);
    return;
  }

  std::vector<TreeNode> frontier;
  frontier.push_back(std::move(root));
  int depth = 0;
  while (depth < max_genus &&
         frontier.size() < static_cast<std::size_t>(jobs) * 8) {
    std::vector<TreeNode> next;
    for (const TreeNode& node : frontier) {
      visit(node, depth);
      for (TreeNode& child : children(node, order))
        next.push_back(std::move(child));
    }
    frontier = std::move(next);
    ++depth;
    if (frontier.empty()) return;
  }
  if (depth == max_genus) {
    for (const TreeNode& node : frontier) visit(node, depth);
    return;
  }

  std::atomic<std::size_t> cursor{0};
  auto worker = [&]() {
    auto rec = [&](auto&& self, const TreeNode& node, int genus) -> void {
      visit(node, genus);
      if (genus == max_genus) return;
      for (const TreeNode& child : children(node, order))
        self(self, child, genus + 1);
    };
    while (true) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= frontier.size()) break;
      rec(rec, frontier[i], depth);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
}

// Visits every GNS of the given genus exactly once and returns how many
// there are. The visitor takes the TreeNode; with jobs > 1 it must be
// thread-safe.
template <typename Visitor>
long long enumerate_genus(int dim, int genus, const MonomialOrder& order,
                          Visitor&& visit, int jobs = 1) {
  std::atomic<long long> count{0};
  for_each_tree_node(dim, genus, order, jobs,
                     [&](const TreeNode& node, int g) {
                       if (g == genus) {
                         count.fetch_add(1, std::memory_order_relaxed);
                         visit(node);
                       }
                     });
  return count.load();
}

inline long long count_genus(int dim, int genus, const MonomialOrder& order,
                             int jobs = 1) {
  return enumerate_genus(dim, genus, order, [](const TreeNode&) {}, jobs);
}

// ---------------------------------------------------------------------------
// incremental walk state
// ---------------------------------------------------------------------------

// Hole set, C(S) region, and generator set of one branch of the tree,
// maintained incrementally: one remove_generator step costs O(e^2) point
// operations instead of a fresh generator computation. Used by the random
// walks, where semigroups reach genus in the hundreds.
class WalkState {
 public:
  explicit WalkState(int dim, const MonomialOrder& order)
      : dim_(dim), order_(order), fb_(Point::sentinel(dim)) {
    for (int i = 1; i <= dim; ++i) gens_.push_back(Point::unit(dim, i));
    std::sort(gens_.begin(), gens_.end(),
              [&](const Point& a, const Point& b) { return order_.less(a, b); });
    first_above_ = 0;
  }

  int dim() const { return dim_; }
  long long genus() const { return static_cast<long long>(holes_.size()); }
  long long e() const { return static_cast<long long>(gens_.size()); }
  long long c() const { return c_; }
  long long n() const { return c_ - genus(); }  // C(S) = H(S) u N(S)
  const std::vector<Point>& holes() const { return holes_; }
  const std::vector<Point>& generators() const { return gens_; }

  // generators order-above the current Frobenius element
  std::size_t options() const { return gens_.size() - first_above_; }
  const Point& option(std::size_t i) const { return gens_[first_above_ + i]; }

  bool in_s(const Point& p) const { return !hole_set_.count(p); }
  bool in_s_star(const Point& p) const {
    return !p.is_zero() && !hole_set_.count(p);
  }

  // steps to the child S \ {x}; x must be one of option(0..options()-1).
  // Taken by value: callers pass references into gens_, which mutates here.
  void remove_generator(Point x) {
    holes_.push_back(x);
    hole_set_.insert(x);
    for_each_in_box(x, [&](const Point& p) {
      if (c_set_.insert(p).second) ++c_;
    });

    // gens_ stays sorted under order_ (graded, so the degree break below
    // remains valid)
    auto by_order = [&](const Point& a, const Point& b) {
      return order_.less(a, b);
    };
    std::vector<Point> cands;
    cands.reserve(gens_.size() + 1);
    for (const Point& g : gens_) cands.push_back(x + g);
    cands.push_back(3 * x);
    std::sort(cands.begin(), cands.end(), by_order);
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    gens_.erase(std::find(gens_.begin(), gens_.end(), x));
    std::vector<Point> accepted;
    auto decomposes_via = [&](const std::vector<Point>& pool, const Point& y) {
      for (const Point& g : pool) {
        if (g.degree() >= y.degree()) break;
        if (leq(g, y) && in_s_star(y - g)) return true;
      }
      return false;
    };
    for (const Point& y : cands)
      if (!decomposes_via(gens_, y) && !decomposes_via(accepted, y))
        accepted.push_back(y);
    std::vector<Point> merged;
    merged.reserve(gens_.size() + accepted.size());
    std::merge(gens_.begin(), gens_.end(), accepted.begin(), accepted.end(),
               std::back_inserter(merged), by_order);
    gens_ = std::move(merged);

    fb_ = x;
    first_above_ = static_cast<std::size_t>(
        std::upper_bound(gens_.begin(), gens_.end(), fb_, by_order) -
        gens_.begin());
  }

  Gns to_gns() const { return Gns::validate_hole_set(dim_, holes_); }

 private:
  int dim_;
  MonomialOrder order_;
  std::vector<Point> holes_;
  std::unordered_set<Point, PointHash> hole_set_;
  std::unordered_set<Point, PointHash> c_set_;
  std::vector<Point> gens_;  // graded-lex sorted
  std::size_t first_above_;
  Point fb_;
  long long c_ = 0;
};

// ---------------------------------------------------------------------------
// random semigroups
// ---------------------------------------------------------------------------

// A genus-step random walk from the root, restarting when a leaf is hit
// before the target depth. Deterministic in the seed (child selection uses
// modulo reduction, not distribution objects).
inline Gns random_gns(int dim, int genus, std::uint64_t seed,
                      int retry_budget = 10000) {
  if (dim < 1) throw error(errc::dimension_mismatch, "dim must be >= 1");
  if (genus < 0) throw error(errc::bad_parameters, "genus must be >= 0");
  MonomialOrder order = MonomialOrder::grlex_default(dim);
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    WalkState walk(dim, order);
    bool dead = false;
    for (int step = 0; step < genus; ++step) {
      if (walk.options() == 0) {
        dead = true;
        break;
      }
      walk.remove_generator(
          walk.option(static_cast<std::size_t>(rng() % walk.options())));
    }
    if (!dead) return walk.to_gns();
  }
  throw error(errc::unreachable_genus,
              "no genus-" + std::to_string(genus) + " walk found within budget");
}

// ---------------------------------------------------------------------------
// brute-force oracle
// ---------------------------------------------------------------------------

/*
 * Independent of the tree: tests every g-subset of the box [0, 2g-1]^d
 * minus the origin for hole-set validity. Candidate points additionally
 * satisfy prod(h_i + 1) <= 2g, since |C(h)| = |N(h)| + |H(h)| <= 2|H(h)|
 * <= 2g for every hole of a valid genus-g semigroup (the box bound itself
 * is the d = 1 case of that inequality).
 */
inline std::vector<Gns> brute_force_enumerate(int dim, int genus,
                                              long long max_subsets =
                                                  20000000) {
  if (dim < 1) throw error(errc::dimension_mismatch, "dim must be >= 1");
  if (genus < 0) throw error(errc::bad_parameters, "genus must be >= 0");
  if (genus == 0) return {Gns::full_space(dim)};

  std::vector<Point> pts;
  Point hi(std::vector<Coord>(dim, static_cast<Coord>(2 * genus - 1)));
  for_each_in_box(hi, [&](const Point& p) {
    if (p.is_zero()) return;
    long long prod = 1;
    for (Coord x : p.c) prod *= x + 1;
    if (prod <= 2 * genus) pts.push_back(p);
  });
  std::sort(pts.begin(), pts.end(), GrlexLess{});

  const std::size_t n = pts.size();
  const std::size_t g = static_cast<std::size_t>(genus);
  if (n < g) return {};
  long long subsets = 1;
  for (std::size_t i = 0; i < g; ++i) {
    subsets = subsets * static_cast<long long>(n - i) /
              static_cast<long long>(i + 1);
    if (subsets > max_subsets)
      throw error(errc::oracle_too_large,
                  "more than " + std::to_string(max_subsets) + " subsets");
  }

  std::unordered_map<Point, std::size_t, PointHash> index;
  for (std::size_t i = 0; i < n; ++i) index[pts[i]] = i;
  std::vector<char> selected(n, 0);
  auto in_subset = [&](const Point& p) {
    auto it = index.find(p);
    return it != index.end() && selected[it->second];
  };

  std::vector<Gns> out;
  std::vector<std::size_t> comb(g);
  for (std::size_t i = 0; i < g; ++i) comb[i] = i;
  while (true) {
    for (std::size_t i : comb) selected[i] = 1;
    bool valid = true;
    for (std::size_t ci = 0; valid && ci < g; ++ci) {
      const Point& h = pts[comb[ci]];
      valid = for_each_in_box_while(h, [&](const Point& a) {
        if (a.is_zero() || a == h) return true;
        return in_subset(a) || in_subset(h - a);
      });
    }
    if (valid) {
      std::vector<Point> holes;
      for (std::size_t i : comb) holes.push_back(pts[i]);
      out.push_back(Gns::validate_hole_set(dim, std::move(holes)));
    }
    for (std::size_t i : comb) selected[i] = 0;

    // next g-combination of {0,...,n-1}
    std::size_t k = g;
    while (k > 0 && comb[k - 1] == n - g + k - 1) --k;
    if (k == 0) break;
    ++comb[k - 1];
    for (std::size_t i = k; i < g; ++i) comb[i] = comb[i - 1] + 1;
  }
  return out;
}

}  // namespace gns
