#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "gns/enumeration.hpp"
#include "gns/gns.hpp"
#include "gns/invariants.hpp"
#include "gns/order.hpp"
#include "gns/wilf.hpp"

namespace gns {

struct SweepOptions {
  int dim = 2;
  int max_genus = 5;
  bool random_mode = false;  // false: all semigroups per genus
  int trials = 50;           // random mode: walks, i.e. samples per genus
  bool ewc = false;          // also check the Extended Wilf Conjecture
  bool ewc_strict = false;   // literal N(Fb)+1 right-hand side
  int jobs = 1;
  std::uint64_t seed = 1;
  // orders used for the EWC; defaults to every graded-lex priority
  // permutation (the identity order beyond dimension four)
  std::vector<MonomialOrder> orders;
};

struct SweepWitness {
  long long slack = 0;
  std::vector<Point> holes;
};

struct GenusStats {
  long long count = 0;
  long long gwc_violations = 0;
  long long ewc_violations = 0;  // (semigroup, order, variant) pairs
  std::optional<SweepWitness> min_slack;
};

struct SweepSummary {
  int dim = 0;
  std::vector<GenusStats> per_genus;  // indexed by genus, 0..max_genus
  long long total_checked = 0;
  long long violations = 0;
  std::vector<SweepWitness> violation_witnesses;
};

inline std::vector<MonomialOrder> default_ewc_orders(int dim) {
  if (dim <= 4) return all_priority_orders(dim, OrderKind::grlex);
  return {MonomialOrder::grlex_default(dim)};
}

namespace detail {

inline bool witness_less(const SweepWitness& a, const SweepWitness& b) {
  if (a.slack != b.slack) return a.slack < b.slack;
  return std::lexicographical_compare(a.holes.begin(), a.holes.end(),
                                      b.holes.begin(), b.holes.end(),
                                      GrlexLess{});
}

// one semigroup's worth of checks, merged under the caller's lock
struct CheckOutcome {
  long long gwc_violations = 0;
  long long ewc_violations = 0;
  SweepWitness witness;
};

template <typename Membership>
CheckOutcome check_one(const SweepOptions& opt, int dim, long long e,
                       long long n, long long c, const Membership& member,
                       const std::vector<Point>& holes) {
  CheckOutcome out;
  WilfReport gwc = make_report(e * n, dim * c, "gwc");
  out.witness.slack = gwc.slack;
  out.witness.holes = holes;
  if (!gwc.holds) ++out.gwc_violations;
  if (opt.ewc || opt.ewc_strict) {
    for (const MonomialOrder& order : opt.orders) {
      OrderFrobenius of = order_frobenius(member, order);
      long long g = static_cast<long long>(holes.size());
      if (opt.ewc && of.n_order * e < of.n_order + g) ++out.ewc_violations;
      if (opt.ewc_strict && g > 0 && of.n_order * e < of.n_order + g + 1)
        ++out.ewc_violations;
    }
  }
  return out;
}

}  // namespace detail

// Checks the Generalized Wilf Conjecture (and optionally the Extended Wilf
// Conjecture under every configured order) on every semigroup of genus
// 0..max_genus (mode all) or on `trials` random semigroups per genus (mode
// random, one seeded walk per trial). Counts and witnesses are independent
// of the parallelism degree.
inline SweepSummary run_sweep(SweepOptions opt) {
  if (opt.dim < 1 || opt.max_genus < 0 || opt.jobs < 1 || opt.trials < 0)
    throw error(errc::bad_parameters, "invalid sweep parameters");
  if ((opt.ewc || opt.ewc_strict) && opt.orders.empty())
    opt.orders = default_ewc_orders(opt.dim);

  SweepSummary sum;
  sum.dim = opt.dim;
  sum.per_genus.assign(opt.max_genus + 1, GenusStats{});
  std::mutex merge_mutex;

  auto merge = [&](int genus, const detail::CheckOutcome& one) {
    std::lock_guard<std::mutex> lock(merge_mutex);
    GenusStats& gs = sum.per_genus[genus];
    ++gs.count;
    gs.gwc_violations += one.gwc_violations;
    gs.ewc_violations += one.ewc_violations;
    if (!gs.min_slack || detail::witness_less(one.witness, *gs.min_slack))
      gs.min_slack = one.witness;
    ++sum.total_checked;
    if (one.gwc_violations + one.ewc_violations > 0) {
      sum.violations += one.gwc_violations + one.ewc_violations;
      sum.violation_witnesses.push_back(one.witness);
    }
  };

  MonomialOrder order = MonomialOrder::grlex_default(opt.dim);
  if (!opt.random_mode) {
    for_each_tree_node(
        opt.dim, opt.max_genus, order, opt.jobs,
        [&](const TreeNode& node, int genus) {
          long long e = static_cast<long long>(node.generators.size());
          long long c = c_count(node.semigroup);
          long long n = c - genus;
          merge(genus,
                detail::check_one(opt, opt.dim, e, n, c, node.semigroup,
                                  node.semigroup.holes()));
        });
  } else {
    std::atomic<int> next_trial{0};
    auto worker = [&]() {
      while (true) {
        int trial = next_trial.fetch_add(1);
        if (trial >= opt.trials) break;
        std::mt19937_64 rng(opt.seed + static_cast<std::uint64_t>(trial));
        WalkState walk(opt.dim, order);
        for (int genus = 1; genus <= opt.max_genus; ++genus) {
          while (walk.options() == 0) {  // leaf: restart this walk
            walk = WalkState(opt.dim, order);
            for (int s = 0; s < genus - 1; ++s) {
              if (walk.options() == 0) break;
              walk.remove_generator(
                  walk.option(static_cast<std::size_t>(rng() % walk.options())));
            }
          }
          walk.remove_generator(
              walk.option(static_cast<std::size_t>(rng() % walk.options())));
          merge(genus, detail::check_one(opt, opt.dim, walk.e(), walk.n(),
                                         walk.c(), walk, walk.holes()));
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < opt.jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  std::sort(sum.violation_witnesses.begin(), sum.violation_witnesses.end(),
            detail::witness_less);
  return sum;
}

}  // namespace gns
