// Command-line front end: hole-set and ideal file reports, family
// constructors, enumeration, and conjecture sweeps.
//
// Exit codes: 0 all checks hold, 1 a conjecture violation witness was
// found, 2 invalid input.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gns/enumeration.hpp"
#include "gns/families.hpp"
#include "gns/invariants.hpp"
#include "gns/io.hpp"
#include "gns/monomial_ideal.hpp"
#include "gns/sweep.hpp"
#include "gns/thickening.hpp"
#include "gns/wilf.hpp"

namespace {

using namespace gns;

ReportFormat parse_format(const std::string& name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "jsonl") return ReportFormat::json_lines;
  throw error(errc::bad_parameters, "format must be csv or jsonl");
}

void emit_rows(const std::vector<ReportRow>& rows, const std::string& format,
               const std::string& output) {
  ReportFormat f = parse_format(format);
  if (output.empty() || output == "-") {
    emit_report(rows, f, std::cout);
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw error(errc::io_error, "cannot open " + output);
  emit_report(rows, f, out);
}

std::string verdict(bool holds) { return holds ? "holds" : "VIOLATED"; }

int cmd_check(const std::string& path, const std::string& format,
              const std::string& output) {
  Gns S = read_hole_set_file(path);
  WilfReport r = generalized_wilf(S);
  if (!format.empty()) {
    emit_rows({make_report_row(S)}, format, output);
  } else {
    std::cout << "valid GNS: dim=" << S.dim() << " genus=" << S.genus()
              << "\n"
              << "generalized Wilf: e*n = " << r.lhs << " >= d*c = " << r.rhs
              << " ... " << verdict(r.holds)
              << (r.equality ? " (equality)" : "") << ", slack " << r.slack
              << "\n";
  }
  return r.holds ? 0 : 1;
}

int cmd_invariants(const std::string& path, const std::string& format,
                   const std::string& output) {
  Gns S = read_hole_set_file(path);
  if (!format.empty()) {
    emit_rows({make_report_row(S)}, format, output);
    return 0;
  }
  InvariantRecord v = invariants(S);
  std::cout << "dim=" << S.dim() << " e=" << v.e << " g=" << v.g
            << " n=" << v.n << " c=" << v.c << " m=" << v.m << "\n";
  std::cout << "generators:";
  for (const Point& p : minimal_generators(S)) std::cout << " " << p;
  std::cout << "\n";
  return 0;
}

int cmd_classify(const std::string& path) {
  Gns S = read_hole_set_file(path);
  Classification c = classify(S);
  std::cout << "frobenius="
            << (c.frobenius_element ? c.frobenius_element->str() : "none")
            << " symmetric=" << c.is_symmetric
            << " pseudo_symmetric=" << c.is_pseudo_symmetric
            << " irreducible=" << c.is_irreducible
            << " ordinary=" << c.is_ordinary << " monomial=" << c.is_monomial
            << " minimal_multiplicity=" << c.has_minimal_multiplicity << "\n";
  std::cout << "pf:";
  for (const Point& p : c.pf) std::cout << " " << p;
  std::cout << "\neh:";
  for (const Point& p : c.eh) std::cout << " " << p;
  std::cout << "\naxes:";
  for (int a : c.axes) std::cout << " " << a;
  std::cout << "\nspan_rank=" << c.span_rank << "\n";
  return 0;
}

int cmd_sweep(const SweepOptions& opt, const std::string& emit_rows_path,
              const std::string& format) {
  if (!emit_rows_path.empty()) {
    if (opt.random_mode)
      throw error(errc::bad_parameters,
                  "--emit-rows is available in --mode all only");
    std::vector<ReportRow> rows;
    std::vector<MonomialOrder> orders;
    if (opt.ewc || opt.ewc_strict)
      orders = opt.orders.empty() ? default_ewc_orders(opt.dim) : opt.orders;
    for_each_tree_node(opt.dim, opt.max_genus,
                       MonomialOrder::grlex_default(opt.dim), 1,
                       [&](const TreeNode& node, int) {
                         rows.push_back(make_report_row(node.semigroup, orders,
                                                        opt.ewc_strict));
                       });
    emit_rows(rows, format.empty() ? "csv" : format, emit_rows_path);
  }

  SweepSummary sum = run_sweep(opt);
  std::cout << "sweep dim=" << opt.dim << " mode="
            << (opt.random_mode ? "random" : "all")
            << " max-genus=" << opt.max_genus;
  if (opt.random_mode) std::cout << " trials=" << opt.trials;
  if (opt.ewc || opt.ewc_strict) {
    std::cout << " ewc-orders=";
    std::vector<MonomialOrder> orders =
        opt.orders.empty() ? default_ewc_orders(opt.dim) : opt.orders;
    std::cout << orders.size();
  }
  std::cout << "\n";
  std::cout << "genus count gwc_viol ewc_viol min_slack\n";
  for (std::size_t g = 0; g < sum.per_genus.size(); ++g) {
    const GenusStats& s = sum.per_genus[g];
    std::cout << g << " " << s.count << " " << s.gwc_violations << " "
              << s.ewc_violations << " ";
    if (s.min_slack)
      std::cout << s.min_slack->slack;
    else
      std::cout << "-";
    std::cout << "\n";
  }
  std::cout << "total checked: " << sum.total_checked
            << ", violations: " << sum.violations << "\n";
  for (const SweepWitness& w : sum.violation_witnesses) {
    std::cout << "violation witness (slack " << w.slack << "): holes";
    for (const Point& p : w.holes) std::cout << " " << p;
    std::cout << "\n";
  }
  return sum.violations == 0 ? 0 : 1;
}

Point point_of(const std::vector<int>& coords) {
  Point p;
  for (int x : coords) p.c.push_back(x);
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized numerical semigroups and the Wilf conjectures"};
  app.require_subcommand(1);

  std::string hole_path, ideal_path, format, output;
  int dim = 2, genus = 1, axis = 1, kk = 0, jobs = 1, trials = 50, cap = 10;
  std::uint64_t seed = 1;

  auto* check = app.add_subcommand("check", "validate a hole-set file and "
                                            "check the Generalized Wilf "
                                            "Conjecture");
  check->add_option("hole-file", hole_path)->required();
  check->add_option("--format", format, "csv or jsonl row output");
  check->add_option("--output", output, "write rows here instead of stdout");

  auto* inv = app.add_subcommand("invariants",
                                 "e, g, n, c, m and the minimal generators");
  inv->add_option("hole-file", hole_path)->required();
  inv->add_option("--format", format);
  inv->add_option("--output", output);

  auto* cls = app.add_subcommand("classify",
                                 "Frobenius element, symmetry, special gaps");
  cls->add_option("hole-file", hole_path)->required();

  auto* thick = app.add_subcommand("thicken", "k-thickening along an axis");
  thick->add_option("hole-file", hole_path)->required();
  thick->add_option("--axis", axis, "1-based axis of the new ambient space")
      ->required();
  thick->add_option("-k", kk, "number of stacked copies minus one")
      ->required();

  auto* restr = app.add_subcommand("restrict",
                                   "axes and the restriction to the hole "
                                   "span");
  restr->add_option("hole-file", hole_path)->required();

  auto* enumerate = app.add_subcommand("enumerate",
                                       "all semigroups of one genus");
  bool count_only = false, emit = false;
  enumerate->add_option("-d", dim)->required();
  enumerate->add_option("-g", genus)->required();
  enumerate->add_flag("--count-only", count_only, "no per-semigroup output");
  enumerate->add_flag("--emit", emit,
                      "stream one canonical hole-set JSON per line (serial)");
  enumerate->add_option("--jobs", jobs);

  auto* random = app.add_subcommand("random", "seeded random semigroup");
  int retries = 10000;
  random->add_option("-d", dim)->required();
  random->add_option("-g", genus)->required();
  random->add_option("--seed", seed);
  random->add_option("--retries", retries, "restart budget for dead ends");

  auto* sweep = app.add_subcommand("sweep", "conjecture sweep over genera");
  int max_genus = 5;
  std::string mode = "all", emit_rows_path;
  bool ewc = false, ewc_strict = false;
  sweep->add_option("-d", dim)->required();
  sweep->add_option("--max-genus", max_genus)->required();
  sweep->add_option("--mode", mode)->check(CLI::IsMember({"all", "random"}));
  sweep->add_option("--trials", trials, "random semigroups per genus");
  sweep->add_flag("--ewc", ewc, "also check the Extended Wilf Conjecture");
  sweep->add_flag("--ewc-strict", ewc_strict,
                  "literal N(Fb)+1 Extended Wilf right-hand side");
  sweep->add_option("--jobs", jobs);
  sweep->add_option("--seed", seed);
  sweep->add_option("--emit-rows", emit_rows_path,
                    "write one report row per semigroup (mode all)");
  sweep->add_option("--format", format, "row format for --emit-rows");

  auto* ideal = app.add_subcommand("ideal", "zero-dimensional monomial "
                                            "ideal computations");
  ideal->require_subcommand(1);
  auto* iwilf = ideal->add_subcommand("wilf", "d l(R/I) <= l(I/I^2)");
  iwilf->add_option("ideal-file", ideal_path)->required();
  auto* ired = ideal->add_subcommand("reduction",
                                     "reduction number against the "
                                     "pure-power ideal J");
  ired->add_option("ideal-file", ideal_path)->required();
  ired->add_option("--cap", cap);

  auto* family = app.add_subcommand("family", "constructors for the "
                                              "equality and positive "
                                              "families");
  family->require_subcommand(1);
  std::vector<int> fpoint, hvec, gaps, qvec;
  int fi = 1, fk = 2, fh = 2, fa = 2, fb = 3, fj = 1;
  auto* ford = family->add_subcommand("ordinary", "{0} u (N^d \\ C(f))");
  ford->add_option("--f", fpoint, "coordinates of f, comma separated")
      ->required()
      ->delimiter(',');
  auto* faxis = family->add_subcommand("axis",
                                       "holes e_i, e_i+e_k, ..., "
                                       "e_i+(h-1)e_k");
  faxis->set_help_flag("--help");  // frees --h for the family parameter
  faxis->add_option("-d", dim)->required();
  faxis->add_option("-i", fi)->required();
  faxis->add_option("-k", fk)->required();
  faxis->add_option("--h", fh)->required();
  auto* fbox = family->add_subcommand("box",
                                      "numerical semigroup gaps thickened "
                                      "into a box");
  fbox->add_option("--gaps", gaps, "gap set of the numerical semigroup")
      ->delimiter(',');
  fbox->add_option("-j", fj, "axis carrying the numerical semigroup")
      ->required();
  fbox->add_option("--q", qvec, "box bounds for the other axes")
      ->delimiter(',');
  auto* fe2d = family->add_subcommand("e2d", "the e(S) = 2d generator "
                                             "family");
  fe2d->set_help_flag("--help");
  fe2d->add_option("-d", dim)->required();
  fe2d->add_option("-i", fi)->required();
  fe2d->add_option("-a", fa)->required();
  fe2d->add_option("-b", fb)->required();
  fe2d->add_option("--h", hvec, "d-1 entries, comma separated")
      ->required()
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return cmd_check(hole_path, format, output);
    if (*inv) return cmd_invariants(hole_path, format, output);
    if (*cls) return cmd_classify(hole_path);
    if (*thick) {
      Gns S = read_hole_set_file(hole_path);
      std::cout << write_hole_set(thicken(S, axis, kk)) << "\n";
      return 0;
    }
    if (*restr) {
      Gns S = read_hole_set_file(hole_path);
      Restriction r = axes_and_restriction(S);
      nlohmann::ordered_json j;
      j["axes"] = r.axes;
      j["rank"] = r.rank;
      if (r.restricted)
        j["restricted"] = nlohmann::ordered_json::parse(
            write_hole_set(*r.restricted));
      std::cout << j.dump() << "\n";
      return 0;
    }
    if (*enumerate) {
      MonomialOrder order = MonomialOrder::grlex_default(dim);
      if (emit) jobs = 1;  // streaming output is serial and deterministic
      long long count = enumerate_genus(
          dim, genus, order,
          [&](const TreeNode& node) {
            if (emit && !count_only)
              std::cout << write_hole_set(node.semigroup) << "\n";
          },
          jobs);
      if (!emit || count_only) std::cout << "count " << count << "\n";
      return 0;
    }
    if (*random) {
      std::cout << write_hole_set(random_gns(dim, genus, seed, retries))
                << "\n";
      return 0;
    }
    if (*sweep) {
      SweepOptions opt;
      opt.dim = dim;
      opt.max_genus = max_genus;
      opt.random_mode = mode == "random";
      opt.trials = trials;
      opt.ewc = ewc;
      opt.ewc_strict = ewc_strict;
      opt.jobs = jobs;
      opt.seed = seed;
      return cmd_sweep(opt, emit_rows_path, format);
    }
    if (*iwilf) {
      MonomialIdeal I = read_ideal_file(ideal_path);
      WilfReport r = verify_monomial_wilf(I);
      CiAnalysis ci = ci_analysis(I);
      std::cout << "l(R/I)=" << r.rhs / I.vars() << " l(I/I^2)=" << r.lhs
                << "\n"
                << "monomial Wilf: d*l(R/I) = " << r.rhs
                << " <= l(I/I^2) = " << r.lhs << " ... " << verdict(r.holds)
                << (r.equality ? " (equality)" : "") << "\n"
                << "complete intersection: " << (ci.is_ci ? "yes" : "no")
                << ", J = " << write_ideal(ci.j) << "\n";
      if (reduction_number(I, ci.j, 1)) {
        PropIjReport p = verify_prop_ij(I);
        std::cout << "slack decomposition: l(I/I^2) - d*l(R/I) = "
                  << p.wilf_slack << " = l(R/J) - l(R/I) = " << p.length_defect
                  << "\n";
      }
      return r.holds ? 0 : 1;
    }
    if (*ired) {
      MonomialIdeal I = read_ideal_file(ideal_path);
      CiAnalysis ci = ci_analysis(I);
      std::optional<int> r = reduction_number(I, ci.j, cap);
      std::cout << "J = " << write_ideal(ci.j) << "\n";
      if (r)
        std::cout << "reduction number " << *r << "\n";
      else
        std::cout << "no reduction number <= " << cap << "\n";
      return 0;
    }
    std::optional<Gns> made;
    if (*ford) made = make_ordinary(point_of(fpoint));
    if (*faxis) made = make_family_axis(dim, fi, fk, fh);
    if (*fbox) made = make_family_box(gaps, fj, qvec);
    if (*fe2d) made = make_family_e2d(dim, fi, fa, fb, hvec);
    if (made) {
      std::cout << write_hole_set(*made) << "\n";
      InvariantRecord v = invariants(*made);
      std::cerr << "e=" << v.e << " g=" << v.g << " n=" << v.n
                << " c=" << v.c << " m=" << v.m << "\n";
      return 0;
    }
  } catch (const gns::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
