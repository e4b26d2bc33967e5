#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gns/error.hpp"
#include "gns/gns.hpp"
#include "gns/invariants.hpp"
#include "gns/monomial_ideal.hpp"
#include "gns/order.hpp"
#include "gns/wilf.hpp"

namespace gns {

// ---------------------------------------------------------------------------
// hole-set and ideal files
// ---------------------------------------------------------------------------

// {"dim": d, "holes": [[...], ...]} -- holes accepted in any order,
// validated on read.
inline Gns read_hole_set(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw error(errc::io_error, std::string("bad hole-set JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("holes") ||
      !j["dim"].is_number_integer() || !j["holes"].is_array())
    throw error(errc::io_error, "expected {\"dim\": d, \"holes\": [[...]]}");
  int dim = j["dim"].get<int>();
  std::vector<Point> holes;
  for (const auto& row : j["holes"]) {
    if (!row.is_array())
      throw error(errc::io_error, "holes must be arrays of integers");
    Point p;
    for (const auto& x : row) {
      if (!x.is_number_integer())
        throw error(errc::io_error, "holes must be arrays of integers");
      p.c.push_back(x.get<Coord>());
    }
    holes.push_back(std::move(p));
  }
  return Gns::validate_hole_set(dim, std::move(holes));
}

// canonical (graded-lex) hole order, compact one-line JSON
inline std::string write_hole_set(const Gns& S) {
  nlohmann::ordered_json j;
  j["dim"] = S.dim();
  j["holes"] = nlohmann::json::array();
  for (const Point& h : S.holes()) j["holes"].push_back(h.c);
  return j.dump();
}

// {"vars": d, "generators": [[...], ...]} -- minimalized on read
inline MonomialIdeal read_ideal(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw error(errc::io_error, std::string("bad ideal JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vars") || !j.contains("generators") ||
      !j["vars"].is_number_integer() || !j["generators"].is_array())
    throw error(errc::io_error,
                "expected {\"vars\": d, \"generators\": [[...]]}");
  int vars = j["vars"].get<int>();
  std::vector<Point> gens;
  for (const auto& row : j["generators"]) {
    if (!row.is_array())
      throw error(errc::io_error, "generators must be arrays of integers");
    Point p;
    for (const auto& x : row) {
      if (!x.is_number_integer())
        throw error(errc::io_error, "generators must be arrays of integers");
      p.c.push_back(x.get<Coord>());
    }
    gens.push_back(std::move(p));
  }
  return MonomialIdeal(vars, std::move(gens));
}

inline std::string write_ideal(const MonomialIdeal& I) {
  nlohmann::ordered_json j;
  j["vars"] = I.vars();
  j["generators"] = nlohmann::json::array();
  for (const Point& g : I.gens()) j["generators"].push_back(g.c);
  return j.dump();
}

inline Gns read_hole_set_file(const std::string& path) {
  if (path == "-") return read_hole_set(std::cin);
  std::ifstream in(path);
  if (!in) throw error(errc::io_error, "cannot open " + path);
  return read_hole_set(in);
}

inline MonomialIdeal read_ideal_file(const std::string& path) {
  if (path == "-") return read_ideal(std::cin);
  std::ifstream in(path);
  if (!in) throw error(errc::io_error, "cannot open " + path);
  return read_ideal(in);
}

// ---------------------------------------------------------------------------
// report rows
// ---------------------------------------------------------------------------

struct EwcEntry {
  std::string order;
  long long lhs = 0;
  long long rhs = 0;
  long long slack = 0;
};

// One row per semigroup: invariants, classification flags, conjecture
// sides. Field order is fixed so emitted output is byte-stable.
struct ReportRow {
  int dim = 0;
  long long genus = 0;
  long long e = 0, n = 0, c = 0, m = 0;
  bool frobenius = false;
  bool symmetric = false, pseudo_symmetric = false, irreducible = false;
  bool ordinary = false, monomial = false, minimal_multiplicity = false;
  long long gwc_lhs = 0, gwc_rhs = 0, gwc_slack = 0;
  std::vector<EwcEntry> ewc;
  std::string holes;  // canonical JSON array
};

inline ReportRow make_report_row(const Gns& S,
                                 const std::vector<MonomialOrder>& ewc_orders =
                                     {},
                                 bool ewc_strict = false) {
  ReportRow r;
  r.dim = S.dim();
  r.genus = S.genus();
  InvariantRecord inv = invariants(S);
  Classification cls = classify(S);
  r.e = inv.e;
  r.n = inv.n;
  r.c = inv.c;
  r.m = inv.m;
  r.frobenius = cls.frobenius_element.has_value();
  r.symmetric = cls.is_symmetric;
  r.pseudo_symmetric = cls.is_pseudo_symmetric;
  r.irreducible = cls.is_irreducible;
  r.ordinary = cls.is_ordinary;
  r.monomial = cls.is_monomial;
  r.minimal_multiplicity = cls.has_minimal_multiplicity;
  WilfReport gwc = generalized_wilf(inv, S.dim());
  r.gwc_lhs = gwc.lhs;
  r.gwc_rhs = gwc.rhs;
  r.gwc_slack = gwc.slack;
  for (const MonomialOrder& o : ewc_orders) {
    WilfReport ew = extended_wilf(S, o, inv.e, ewc_strict);
    r.ewc.push_back({o.name(), ew.lhs, ew.rhs, ew.slack});
  }
  nlohmann::json holes = nlohmann::json::array();
  for (const Point& h : S.holes()) holes.push_back(h.c);
  r.holes = holes.dump();
  return r;
}

enum class ReportFormat { csv, json_lines };

inline const char* kCsvHeader =
    "dim,genus,e,n,c,m,frobenius,symmetric,pseudo_symmetric,irreducible,"
    "ordinary,monomial,minimal_multiplicity,gwc_lhs,gwc_rhs,gwc_slack,ewc,"
    "holes";

inline void emit_row(const ReportRow& r, ReportFormat format,
                     std::ostream& out) {
  if (format == ReportFormat::csv) {
    std::ostringstream ewc;
    for (std::size_t i = 0; i < r.ewc.size(); ++i) {
      if (i) ewc << ";";
      ewc << r.ewc[i].order << "=" << r.ewc[i].lhs << ":" << r.ewc[i].rhs
          << ":" << r.ewc[i].slack;
    }
    out << r.dim << ',' << r.genus << ',' << r.e << ',' << r.n << ',' << r.c
        << ',' << r.m << ',' << r.frobenius << ',' << r.symmetric << ','
        << r.pseudo_symmetric << ',' << r.irreducible << ',' << r.ordinary
        << ',' << r.monomial << ',' << r.minimal_multiplicity << ','
        << r.gwc_lhs << ',' << r.gwc_rhs << ',' << r.gwc_slack << ','
        << ewc.str() << ",\"" << r.holes << "\"\n";
    return;
  }
  nlohmann::ordered_json j;
  j["dim"] = r.dim;
  j["genus"] = r.genus;
  j["e"] = r.e;
  j["n"] = r.n;
  j["c"] = r.c;
  j["m"] = r.m;
  j["frobenius"] = r.frobenius;
  j["symmetric"] = r.symmetric;
  j["pseudo_symmetric"] = r.pseudo_symmetric;
  j["irreducible"] = r.irreducible;
  j["ordinary"] = r.ordinary;
  j["monomial"] = r.monomial;
  j["minimal_multiplicity"] = r.minimal_multiplicity;
  j["gwc_lhs"] = r.gwc_lhs;
  j["gwc_rhs"] = r.gwc_rhs;
  j["gwc_slack"] = r.gwc_slack;
  j["ewc"] = nlohmann::json::array();
  for (const EwcEntry& e : r.ewc) {
    nlohmann::ordered_json je;
    je["order"] = e.order;
    je["lhs"] = e.lhs;
    je["rhs"] = e.rhs;
    je["slack"] = e.slack;
    j["ewc"].push_back(je);
  }
  j["holes"] = nlohmann::json::parse(r.holes);
  out << j.dump() << "\n";
}

// Byte-stable for fixed input: stable field order, canonical hole order,
// CSV gets a header even when there are no rows.
inline void emit_report(const std::vector<ReportRow>& rows,
                        ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::csv) out << kCsvHeader << "\n";
  for (const ReportRow& r : rows) emit_row(r, format, out);
}

}  // namespace gns
