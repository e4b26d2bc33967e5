#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "gns/enumeration.hpp"
#include "gns/io.hpp"

using namespace gns;

TEST_CASE("hole-set files") {
  SECTION("writer emits canonical order, reader accepts any order") {
    std::istringstream in(R"({"holes": [[3,2],[0,1],[1,0],[1,1]], "dim": 2})");
    // (3,2) alone would not validate; use a closed set instead
    std::istringstream closed(R"({"dim": 2, "holes": [[1,1],[1,0],[0,1]]})");
    CHECK_THROWS_AS(read_hole_set(in), error);
    Gns s = read_hole_set(closed);
    CHECK(write_hole_set(s) == R"({"dim":2,"holes":[[0,1],[1,0],[1,1]]})");
  }
  SECTION("round trip on random semigroups") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      int d = 1 + static_cast<int>(rng() % 3);
      Gns s = random_gns(d, static_cast<int>(rng() % 12), rng());
      std::istringstream in(write_hole_set(s));
      CHECK(read_hole_set(in) == s);
    }
  }
  SECTION("malformed input") {
    std::istringstream bad1("not json");
    CHECK_THROWS_MATCHES(read_hole_set(bad1), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                           return e.code() == errc::io_error;
                         }));
    std::istringstream bad2(R"({"dim": 2})");
    CHECK_THROWS_AS(read_hole_set(bad2), error);
    std::istringstream bad3(R"({"dim": 2, "holes": [["a"]]})");
    CHECK_THROWS_AS(read_hole_set(bad3), error);
  }
}

TEST_CASE("ideal files") {
  SECTION("generators are minimalized on read") {
    std::istringstream in(
        R"({"vars": 2, "generators": [[5,0],[6,1],[3,3],[0,5],[4,4]]})");
    MonomialIdeal I = read_ideal(in);
    CHECK(I == MonomialIdeal(2, {{5, 0}, {3, 3}, {0, 5}}));
    CHECK(write_ideal(I) ==
          R"({"vars":2,"generators":[[0,5],[5,0],[3,3]]})");
  }
  SECTION("round trip") {
    MonomialIdeal I(3, {{2, 0, 0}, {0, 3, 0}, {0, 0, 1}});
    std::istringstream in(write_ideal(I));
    CHECK(read_ideal(in) == I);
  }
}

TEST_CASE("report rows") {
  Gns fig = Gns::validate_hole_set(
      2, {{0, 1}, {1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 1}, {3, 0},
          {3, 2}});
  SECTION("the running example row carries the known invariants") {
    ReportRow r = make_report_row(fig);
    CHECK(r.e == 8);
    CHECK(r.n == 7);
    CHECK(r.c == 16);
    CHECK(r.gwc_slack == 24);
    std::ostringstream out;
    emit_report({r}, ReportFormat::csv, out);
    CHECK(out.str() ==
          std::string(kCsvHeader) + "\n" +
              "2,9,8,7,16,4,0,0,0,0,0,0,0,56,32,24,,"
              "\"[[0,1],[1,0],[1,1],[1,2],[2,1],[3,0],[1,3],[1,4],[3,2]]\"\n");
  }
  SECTION("empty result set emits the header only") {
    std::ostringstream out;
    emit_report({}, ReportFormat::csv, out);
    CHECK(out.str() == std::string(kCsvHeader) + "\n");
  }
  SECTION("output is byte-stable") {
    std::vector<MonomialOrder> orders = all_priority_orders(2,
                                                            OrderKind::grlex);
    ReportRow r = make_report_row(fig, orders);
    std::ostringstream a, b;
    emit_report({r, r}, ReportFormat::json_lines, a);
    emit_report({r, r}, ReportFormat::json_lines, b);
    CHECK(a.str() == b.str());
    CHECK(a.str().find("\"ewc\":[{\"order\":\"grlex[1,2]\"") !=
          std::string::npos);
  }
  SECTION("jsonl rows parse back") {
    ReportRow r = make_report_row(fig);
    std::ostringstream out;
    emit_report({r}, ReportFormat::json_lines, out);
    nlohmann::json j = nlohmann::json::parse(out.str());
    CHECK(j["e"] == 8);
    CHECK(j["gwc_lhs"] == 56);
    CHECK(j["holes"].size() == 9);
  }
}
