#include "doctest.h"

#include "fixtures.hpp"
#include "toricfano/batch.hpp"
#include "toricfano/db.hpp"
#include "toricfano/polytope.hpp"

#include <sstream>

using namespace toricfano;

namespace {

std::vector<PolytopeRecord> palp(const std::string &text, PalpOptions opts = {}) {
  std::istringstream in(text);
  return parse_palp(in, opts);
}

} // namespace

TEST_CASE("PALP blocks in both orientations") {
  const auto recs = palp("4 3\n1 0 0\n0 1 0\n0 0 1\n-1 -1 -1\n"
                         "3 5 M:7 5 N:7 5\n1 0 0 -1 0\n0 1 0 -1 0\n0 0 1 0 -1\n");
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].id == 1);
  CHECK(recs[0].vertices == fixtures::simplex());
  CHECK(recs[1].id == 2);
  CHECK(recs[1].vertices == std::vector<Vec3>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, 0}, {0, 0, -1}});
}

TEST_CASE("PALP 3x3 blocks") {
  const std::string block = "3 3\n1 0 -1\n0 1 -1\n0 0 1\n";
  const auto recs = palp(block);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].vertices == std::vector<Vec3>{{1, 0, 0}, {0, 1, 0}, {-1, -1, 1}});
  CHECK_THROWS_AS(palp(block, PalpOptions{true}), InputError);
}

TEST_CASE("PALP errors") {
  CHECK_THROWS_AS(palp("4 3\n1 0 0\n0 1 0\n"), InputError);
  CHECK_THROWS_AS(palp("4 3\n1 0 0\n0 1\n0 0 1\n-1 -1 -1\n"), InputError);
  CHECK_THROWS_AS(palp("4 3\n1 0 0\n0 x 0\n0 0 1\n-1 -1 -1\n"), InputError);
  CHECK_THROWS_AS(palp("4 4\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n"), InputError);
  CHECK_THROWS_AS(palp("hello\n"), InputError);
  CHECK(palp("").empty());
}

TEST_CASE("id sidecar") {
  auto recs = palp("4 3\n1 0 0\n0 1 0\n0 0 1\n-1 -1 -1\n4 3\n1 0 0\n0 1 0\n0 0 1\n-2 -2 -1\n");
  std::istringstream ok("10\n20\n");
  apply_id_sidecar(recs, ok);
  CHECK(recs[0].id == 10);
  CHECK(recs[1].id == 20);
  std::istringstream short_list("1\n");
  CHECK_THROWS_AS(apply_id_sidecar(recs, short_list), InputError);
  std::istringstream dup("3\n3\n");
  CHECK_THROWS_AS(apply_id_sidecar(recs, dup), InputError);
}

TEST_CASE("JSON records round trip") {
  const std::vector<PolytopeRecord> recs{{3, fixtures::pyramid()}, {9, fixtures::cube()}};
  std::stringstream buf;
  write_records_json(recs, buf);
  CHECK(parse_json(buf) == recs);

  std::istringstream bad_vertex(R"([{"id": 1, "vertices": [[1, 0]]}])");
  CHECK_THROWS_AS(parse_json(bad_vertex), InputError);
  std::istringstream dup(R"([{"id": 1, "vertices": [[1, 0, 0]]}, {"id": 1, "vertices": [[1, 0, 0]]}])");
  CHECK_THROWS_AS(parse_json(dup), InputError);
  std::istringstream garbage("{not json");
  CHECK_THROWS_AS(parse_json(garbage), InputError);
}

TEST_CASE("expected lists") {
  NamedLists lists;
  for (auto n : kListNames) lists[std::string(n)] = {};
  lists["L_smooth"] = {5, 1};
  std::stringstream buf;
  write_lists_json(lists, buf);
  const auto back = load_expected_lists(buf);
  CHECK(back.at("L_smooth") == std::vector<Int>{1, 5});

  std::istringstream missing(R"({"L_smooth": [1]})");
  CHECK_THROWS_AS(load_expected_lists(missing), InputError);
  std::istringstream out_of_range(
      R"({"L_smooth": [4320], "L_isol": [], "L_nodes": [], "L_low": [], "L_indec": [], "L_aft": []})");
  CHECK_THROWS_AS(load_expected_lists(out_of_range), InputError);
}

TEST_CASE("reports round trip and are deterministic") {
  std::vector<ClassificationReport> reports;
  reports.push_back(classify(convex_hull(fixtures::db15()), 15));
  reports.push_back(classify(convex_hull(fixtures::pyramid()), 2));
  reports.push_back(classify(convex_hull(std::vector<Vec3>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -2}}), 8));

  std::stringstream a, b;
  write_reports(reports, a, ReportFormat::Json);
  std::reverse(reports.begin(), reports.end());
  write_reports(reports, b, ReportFormat::Json);
  CHECK(a.str() == b.str());

  const auto back = read_reports_json(a);
  REQUIRE(back.size() == 3);
  CHECK(back[0].id == 2);
  for (const auto &r : back) {
    const auto it = std::find_if(reports.begin(), reports.end(), [&](const auto &x) { return x.id == r.id; });
    REQUIRE(it != reports.end());
    CHECK(r == *it);
  }

  std::stringstream csv;
  write_reports(reports, csv, ReportFormat::Csv);
  const std::string text = csv.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);
  CHECK(text.find("NA") != std::string::npos);
}
