#include "doctest.h"

#include "fixtures.hpp"
#include "toricfano/batch.hpp"

using namespace toricfano;

TEST_CASE("parallel batch equals serial batch") {
  std::vector<PolytopeRecord> recs;
  Int id = 1;
  for (const auto &p : fixtures::random_reflexive(60, 77)) recs.push_back({id++, p.vertices()});
  recs.push_back({id++, fixtures::pyramid()});
  recs.push_back({id++, fixtures::db15()});
  const auto serial = classify_records_serial(recs, 3);
  for (int jobs : {1, 2, 4}) CHECK(classify_records(recs, jobs, 3) == serial);
}

TEST_CASE("batch reports failures with the record id") {
  std::vector<PolytopeRecord> recs{{1, fixtures::simplex()}, {2, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}};
  try {
    classify_records(recs, 2, 0);
    FAIL("expected an InputError");
  } catch (const InputError &e) {
    CHECK(std::string(e.what()).find("polytope 2") != std::string::npos);
  }
}

TEST_CASE("lists and diffs") {
  std::vector<PolytopeRecord> recs{{1, fixtures::simplex()}, {4, fixtures::db4()}, {15, fixtures::db15()}};
  const auto lists = compute_lists(classify_records(recs, 1, 0));
  CHECK(lists.at("L_smooth") == std::vector<Int>{1});
  CHECK(lists.at("L_nodes") == std::vector<Int>{4});
  CHECK(lists.at("L_aft") == std::vector<Int>{15});

  NamedLists expected = lists;
  expected["L_aft"] = {15, 16};
  const auto diffs = diff_lists(lists, expected);
  REQUIRE(diffs.size() == 7);
  for (const auto &d : diffs) {
    if (d.name == "L_aft" || d.name == "L_indec|L_aft") {
      CHECK(d.missing == std::vector<Int>{16});
      CHECK_FALSE(d.counts_match());
    } else {
      CHECK(d.sets_match());
    }
  }
}
