#include "doctest.h"

#include "toricfano/altmann.hpp"
#include "toricfano/polygon.hpp"

#include <set>

using namespace toricfano;

namespace {

using Ray = std::vector<Int>;

std::multiset<Ray> ray_set(const LiftedCone &c) { return {c.rays.begin(), c.rays.end()}; }

} // namespace

TEST_CASE("pentagon lift") {
  const auto f = make_facet_polygon({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {0, -1}});
  const auto ds = maximal_decompositions(f);
  REQUIRE(ds.size() == 1);
  const auto cone = minkowski_lift(f, align_to(f, ds[0]));
  CHECK(cone.summand_count == 2);
  CHECK(cone.rays.size() == 5);
  CHECK(ray_set(cone) == std::multiset<Ray>{{0, 0, 1, 0}, {-1, 0, 1, 0}, {0, -1, 1, 0}, {0, 0, 0, 1}, {1, 1, 0, 1}});
}

TEST_CASE("aligned summands add up to the polygon") {
  const auto f = make_facet_polygon({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}});
  for (const auto &d : maximal_decompositions(f)) {
    const auto aligned = align_to(f, d);
    CHECK(minkowski_sum(aligned.summands) == f.polygon);
    const auto cone = minkowski_lift(f, aligned);
    CHECK(cone.summand_count == d.summands.size());
    std::size_t total = 0;
    for (const auto &s : d.summands) total += s.vertices.size();
    CHECK(cone.rays.size() == total);
    for (std::size_t i = 0; i < cone.rays.size(); ++i) {
      // Exactly one e_k coordinate is set, the one of the ray's summand.
      for (std::size_t k = 0; k < cone.summand_count; ++k)
        CHECK(cone.rays[i][2 + k] == (k == cone.summand_index[i] ? 1 : 0));
    }
  }
}

TEST_CASE("lift rejects misaligned summands") {
  const auto f = make_facet_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  MinkowskiDecomposition d;
  d.summands = {polygon_hull({{5, 5}, {6, 5}}), polygon_hull({{0, 0}, {0, 1}})};
  CHECK_THROWS_AS(minkowski_lift(f, d), std::invalid_argument);
  CHECK_NOTHROW(minkowski_lift(f, align_to(f, d)));
}
