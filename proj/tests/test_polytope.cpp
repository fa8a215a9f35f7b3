#include "doctest.h"

#include "fixtures.hpp"
#include "toricfano/polytope.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace toricfano;

namespace {

std::multiset<std::size_t> facet_sizes(const LatticePolytope &p) {
  std::multiset<std::size_t> s;
  for (const auto &f : p.facets()) s.insert(f.vertices.size());
  return s;
}

std::set<Vec3> vertex_set(const LatticePolytope &p) { return {p.vertices().begin(), p.vertices().end()}; }

} // namespace

TEST_CASE("pyramid hull") {
  const auto p = convex_hull(fixtures::pyramid());
  CHECK(p.vertices().size() == 6);
  CHECK(p.edges().size() == 10);
  CHECK(facet_sizes(p) == std::multiset<std::size_t>{3, 3, 3, 3, 3, 5});
  CHECK(is_fano(p));
  CHECK(is_reflexive(p));
  CHECK(normalized_volume(p) == 10);
}

TEST_CASE("hull discards interior and non-vertex boundary points") {
  auto pts = fixtures::cube();
  pts.push_back({0, 0, 0});
  pts.push_back({1, 0, 0});
  pts.push_back({1, 1, 0});
  const auto p = convex_hull(pts);
  CHECK(p.vertices().size() == 8);
  CHECK(p.facets().size() == 6);
  for (const auto &f : p.facets()) CHECK(f.vertices.size() == 4);
}

TEST_CASE("degenerate input is rejected") {
  CHECK_THROWS_AS(convex_hull(std::vector<Vec3>{{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}}), DegenerateInput);
  CHECK_THROWS_AS(convex_hull(std::vector<Vec3>{{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {2, 3, 0}}), DegenerateInput);
  CHECK_THROWS_AS(convex_hull(std::vector<Vec3>{}), DegenerateInput);
}

TEST_CASE("Fano and reflexive predicates") {
  CHECK(is_fano(convex_hull(fixtures::simplex())));
  CHECK(is_reflexive(convex_hull(fixtures::simplex())));
  // Origin on the boundary.
  CHECK_FALSE(is_fano(convex_hull(std::vector<Vec3>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
  // Non-primitive vertex.
  CHECK_FALSE(is_fano(convex_hull(std::vector<Vec3>{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}})));
  // Fano but with a facet at height 2.
  const auto p = convex_hull(std::vector<Vec3>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -2}});
  CHECK(is_fano(p));
  CHECK_FALSE(is_reflexive(p));
  CHECK_THROWS_AS(polar(p), std::invalid_argument);
}

TEST_CASE("normalized volumes") {
  CHECK(normalized_volume(convex_hull(fixtures::simplex())) == 4);
  CHECK(normalized_volume(convex_hull(fixtures::octahedron())) == 8);
  CHECK(normalized_volume(convex_hull(fixtures::cube())) == 48);
  CHECK(normalized_volume(convex_hull(std::vector<Vec3>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 1);
}

TEST_CASE("polar of cube is octahedron") {
  const auto c = convex_hull(fixtures::cube());
  const auto o = convex_hull(fixtures::octahedron());
  CHECK(vertex_set(polar(c)) == vertex_set(o));
  CHECK(vertex_set(polar(o)) == vertex_set(c));
}

TEST_CASE("lattice point counts") {
  const auto cube = convex_hull(fixtures::cube());
  CHECK(lattice_points(cube, 0) == 1);
  CHECK(lattice_points(cube, 1) == 27);
  CHECK(lattice_points(cube, 2) == 125);
  CHECK(interior_lattice_points(cube, 1) == 1);
  CHECK(lattice_points(convex_hull(fixtures::octahedron()), 1) == 7);
  CHECK(lattice_points(convex_hull(fixtures::simplex()), 1) == 5);
  CHECK(lattice_point_list(cube, 1).size() == 27);
}

TEST_CASE("parallel lattice counting matches the serial reference") {
  for (const auto &p : fixtures::random_reflexive(40, 17)) {
    for (Int m = 0; m <= 4; ++m) CHECK(lattice_points(p, m) == lattice_points_reference(p, m));
    // Reflexive: the interior of mP is (m-1)P.
    for (Int m = 1; m <= 4; ++m) CHECK(interior_lattice_points(p, m) == lattice_points(p, m - 1));
  }
}

TEST_CASE("facets are consistently oriented") {
  for (const auto &p : fixtures::random_reflexive(40, 23)) {
    const auto V = static_cast<Int>(p.vertices().size());
    const auto E = static_cast<Int>(p.edges().size());
    const auto F = static_cast<Int>(p.facets().size());
    CHECK(V - E + F == 2);
    for (std::size_t i = 0; i < p.facets().size(); ++i) {
      const auto &f = p.facet(i);
      for (const auto &v : p.vertices()) CHECK(dot(f.normal, v) <= f.height);
      for (std::size_t k : f.vertices) CHECK(dot(f.normal, p.vertex(k)) == f.height);
      CHECK(p.facet_points(i).size() >= f.vertices.size());
    }
    for (const auto &e : p.edges()) CHECK(e.facets[0] != e.facets[1]);
  }
}

TEST_CASE("transform and lattice length") {
  std::mt19937_64 rng(31);
  const auto p = convex_hull(fixtures::pyramid());
  for (int t = 0; t < 20; ++t) {
    const auto u = fixtures::random_unimodular(rng);
    const auto q = transform(p, u);
    CHECK(q.facets().size() == p.facets().size());
    CHECK(normalized_volume(q) == normalized_volume(p));
    CHECK(vertex_set(q) == vertex_set(convex_hull(fixtures::apply(u, fixtures::pyramid()))));
  }
  CHECK(lattice_length(Vec3{0, 0, 0}, Vec3{2, 4, -6}) == 2);
  CHECK(lattice_length(Vec3{1, 0, 1}, Vec3{0, 1, 1}) == 1);
}
