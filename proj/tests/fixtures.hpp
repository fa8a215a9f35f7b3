#pragma once

// Shared polytopes and random generators for the unit, property and
// acceptance tests.

#include "toricfano/intlinalg.hpp"
#include "toricfano/polytope.hpp"

#include <random>
#include <vector>

namespace fixtures {

using toricfano::Int;
using toricfano::IntMatrix;
using toricfano::LatticePolytope;
using toricfano::Vec3;

/// Pyramid with apex (0,0,-1) over the pentagon at height 1.
inline std::vector<Vec3> pyramid() {
  return {{1, 0, 1}, {1, 1, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}, {0, 0, -1}};
}

/// Fan of P^3.
inline std::vector<Vec3> simplex() { return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}; }

/// conv(+-e_i): fan of P^1 x P^1 x P^1.
inline std::vector<Vec3> octahedron() { return {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}; }

inline std::vector<Vec3> cube() {
  std::vector<Vec3> v;
  for (Int x : {-1, 1})
    for (Int y : {-1, 1})
      for (Int z : {-1, 1}) v.push_back({x, y, z});
  return v;
}

/// A reflexive tetrahedron whose top facet conv{(1,0,1),(0,1,1),(-1,-1,1)}
/// has unitary edges extending to bases, but vertices of determinant 3.
inline std::vector<Vec3> rigid_face_tetrahedron() { return {{1, 0, 1}, {0, 1, 1}, {-1, -1, 1}, {0, 0, -1}}; }

// Entries of the reflexive 3-polytope database, with the lists they belong to.
inline std::vector<Vec3> db2() { return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-2, -2, -1}}; }
/// In L_isol and L_nodes.
inline std::vector<Vec3> db4() { return {{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {0, 0, 1}, {-1, 0, -1}}; }
/// In L_aft, not L_indec.
inline std::vector<Vec3> db15() { return {{1, 0, 0}, {0, 1, 0}, {-2, -1, 0}, {0, 0, 1}, {0, 1, -1}}; }
/// In L_low.
inline std::vector<Vec3> db1946() { return {{1, 0, 0}, {0, 1, 0}, {0, 1, 4}, {-2, -3, -6}}; }

/// Product of random elementary operations; determinant +-1.
inline IntMatrix random_unimodular(std::mt19937_64 &rng, int steps = 12) {
  IntMatrix u = IntMatrix::identity(3);
  std::uniform_int_distribution<int> idx(0, 2), k(-2, 2), coin(0, 3);
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(idx(rng));
    const auto j = static_cast<std::size_t>(idx(rng));
    const int c = coin(rng);
    if (c == 0) {
      u.swap_rows(i, j);
    } else if (c == 1) {
      u.negate_row(i);
    } else if (i != j) {
      u.add_row_multiple(i, j, k(rng));
    }
  }
  return u;
}

inline std::vector<Vec3> apply(const IntMatrix &u, const std::vector<Vec3> &pts) {
  std::vector<Vec3> out;
  for (const auto &p : pts) {
    Vec3 q{};
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) q[r] += u(r, c) * p[c];
    out.push_back(q);
  }
  return out;
}

/// Reflexive polytopes from hulls of random primitive points in [-2,2]^3,
/// by rejection. Deterministic for a given seed.
inline std::vector<LatticePolytope> random_reflexive(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> npts(4, 9), box(0, 2);
  std::vector<LatticePolytope> out;
  while (out.size() < count) {
    const int r = box(rng) == 0 ? 2 : 1;
    std::uniform_int_distribution<int> c(-r, r);
    std::vector<Vec3> pts;
    const int n = npts(rng);
    while (static_cast<int>(pts.size()) < n) {
      Vec3 v{c(rng), c(rng), c(rng)};
      if (v == Vec3{0, 0, 0} || !toricfano::is_primitive(v)) continue;
      pts.push_back(v);
    }
    try {
      auto p = toricfano::convex_hull(pts);
      if (toricfano::is_fano(p) && toricfano::is_reflexive(p)) out.push_back(std::move(p));
    } catch (const toricfano::DegenerateInput &) {
    }
  }
  return out;
}

} // namespace fixtures
