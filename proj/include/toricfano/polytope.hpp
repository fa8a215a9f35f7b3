#pragma once

#include "toricfano/intlinalg.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace toricfano {

class DegenerateInput : public std::invalid_argument {
public:
  explicit DegenerateInput(const std::string &what) : std::invalid_argument(what) {}
};

/// A facet of a 3-polytope: the supporting plane <normal, x> = height with a
/// primitive outward normal. Vertex indices run counterclockwise when viewed
/// from outside (from the tip of the normal).
struct Facet {
  std::vector<std::size_t> vertices;
  Vec3 normal{};
  Int height = 0;
};

/// An edge between vertices a < b, shared by exactly two facets.
struct Edge {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t facets[2] = {0, 0};
};

/// Full-dimensional lattice polytope in Z^3 with its face lattice. Immutable
/// once built; vertices are sorted lexicographically and facets by normal.
class LatticePolytope {
public:
  [[nodiscard]] const std::vector<Vec3> &vertices() const { return vertices_; }
  [[nodiscard]] const std::vector<Facet> &facets() const { return facets_; }
  [[nodiscard]] const std::vector<Edge> &edges() const { return edges_; }
  /// Pairs (f, g), f < g, of facets sharing an edge; parallel to edges().
  [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> facet_adjacency() const;

  [[nodiscard]] const Vec3 &vertex(std::size_t i) const { return vertices_.at(i); }
  [[nodiscard]] const Facet &facet(std::size_t i) const { return facets_.at(i); }

  /// Lattice points of facet i (boundary and relative interior).
  [[nodiscard]] std::vector<Vec3> facet_points(std::size_t i) const;

  friend LatticePolytope convex_hull(std::span<const Vec3> points);

private:
  std::vector<Vec3> vertices_;
  std::vector<Facet> facets_;
  std::vector<Edge> edges_;
};

/// Exact 3D hull. Throws DegenerateInput when the points do not span R^3.
LatticePolytope convex_hull(std::span<const Vec3> points);

bool is_fano(const LatticePolytope &p);
bool is_reflexive(const LatticePolytope &p);

/// Hull of the facet normals. With the normals scaled so that every facet
/// sits at height 1 this is {u : <u, v> <= 1 for all v in P}, and polar is an
/// involution on reflexive polytopes. Throws std::invalid_argument otherwise.
LatticePolytope polar(const LatticePolytope &p);

/// 3! times the Euclidean volume.
Int normalized_volume(const LatticePolytope &p);

/// Number of lattice points in the dilation m*P. Column-wise enumeration,
/// parallelised over the first coordinate with OpenMP.
Int lattice_points(const LatticePolytope &p, Int m);
/// Lattice points strictly inside m*P.
Int interior_lattice_points(const LatticePolytope &p, Int m);

/// Plain bounding-box enumeration with every facet inequality tested per
/// point. Kept as the serial reference for lattice_points.
Int lattice_points_reference(const LatticePolytope &p, Int m);

/// The lattice points of m*P in lexicographic order.
std::vector<Vec3> lattice_point_list(const LatticePolytope &p, Int m);

/// Image of P under x -> U x for a 3x3 unimodular U.
LatticePolytope transform(const LatticePolytope &p, const IntMatrix &u);

/// Lattice length of the edge [a, b].
Int lattice_length(const Vec3 &a, const Vec3 &b);

} // namespace toricfano
