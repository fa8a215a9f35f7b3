#pragma once

#include "toricfano/intlinalg.hpp"
#include "toricfano/polytope.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace toricfano {

/// Convex lattice polygon in Z^2, vertices in counterclockwise order. A
/// single point or a segment (two vertices) is allowed; those arise as
/// Minkowski summands.
struct LatticePolygon {
  std::vector<Vec2> vertices;

  [[nodiscard]] std::size_t size() const { return vertices.size(); }
  /// Twice the Euclidean area.
  [[nodiscard]] Int normalized_area() const;
  /// Lattice points on the boundary.
  [[nodiscard]] Int boundary_points() const;
  /// Lattice points in the relative interior of a 2-dimensional polygon.
  [[nodiscard]] Int interior_points() const;

  friend bool operator==(const LatticePolygon &, const LatticePolygon &) = default;
};

/// Convex hull of planar points, counterclockwise, corners only.
LatticePolygon polygon_hull(std::vector<Vec2> points);

/// Translate so the lexicographically smallest vertex is the origin and start
/// the cycle there. Two polygons are translates iff their canonical forms agree.
LatticePolygon canonical_translate(const LatticePolygon &p);

/// Pointwise sum of all vertex combinations followed by a hull.
LatticePolygon minkowski_sum(const std::vector<LatticePolygon> &summands);

struct EdgeVector {
  Vec2 direction{}; ///< primitive
  Int length = 0;   ///< lattice length >= 1
};

/// Unimodular chart flattening a facet: chart * x = (a, b, height) for every
/// lattice point x of the facet, with det(chart) = +1.
struct FacetChart {
  IntMatrix chart;
  IntMatrix inverse;
  Int height = 0;

  [[nodiscard]] Vec2 flatten(const Vec3 &x) const;
  [[nodiscard]] Vec3 lift(const Vec2 &a) const;
};

/// Facet polygon with its edge data and (if it came from a 3-polytope) the
/// chart back to Z^3.
struct FacetPolygon {
  LatticePolygon polygon;
  std::vector<EdgeVector> edges; ///< edges[i] runs from vertex i to vertex i+1
  std::optional<FacetChart> chart;
};

/// Polygon from arbitrary planar points (hull taken).
FacetPolygon make_facet_polygon(std::vector<Vec2> points);
FacetPolygon make_facet_polygon(const LatticePolygon &polygon);

FacetPolygon facet_to_polygon(const LatticePolytope &p, std::size_t facet);

/// Lattice lengths, in edge order.
std::vector<Int> edge_lattice_lengths(const FacetPolygon &f);

struct PolygonClass {
  enum class Kind { StandardTriangle, StandardSquare, AmTriangle, Other };
  Kind kind = Kind::Other;
  Int m = 0; ///< only for AmTriangle
  std::vector<Int> edge_lengths; ///< sorted
  Int interior_points = 0;
  std::size_t vertex_count = 0;

  friend bool operator==(const PolygonClass &, const PolygonClass &) = default;
};

PolygonClass classify_polygon(const FacetPolygon &f);
std::string to_string(const PolygonClass &c);

bool has_unitary_edges(const FacetPolygon &f);

/// Sub-lengths (l'_1, ..., l'_k), 0 <= l'_i <= l_i, with sum l'_i p_i = 0.
using SummandAssignment = std::vector<Int>;

/// Every admissible assignment, in lexicographic order. The zero and the full
/// assignment are always present.
std::vector<SummandAssignment> enumerate_summand_vectors(const FacetPolygon &f);

/// Summand with edge vectors l'_i p_i in the cyclic order of f, in canonical
/// translation.
LatticePolygon summand_polygon(const FacetPolygon &f, const SummandAssignment &a);

bool is_minkowski_indecomposable(const FacetPolygon &f);

/// Multiset of summands, each given up to translation (canonical form).
struct MinkowskiDecomposition {
  std::vector<LatticePolygon> summands;
  std::vector<SummandAssignment> assignments; ///< parallel to summands

  friend bool operator==(const MinkowskiDecomposition &, const MinkowskiDecomposition &) = default;
};

/// All ways to write f as a sum of Minkowski-indecomposable lattice polygons
/// (points excluded). An indecomposable f yields the single decomposition {f}.
/// Within a decomposition, summands of larger area come first.
std::vector<MinkowskiDecomposition> maximal_decompositions(const FacetPolygon &f);

} // namespace toricfano
