#pragma once

#include "toricfano/intlinalg.hpp"
#include "toricfano/polygon.hpp"
#include "toricfano/polytope.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace toricfano {

// Smoothability, rigidity and obstruction criteria for toric Fano threefolds
// X_P given by the spanning fan of a Fano polytope P.
//
// Predicates marked "reflexive" below assume every facet sits at height 1;
// classify() leaves them unset (not applicable) for non-reflexive input.

/// reflexive: every facet is a standard triangle (X_P smooth).
bool criterion_smooth(const LatticePolytope &p);

/// reflexive: every edge of P has lattice length 1 and some facet is not a
/// standard triangle (isolated Gorenstein singularities, smooth case excluded).
bool criterion_isolated_singular(const LatticePolytope &p);

/// reflexive: every facet is a standard triangle or square and at least one is
/// a square (at worst nodes, smooth case excluded).
bool criterion_nodes(const LatticePolytope &p);

/// Fano: all 2-faces are triangles, and every edge is unitary and lies on a
/// hyperplane of height 1. Such X_P is rigid.
bool criterion_totaro_rigid(const LatticePolytope &p);

/// Fano: triangular facets whose edges each extend to a lattice basis while
/// the three vertices do not. Any witness makes X_P non-smoothable.
///
/// Only facets are scanned: for an edge, condition (i) already puts both
/// vertices in a basis, so lower-dimensional faces never qualify.
std::vector<std::size_t> criterion_rigid_face(const LatticePolytope &p);

/// reflexive: facets with unitary edges that are Minkowski-indecomposable and
/// not standard triangles. Any witness makes X_P non-smoothable.
std::vector<std::size_t> criterion_indec(const LatticePolytope &p);

/// reflexive: adjacent facets F0, F1 that are both A_n-triangles, share an
/// edge of lattice length n+1, and have <w1, v0> = 0 for the normal w1 of F1
/// and the vertex v0 of F0 off the shared edge. Both orientations are tested;
/// pairs are reported once as (smaller index, larger index).
std::vector<std::pair<std::size_t, std::size_t>> criterion_aft(const LatticePolytope &p);

/// Twists of the line bundles in the pushforward of the local Ext^1 sheaf
/// over P^1 for two adjacent A_n-triangles at pairing d: {-j d - j : 2 <= j <= n+1}.
std::vector<Int> ext1_pushforward_degrees(Int n, Int d);

/// Degrees covered by the low-degree smoothability result.
inline constexpr Int kLowDegrees[] = {4, 6, 8, 10, 12};

/// reflexive: anticanonical degree in {4, 6, 8, 10, 12}.
bool criterion_low_degree(const LatticePolytope &p);

struct Verdicts {
  std::optional<bool> smooth;
  std::optional<bool> isolated_singular;
  std::optional<bool> nodes;
  bool totaro_rigid = false;
  bool rigid_face_obstruction = false;
  std::optional<bool> indec_obstruction;
  std::optional<bool> aft_obstruction;
  std::optional<bool> low_degree;

  friend bool operator==(const Verdicts &, const Verdicts &) = default;
};

struct Witnesses {
  std::vector<std::size_t> rigid_face;
  std::vector<std::size_t> indec;
  std::vector<std::pair<std::size_t, std::size_t>> aft;

  friend bool operator==(const Witnesses &, const Witnesses &) = default;
};

struct ClassificationReport {
  Int id = 0;
  bool reflexive = false;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::vector<PolygonClass> facet_classes;
  Verdicts verdicts;
  Witnesses witnesses;
  std::optional<Int> degree;
  std::vector<Int> hilbert;

  friend bool operator==(const ClassificationReport &, const ClassificationReport &) = default;
};

inline constexpr Int kDefaultHilbertTerms = 5;

/// All criteria, witnesses and invariants for a Fano polytope. Throws
/// std::invalid_argument if p is not Fano.
ClassificationReport classify(const LatticePolytope &p, Int id, Int hilbert_m_max = kDefaultHilbertTerms);

/// Descriptions of every violated report invariant (empty when consistent).
std::vector<std::string> report_inconsistencies(const ClassificationReport &r);

} // namespace toricfano
