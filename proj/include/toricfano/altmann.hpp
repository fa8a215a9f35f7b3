#pragma once

#include "toricfano/intlinalg.hpp"
#include "toricfano/polygon.hpp"

#include <cstddef>
#include <vector>

namespace toricfano {

/// Rays of the cone built from a Minkowski decomposition F = D_0 + ... + D_r
/// in Z^2 + Z^(r+1): every vertex v of D_k contributes (v ; e_k).
struct LiftedCone {
  std::vector<std::vector<Int>> rays;
  std::vector<std::size_t> summand_index; ///< parallel to rays
  std::size_t summand_count = 0;
};

/// Translate the summands of d (given up to translation) so that their
/// Minkowski sum is exactly f.polygon. Only the summand of largest
/// area moves (the first one on ties).
MinkowskiDecomposition align_to(const FacetPolygon &f, const MinkowskiDecomposition &d);

/// Requires the summands of d to add up to f.polygon exactly (see align_to);
/// throws std::invalid_argument otherwise. Each summand contributes its
/// vertices in its own cyclic order.
LiftedCone minkowski_lift(const FacetPolygon &f, const MinkowskiDecomposition &d);

} // namespace toricfano
