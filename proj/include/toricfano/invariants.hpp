#pragma once

#include "toricfano/intlinalg.hpp"
#include "toricfano/polytope.hpp"

#include <vector>

namespace toricfano {

/// h_m = h^0(X, -m K_X) for m = 0..m_max, counted as lattice points of the
/// m-th dilation of the polar polytope.
struct HilbertPrefix {
  std::vector<Int> coefficients;

  friend bool operator==(const HilbertPrefix &, const HilbertPrefix &) = default;
};

/// Anticanonical degree (-K_X)^3 = normalized volume of the polar.
/// Throws std::invalid_argument for non-reflexive input.
Int degree(const LatticePolytope &p);

HilbertPrefix hilbert_prefix(const LatticePolytope &p, Int m_max);

/// Same quantities from an already computed polar polytope.
Int degree_of_polar(const LatticePolytope &polar_polytope);
HilbertPrefix hilbert_prefix_of_polar(const LatticePolytope &polar_polytope, Int m_max);

} // namespace toricfano
