#include "toricfano/invariants.hpp"

#include <stdexcept>

namespace toricfano {

Int degree_of_polar(const LatticePolytope &polar_polytope) { return normalized_volume(polar_polytope); }

HilbertPrefix hilbert_prefix_of_polar(const LatticePolytope &polar_polytope, Int m_max) {
  if (m_max < 0) throw std::invalid_argument("hilbert_prefix: m_max must be nonnegative");
  HilbertPrefix h;
  h.coefficients.reserve(static_cast<std::size_t>(m_max) + 1);
  for (Int m = 0; m <= m_max; ++m) h.coefficients.push_back(lattice_points(polar_polytope, m));
  return h;
}

Int degree(const LatticePolytope &p) {
  if (!is_reflexive(p)) throw std::invalid_argument("degree: polytope is not reflexive");
  return degree_of_polar(polar(p));
}

HilbertPrefix hilbert_prefix(const LatticePolytope &p, Int m_max) {
  if (!is_reflexive(p)) throw std::invalid_argument("hilbert_prefix: polytope is not reflexive");
  return hilbert_prefix_of_polar(polar(p), m_max);
}

} // namespace toricfano
