#include "toricfano/altmann.hpp"

#include <algorithm>
#include <stdexcept>

namespace toricfano {

MinkowskiDecomposition align_to(const FacetPolygon &f, const MinkowskiDecomposition &d) {
  if (d.summands.empty() || f.polygon.vertices.empty()) return d;
  // lexmin is additive under Minkowski sums.
  const auto lexmin = [](const LatticePolygon &p) { return *std::min_element(p.vertices.begin(), p.vertices.end()); };
  Vec2 total{0, 0};
  for (const auto &s : d.summands) total = total + lexmin(s);
  const Vec2 shift = lexmin(f.polygon) - total;
  // Segments and other small summands keep their canonical position; the
  // summand of largest area (first on ties) absorbs the translation.
  std::size_t mover = 0;
  for (std::size_t k = 1; k < d.summands.size(); ++k)
    if (d.summands[k].normalized_area() > d.summands[mover].normalized_area()) mover = k;
  MinkowskiDecomposition out = d;
  for (auto &v : out.summands[mover].vertices) v = v + shift;
  return out;
}

LiftedCone minkowski_lift(const FacetPolygon &f, const MinkowskiDecomposition &d) {
  if (d.summands.empty()) throw std::invalid_argument("minkowski_lift: empty decomposition");
  const LatticePolygon sum = minkowski_sum(d.summands);
  const LatticePolygon target = polygon_hull(f.polygon.vertices);
  // Both hulls start at the lexicographic minimum and run counterclockwise.
  if (sum != target)
    throw std::invalid_argument("minkowski_lift: summands do not add up to the polygon");

  LiftedCone cone;
  cone.summand_count = d.summands.size();
  for (std::size_t k = 0; k < d.summands.size(); ++k)
    for (const auto &v : d.summands[k].vertices) {
      std::vector<Int> ray(2 + cone.summand_count, 0);
      ray[0] = v[0];
      ray[1] = v[1];
      ray[2 + k] = 1;
      cone.rays.push_back(std::move(ray));
      cone.summand_index.push_back(k);
    }
  return cone;
}

} // namespace toricfano
