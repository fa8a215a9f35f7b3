#include "toricfano/polygon.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace toricfano {

using namespace checked;

Int LatticePolygon::normalized_area() const {
  if (vertices.size() < 3) return 0;
  Int s = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) s = add(s, cross(vertices[i], vertices[(i + 1) % vertices.size()]));
  return s;
}

Int LatticePolygon::boundary_points() const {
  if (vertices.size() == 1) return 1;
  Int b = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) b = add(b, content(vertices[(i + 1) % vertices.size()] - vertices[i]));
  // A segment is traversed twice.
  return vertices.size() == 2 ? b / 2 + 1 : b;
}

Int LatticePolygon::interior_points() const {
  if (vertices.size() < 3) return 0;
  // Pick: 2A = 2I + B - 2
  return (normalized_area() - boundary_points() + 2) / 2;
}

LatticePolygon polygon_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 1) return LatticePolygon{pts};
  // Monotone chain, strict turns only.
  std::vector<Vec2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto &p : pts) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    const auto &p = pts[i];
    while (k >= t && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return LatticePolygon{hull};
}

LatticePolygon canonical_translate(const LatticePolygon &p) {
  if (p.vertices.empty()) return p;
  auto it = std::min_element(p.vertices.begin(), p.vertices.end());
  const Vec2 base = *it;
  LatticePolygon out;
  out.vertices.reserve(p.size());
  const std::size_t start = static_cast<std::size_t>(it - p.vertices.begin());
  for (std::size_t i = 0; i < p.size(); ++i) out.vertices.push_back(p.vertices[(start + i) % p.size()] - base);
  return out;
}

LatticePolygon minkowski_sum(const std::vector<LatticePolygon> &summands) {
  std::vector<Vec2> acc{{0, 0}};
  for (const auto &s : summands) {
    std::vector<Vec2> next;
    next.reserve(acc.size() * s.size());
    for (const auto &a : acc)
      for (const auto &v : s.vertices) next.push_back(a + v);
    acc = polygon_hull(std::move(next)).vertices;
  }
  return LatticePolygon{acc};
}

Vec2 FacetChart::flatten(const Vec3 &x) const {
  Vec3 y{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) y[i] = add(y[i], mul(chart(i, j), x[j]));
  return {y[0], y[1]};
}

Vec3 FacetChart::lift(const Vec2 &a) const {
  const Vec3 y{a[0], a[1], height};
  Vec3 x{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) x[i] = add(x[i], mul(inverse(i, j), y[j]));
  return x;
}

namespace {

std::vector<EdgeVector> edge_data(const LatticePolygon &p) {
  std::vector<EdgeVector> edges;
  if (p.size() < 2) return edges;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Vec2 d = p.vertices[(i + 1) % p.size()] - p.vertices[i];
    const Int len = content(d);
    edges.push_back({Vec2{d[0] / len, d[1] / len}, len});
  }
  return edges;
}

/// Unimodular U with last row w (w primitive), det U = +1.
IntMatrix complete_to_unimodular(const Vec3 &w) {
  IntMatrix row(1, 3);
  for (std::size_t j = 0; j < 3; ++j) row(0, j) = w[j];
  const auto snf = smith_normal_form(row);
  if (snf.diagonal[0] != 1) throw std::invalid_argument("facet normal is not primitive");
  // w * R = (s, 0, 0) with s = +-1, so w = s * (row 0 of R^-1).
  const IntMatrix rinv = unimodular_inverse(snf.right);
  IntMatrix u(3, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    u(0, j) = rinv(1, j);
    u(1, j) = rinv(2, j);
    u(2, j) = w[j];
  }
  if (det3(u) < 0) u.negate_row(0);
  return u;
}

} // namespace

FacetPolygon make_facet_polygon(std::vector<Vec2> points) { return make_facet_polygon(polygon_hull(std::move(points))); }

FacetPolygon make_facet_polygon(const LatticePolygon &polygon) {
  FacetPolygon f;
  f.polygon = polygon;
  f.edges = edge_data(polygon);
  return f;
}

FacetPolygon facet_to_polygon(const LatticePolytope &p, std::size_t facet) {
  if (facet >= p.facets().size()) throw std::out_of_range("facet_to_polygon: facet index out of range");
  const Facet &fc = p.facet(facet);
  FacetChart chart;
  chart.chart = complete_to_unimodular(fc.normal);
  chart.inverse = unimodular_inverse(chart.chart);
  chart.height = fc.height;
  LatticePolygon poly;
  for (std::size_t v : fc.vertices) poly.vertices.push_back(chart.flatten(p.vertex(v)));
  FacetPolygon out = make_facet_polygon(poly);
  out.chart = std::move(chart);
  return out;
}

std::vector<Int> edge_lattice_lengths(const FacetPolygon &f) {
  std::vector<Int> out;
  out.reserve(f.edges.size());
  for (const auto &e : f.edges) out.push_back(e.length);
  return out;
}

PolygonClass classify_polygon(const FacetPolygon &f) {
  PolygonClass c;
  c.vertex_count = f.polygon.size();
  c.edge_lengths = edge_lattice_lengths(f);
  std::sort(c.edge_lengths.begin(), c.edge_lengths.end());
  c.interior_points = f.polygon.interior_points();
  if (c.vertex_count == 3) {
    if (f.polygon.normalized_area() == 1) {
      c.kind = PolygonClass::Kind::StandardTriangle;
    } else if (c.interior_points == 0 && c.edge_lengths[0] == 1 && c.edge_lengths[1] == 1 && c.edge_lengths[2] >= 2) {
      c.kind = PolygonClass::Kind::AmTriangle;
      c.m = c.edge_lengths[2] - 1;
    }
  } else if (c.vertex_count == 4) {
    if (c.interior_points == 0 && f.polygon.boundary_points() == 4) c.kind = PolygonClass::Kind::StandardSquare;
  }
  return c;
}

std::string to_string(const PolygonClass &c) {
  switch (c.kind) {
  case PolygonClass::Kind::StandardTriangle: return "standard-triangle";
  case PolygonClass::Kind::StandardSquare: return "standard-square";
  case PolygonClass::Kind::AmTriangle: return "A" + std::to_string(c.m) + "-triangle";
  case PolygonClass::Kind::Other: break;
  }
  return "other";
}

bool has_unitary_edges(const FacetPolygon &f) {
  return std::all_of(f.edges.begin(), f.edges.end(), [](const EdgeVector &e) { return e.length == 1; });
}

std::vector<SummandAssignment> enumerate_summand_vectors(const FacetPolygon &f) {
  const std::size_t k = f.edges.size();
  std::vector<SummandAssignment> out;
  SummandAssignment cur(k, 0);
  std::function<void(std::size_t, Vec2)> rec = [&](std::size_t i, Vec2 sum) {
    if (i == k) {
      if (sum == Vec2{0, 0}) out.push_back(cur);
      return;
    }
    for (Int l = 0; l <= f.edges[i].length; ++l) {
      cur[i] = l;
      rec(i + 1, sum + l * f.edges[i].direction);
    }
    cur[i] = 0;
  };
  rec(0, Vec2{0, 0});
  return out;
}

LatticePolygon summand_polygon(const FacetPolygon &f, const SummandAssignment &a) {
  if (a.size() != f.edges.size()) throw std::invalid_argument("summand_polygon: assignment length mismatch");
  LatticePolygon p;
  Vec2 cur{0, 0};
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    p.vertices.push_back(cur);
    cur = cur + a[i] * f.edges[i].direction;
  }
  if (cur != Vec2{0, 0}) throw std::invalid_argument("summand_polygon: assignment does not close");
  if (p.vertices.empty()) p.vertices.push_back(cur);
  return canonical_translate(p);
}

namespace {

bool is_zero(const SummandAssignment &a) {
  return std::all_of(a.begin(), a.end(), [](Int x) { return x == 0; });
}

bool leq(const SummandAssignment &a, const SummandAssignment &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

SummandAssignment full_assignment(const FacetPolygon &f) { return edge_lattice_lengths(f); }

} // namespace

bool is_minkowski_indecomposable(const FacetPolygon &f) {
  const auto full = full_assignment(f);
  for (const auto &a : enumerate_summand_vectors(f))
    if (!is_zero(a) && a != full) return false;
  return true;
}

std::vector<MinkowskiDecomposition> maximal_decompositions(const FacetPolygon &f) {
  const auto all = enumerate_summand_vectors(f);
  const auto full = full_assignment(f);

  // Indecomposable summands: nonzero assignments with no admissible proper part.
  std::vector<SummandAssignment> atoms;
  for (const auto &a : all) {
    if (is_zero(a)) continue;
    bool atomic = true;
    for (const auto &b : all)
      if (!is_zero(b) && b != a && leq(b, a)) {
        atomic = false;
        break;
      }
    if (atomic) atoms.push_back(a);
  }

  std::vector<MinkowskiDecomposition> out;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, SummandAssignment &)> rec = [&](std::size_t start, SummandAssignment &rest) {
    if (is_zero(rest)) {
      MinkowskiDecomposition d;
      std::vector<std::size_t> order = chosen;
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const Int aa = summand_polygon(f, atoms[a]).normalized_area();
        const Int ab = summand_polygon(f, atoms[b]).normalized_area();
        return aa > ab;
      });
      for (std::size_t i : order) {
        d.assignments.push_back(atoms[i]);
        d.summands.push_back(summand_polygon(f, atoms[i]));
      }
      out.push_back(std::move(d));
      return;
    }
    for (std::size_t i = start; i < atoms.size(); ++i) {
      if (!leq(atoms[i], rest)) continue;
      for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= atoms[i][j];
      chosen.push_back(i);
      rec(i, rest);
      chosen.pop_back();
      for (std::size_t j = 0; j < rest.size(); ++j) rest[j] += atoms[i][j];
    }
  };
  SummandAssignment rest = full;
  if (!is_zero(rest)) rec(0, rest);
  return out;
}

} // namespace toricfano
