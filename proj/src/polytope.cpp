#include "toricfano/polytope.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <set>
#include <tuple>

namespace toricfano {

using namespace checked;

namespace {

Int norm2(const Vec3 &v) { return dot(v, v); }

/// Counterclockwise boundary of coplanar points, seen from the tip of
/// `normal`. Points on an edge but not at a corner are dropped.
std::vector<std::size_t> planar_hull(const std::vector<Vec3> &pts, const std::vector<std::size_t> &idx,
                                     const Vec3 &normal) {
  auto orient = [&](std::size_t a, std::size_t b, std::size_t c) {
    return dot(normal, cross(pts[b] - pts[a], pts[c] - pts[a]));
  };
  // The lexicographically smallest point of a convex set is a corner.
  std::size_t start = *std::min_element(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return pts[a] < pts[b];
  });
  std::vector<std::size_t> cycle;
  std::size_t cur = start;
  do {
    cycle.push_back(cur);
    std::size_t next = cur == idx.front() ? idx[1] : idx.front();
    for (std::size_t r : idx) {
      if (r == cur || r == next) continue;
      const Int o = orient(cur, next, r);
      if (o < 0 || (o == 0 && norm2(pts[r] - pts[cur]) > norm2(pts[next] - pts[cur]))) next = r;
    }
    cur = next;
    if (cycle.size() > idx.size()) throw std::logic_error("planar_hull failed to close");
  } while (cur != start);
  return cycle;
}

} // namespace

LatticePolytope convex_hull(std::span<const Vec3> input) {
  std::vector<Vec3> pts(input.begin(), input.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  // Affine rank check.
  bool full = false;
  if (pts.size() >= 4) {
    std::size_t i1 = 1;
    std::size_t i2 = pts.size();
    for (std::size_t j = 2; j < pts.size(); ++j)
      if (cross(pts[i1] - pts[0], pts[j] - pts[0]) != Vec3{0, 0, 0}) {
        i2 = j;
        break;
      }
    if (i2 < pts.size()) {
      const Vec3 n = cross(pts[i1] - pts[0], pts[i2] - pts[0]);
      for (const auto &p : pts)
        if (dot(n, p - pts[0]) != 0) {
          full = true;
          break;
        }
    }
  }
  if (!full) throw DegenerateInput("convex_hull: points do not span a 3-dimensional polytope");

  // Every facet plane passes through three affinely independent input
  // points with all remaining points on one side.
  std::set<std::pair<Vec3, Int>> planes;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec3 nv = cross(pts[j] - pts[i], pts[k] - pts[i]);
        if (nv == Vec3{0, 0, 0}) continue;
        nv = primitive_part(nv);
        const Int h = dot(nv, pts[i]);
        if (planes.count({nv, h}) || planes.count({Int{-1} * nv, neg(h)})) continue;
        bool pos = false, negv = false;
        for (const auto &p : pts) {
          const Int s = sub(dot(nv, p), h);
          if (s > 0) pos = true;
          if (s < 0) negv = true;
          if (pos && negv) break;
        }
        if (pos && negv) continue;
        if (pos) planes.insert({Int{-1} * nv, neg(h)});
        else planes.insert({nv, h});
      }

  // Corners of each facet, as indices into pts.
  std::vector<std::pair<std::pair<Vec3, Int>, std::vector<std::size_t>>> raw;
  std::set<std::size_t> corner_set;
  for (const auto &pl : planes) {
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < n; ++i)
      if (dot(pl.first, pts[i]) == pl.second) on.push_back(i);
    auto cyc = planar_hull(pts, on, pl.first);
    corner_set.insert(cyc.begin(), cyc.end());
    raw.push_back({pl, std::move(cyc)});
  }

  LatticePolytope out;
  std::map<std::size_t, std::size_t> remap;
  for (std::size_t i : corner_set) {
    remap[i] = out.vertices_.size();
    out.vertices_.push_back(pts[i]);
  }
  for (auto &[pl, cyc] : raw) {
    Facet f;
    f.normal = pl.first;
    f.height = pl.second;
    for (std::size_t i : cyc) f.vertices.push_back(remap.at(i));
    auto first = std::min_element(f.vertices.begin(), f.vertices.end());
    std::rotate(f.vertices.begin(), first, f.vertices.end());
    out.facets_.push_back(std::move(f));
  }
  std::sort(out.facets_.begin(), out.facets_.end(),
            [](const Facet &a, const Facet &b) { return std::tie(a.normal, a.height) < std::tie(b.normal, b.height); });

  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> edge_facets;
  for (std::size_t fi = 0; fi < out.facets_.size(); ++fi) {
    const auto &vs = out.facets_[fi].vertices;
    for (std::size_t t = 0; t < vs.size(); ++t) {
      std::size_t a = vs[t], b = vs[(t + 1) % vs.size()];
      if (a > b) std::swap(a, b);
      edge_facets[{a, b}].push_back(fi);
    }
  }
  for (const auto &[key, fs] : edge_facets) {
    if (fs.size() != 2) throw std::logic_error("convex_hull: edge not shared by exactly two facets");
    Edge e;
    e.a = key.first;
    e.b = key.second;
    e.facets[0] = std::min(fs[0], fs[1]);
    e.facets[1] = std::max(fs[0], fs[1]);
    out.edges_.push_back(e);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> LatticePolytope::facet_adjacency() const {
  std::vector<std::pair<std::size_t, std::size_t>> adj;
  adj.reserve(edges_.size());
  for (const auto &e : edges_) adj.emplace_back(e.facets[0], e.facets[1]);
  return adj;
}

std::vector<Vec3> LatticePolytope::facet_points(std::size_t i) const {
  const Facet &f = facets_.at(i);
  Vec3 lo = vertices_[f.vertices[0]], hi = lo;
  for (std::size_t v : f.vertices)
    for (std::size_t c = 0; c < 3; ++c) {
      lo[c] = std::min(lo[c], vertices_[v][c]);
      hi[c] = std::max(hi[c], vertices_[v][c]);
    }
  std::vector<Vec3> out;
  for (Int x = lo[0]; x <= hi[0]; ++x)
    for (Int y = lo[1]; y <= hi[1]; ++y)
      for (Int z = lo[2]; z <= hi[2]; ++z) {
        const Vec3 p{x, y, z};
        if (dot(f.normal, p) != f.height) continue;
        bool inside = true;
        for (const auto &g : facets_)
          if (dot(g.normal, p) > g.height) {
            inside = false;
            break;
          }
        if (inside) out.push_back(p);
      }
  return out;
}

bool is_fano(const LatticePolytope &p) {
  for (const auto &f : p.facets())
    if (f.height < 1) return false;
  for (const auto &v : p.vertices())
    if (!is_primitive(v)) return false;
  return true;
}

bool is_reflexive(const LatticePolytope &p) {
  if (!is_fano(p)) return false;
  return std::all_of(p.facets().begin(), p.facets().end(), [](const Facet &f) { return f.height == 1; });
}

LatticePolytope polar(const LatticePolytope &p) {
  if (!is_reflexive(p)) throw std::invalid_argument("polar: polytope is not reflexive");
  std::vector<Vec3> normals;
  normals.reserve(p.facets().size());
  for (const auto &f : p.facets()) normals.push_back(f.normal);
  return convex_hull(normals);
}

Int normalized_volume(const LatticePolytope &p) {
  // Cone each facet's fan triangulation over the origin; signed determinants
  // make this valid wherever the origin lies.
  Int vol = 0;
  for (const auto &f : p.facets()) {
    const Vec3 &a = p.vertex(f.vertices[0]);
    for (std::size_t t = 1; t + 1 < f.vertices.size(); ++t)
      vol = add(vol, det3(a, p.vertex(f.vertices[t]), p.vertex(f.vertices[t + 1])));
  }
  return vol;
}

namespace {

struct Box {
  Vec3 lo, hi;
};

Box dilated_box(const LatticePolytope &p, Int m) {
  Box b{p.vertex(0), p.vertex(0)};
  for (const auto &v : p.vertices())
    for (std::size_t c = 0; c < 3; ++c) {
      b.lo[c] = std::min(b.lo[c], v[c]);
      b.hi[c] = std::max(b.hi[c], v[c]);
    }
  b.lo = m * b.lo;
  b.hi = m * b.hi;
  return b;
}

/// Count of z with <w, (x, y, z)> <= bound_f for every facet f, where
/// bound_f = m * height_f - slack.
Int column_count(const LatticePolytope &p, Int m, Int slack, Int x, Int y, Int zlo, Int zhi) {
  for (const auto &f : p.facets()) {
    const Int rhs = sub(sub(mul(m, f.height), slack), add(mul(f.normal[0], x), mul(f.normal[1], y)));
    const Int wz = f.normal[2];
    if (wz > 0) zhi = std::min(zhi, floor_div(rhs, wz));
    else if (wz < 0) zlo = std::max(zlo, ceil_div(rhs, wz));
    else if (rhs < 0) return 0;
    if (zlo > zhi) return 0;
  }
  return zhi - zlo + 1;
}

Int count_points(const LatticePolytope &p, Int m, Int slack) {
  if (m < 0) throw std::invalid_argument("lattice_points: negative dilation");
  const Box b = dilated_box(p, m);
  Int total = 0;
  std::exception_ptr failure;
#pragma omp parallel for reduction(+ : total) schedule(dynamic)
  for (Int x = b.lo[0]; x <= b.hi[0]; ++x) {
    try {
      for (Int y = b.lo[1]; y <= b.hi[1]; ++y) total += column_count(p, m, slack, x, y, b.lo[2], b.hi[2]);
    } catch (...) {
#pragma omp critical(toricfano_lattice_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return total;
}

} // namespace

Int lattice_points(const LatticePolytope &p, Int m) { return count_points(p, m, 0); }

Int interior_lattice_points(const LatticePolytope &p, Int m) { return count_points(p, m, 1); }

Int lattice_points_reference(const LatticePolytope &p, Int m) {
  if (m < 0) throw std::invalid_argument("lattice_points: negative dilation");
  const Box b = dilated_box(p, m);
  Int total = 0;
  for (Int x = b.lo[0]; x <= b.hi[0]; ++x)
    for (Int y = b.lo[1]; y <= b.hi[1]; ++y)
      for (Int z = b.lo[2]; z <= b.hi[2]; ++z) {
        const Vec3 q{x, y, z};
        bool inside = true;
        for (const auto &f : p.facets())
          if (dot(f.normal, q) > mul(m, f.height)) {
            inside = false;
            break;
          }
        if (inside) ++total;
      }
  return total;
}

std::vector<Vec3> lattice_point_list(const LatticePolytope &p, Int m) {
  if (m < 0) throw std::invalid_argument("lattice_points: negative dilation");
  const Box b = dilated_box(p, m);
  std::vector<Vec3> out;
  for (Int x = b.lo[0]; x <= b.hi[0]; ++x)
    for (Int y = b.lo[1]; y <= b.hi[1]; ++y)
      for (Int z = b.lo[2]; z <= b.hi[2]; ++z) {
        const Vec3 q{x, y, z};
        bool inside = true;
        for (const auto &f : p.facets())
          if (dot(f.normal, q) > mul(m, f.height)) {
            inside = false;
            break;
          }
        if (inside) out.push_back(q);
      }
  return out;
}

LatticePolytope transform(const LatticePolytope &p, const IntMatrix &u) {
  if (u.rows() != 3 || u.cols() != 3) throw std::invalid_argument("transform: expected a 3x3 matrix");
  std::vector<Vec3> image;
  image.reserve(p.vertices().size());
  for (const auto &v : p.vertices()) {
    Vec3 w{};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) w[i] = add(w[i], mul(u(i, j), v[j]));
    image.push_back(w);
  }
  return convex_hull(image);
}

Int lattice_length(const Vec3 &a, const Vec3 &b) { return content(b - a); }

} // namespace toricfano
