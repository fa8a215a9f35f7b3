#include "toricfano/criteria.hpp"

#include "toricfano/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace toricfano {

namespace {

using Kind = PolygonClass::Kind;

struct FacetSurvey {
  std::vector<FacetPolygon> polygons;
  std::vector<PolygonClass> classes;
};

FacetSurvey survey(const LatticePolytope &p) {
  FacetSurvey s;
  s.polygons.reserve(p.facets().size());
  s.classes.reserve(p.facets().size());
  for (std::size_t i = 0; i < p.facets().size(); ++i) {
    s.polygons.push_back(facet_to_polygon(p, i));
    s.classes.push_back(classify_polygon(s.polygons.back()));
  }
  return s;
}

bool all_edges_unitary(const LatticePolytope &p) {
  return std::all_of(p.edges().begin(), p.edges().end(),
                     [&](const Edge &e) { return lattice_length(p.vertex(e.a), p.vertex(e.b)) == 1; });
}

bool smooth_of(const FacetSurvey &s) {
  return std::all_of(s.classes.begin(), s.classes.end(), [](const PolygonClass &c) { return c.kind == Kind::StandardTriangle; });
}

bool isolated_of(const LatticePolytope &p, const FacetSurvey &s) { return all_edges_unitary(p) && !smooth_of(s); }

bool nodes_of(const FacetSurvey &s) {
  bool square = false;
  for (const auto &c : s.classes) {
    if (c.kind == Kind::StandardSquare) square = true;
    else if (c.kind != Kind::StandardTriangle) return false;
  }
  return square;
}

std::vector<std::size_t> indec_of(const FacetSurvey &s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.polygons.size(); ++i) {
    if (s.classes[i].kind == Kind::StandardTriangle) continue;
    if (!has_unitary_edges(s.polygons[i])) continue;
    if (is_minkowski_indecomposable(s.polygons[i])) out.push_back(i);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> aft_of(const LatticePolytope &p, const FacetSurvey &s) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto &e : p.edges()) {
    const std::size_t f = e.facets[0], g = e.facets[1];
    const auto &cf = s.classes[f];
    const auto &cg = s.classes[g];
    if (cf.kind != Kind::AmTriangle || cg.kind != Kind::AmTriangle || cf.m != cg.m) continue;
    if (lattice_length(p.vertex(e.a), p.vertex(e.b)) != cf.m + 1) continue;
    const auto flat_against = [&](std::size_t f0, std::size_t f1) {
      const auto &vs = p.facet(f0).vertices;
      const auto apex = std::find_if(vs.begin(), vs.end(), [&](std::size_t v) { return v != e.a && v != e.b; });
      return dot(p.facet(f1).normal, p.vertex(*apex)) == 0;
    };
    if (flat_against(f, g) || flat_against(g, f)) out.emplace_back(f, g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> rigid_face_of(const LatticePolytope &p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.facets().size(); ++i) {
    const auto &vs = p.facet(i).vertices;
    if (vs.size() != 3) continue;
    bool edges_ok = true;
    for (std::size_t t = 0; t < 3 && edges_ok; ++t) {
      const std::array<Vec3, 2> pair{p.vertex(vs[t]), p.vertex(vs[(t + 1) % 3])};
      edges_ok = extends_to_basis(pair);
    }
    if (!edges_ok) continue;
    const Int d = det3(p.vertex(vs[0]), p.vertex(vs[1]), p.vertex(vs[2]));
    if (d != 1 && d != -1) out.push_back(i);
  }
  return out;
}

bool low_degree_value(Int d) { return std::find(std::begin(kLowDegrees), std::end(kLowDegrees), d) != std::end(kLowDegrees); }

void require_reflexive(const LatticePolytope &p, const char *what) {
  if (!is_reflexive(p)) throw std::invalid_argument(std::string(what) + ": polytope is not reflexive");
}

void require_fano(const LatticePolytope &p, const char *what) {
  if (!is_fano(p)) throw std::invalid_argument(std::string(what) + ": polytope is not Fano");
}

} // namespace

bool criterion_smooth(const LatticePolytope &p) {
  require_reflexive(p, "criterion_smooth");
  return smooth_of(survey(p));
}

bool criterion_isolated_singular(const LatticePolytope &p) {
  require_reflexive(p, "criterion_isolated_singular");
  return isolated_of(p, survey(p));
}

bool criterion_nodes(const LatticePolytope &p) {
  require_reflexive(p, "criterion_nodes");
  return nodes_of(survey(p));
}

bool criterion_totaro_rigid(const LatticePolytope &p) {
  require_fano(p, "criterion_totaro_rigid");
  for (const auto &f : p.facets())
    if (f.vertices.size() != 3) return false;
  for (const auto &e : p.edges()) {
    if (lattice_length(p.vertex(e.a), p.vertex(e.b)) != 1) return false;
    if (!solve_height_one(p.vertex(e.a), p.vertex(e.b))) return false;
  }
  return true;
}

std::vector<std::size_t> criterion_rigid_face(const LatticePolytope &p) {
  require_fano(p, "criterion_rigid_face");
  return rigid_face_of(p);
}

std::vector<std::size_t> criterion_indec(const LatticePolytope &p) {
  require_reflexive(p, "criterion_indec");
  return indec_of(survey(p));
}

std::vector<std::pair<std::size_t, std::size_t>> criterion_aft(const LatticePolytope &p) {
  require_reflexive(p, "criterion_aft");
  return aft_of(p, survey(p));
}

std::vector<Int> ext1_pushforward_degrees(Int n, Int d) {
  if (n < 1) throw std::invalid_argument("ext1_pushforward_degrees: n must be >= 1");
  std::vector<Int> out;
  for (Int j = 2; j <= n + 1; ++j) out.push_back(checked::sub(checked::mul(-j, d), j));
  return out;
}

bool criterion_low_degree(const LatticePolytope &p) {
  require_reflexive(p, "criterion_low_degree");
  return low_degree_value(degree(p));
}

ClassificationReport classify(const LatticePolytope &p, Int id, Int hilbert_m_max) {
  require_fano(p, "classify");
  ClassificationReport r;
  r.id = id;
  r.reflexive = is_reflexive(p);
  r.vertex_count = p.vertices().size();
  r.edge_count = p.edges().size();

  const FacetSurvey s = survey(p);
  r.facet_classes = s.classes;

  r.verdicts.totaro_rigid = criterion_totaro_rigid(p);
  r.witnesses.rigid_face = rigid_face_of(p);
  r.verdicts.rigid_face_obstruction = !r.witnesses.rigid_face.empty();

  if (r.reflexive) {
    r.verdicts.smooth = smooth_of(s);
    r.verdicts.isolated_singular = isolated_of(p, s);
    r.verdicts.nodes = nodes_of(s);
    r.witnesses.indec = indec_of(s);
    r.verdicts.indec_obstruction = !r.witnesses.indec.empty();
    r.witnesses.aft = aft_of(p, s);
    r.verdicts.aft_obstruction = !r.witnesses.aft.empty();

    const LatticePolytope dual = polar(p);
    r.degree = degree_of_polar(dual);
    r.verdicts.low_degree = low_degree_value(*r.degree);
    r.hilbert = hilbert_prefix_of_polar(dual, hilbert_m_max).coefficients;
  }
  return r;
}

std::vector<std::string> report_inconsistencies(const ClassificationReport &r) {
  std::vector<std::string> out;
  const auto &v = r.verdicts;
  const bool obstructed = v.rigid_face_obstruction || v.indec_obstruction.value_or(false) || v.aft_obstruction.value_or(false);
  if (v.smooth.value_or(false)) {
    if (v.isolated_singular.value_or(false)) out.emplace_back("smooth and isolated_singular");
    if (v.nodes.value_or(false)) out.emplace_back("smooth and nodes");
    if (obstructed) out.emplace_back("smooth but obstructed");
    if (!v.totaro_rigid) out.emplace_back("smooth but not totaro_rigid");
  }
  if (v.nodes.value_or(false) && !v.isolated_singular.value_or(false)) out.emplace_back("nodes without isolated_singular");
  if (v.indec_obstruction.value_or(false) || v.aft_obstruction.value_or(false)) {
    if (v.nodes.value_or(false)) out.emplace_back("nodes but obstructed");
    if (v.smooth.value_or(false)) out.emplace_back("smooth but obstructed (indec/aft)");
  }
  return out;
}

} // namespace toricfano
