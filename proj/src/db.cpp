#include "toricfano/db.hpp"

#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace toricfano {

using json = nlohmann::ordered_json;

namespace {

std::ifstream open_input(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return in;
}

std::vector<std::string> tokens(const std::string &line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

bool parse_int(const std::string &tok, Int &out) {
  const char *b = tok.data();
  const char *e = b + tok.size();
  if (b != e && *b == '+') ++b;
  auto [ptr, ec] = std::from_chars(b, e, out);
  return ec == std::errc() && ptr == e;
}

std::string at_line(std::size_t n) { return " (line " + std::to_string(n) + ")"; }

} // namespace

std::vector<PolytopeRecord> parse_palp(std::istream &in, const PalpOptions &opts) {
  std::vector<PolytopeRecord> out;
  std::string line;
  std::size_t lineno = 0;
  auto next_content_line = [&](std::vector<std::string> &toks) {
    while (std::getline(in, line)) {
      ++lineno;
      toks = tokens(line);
      if (!toks.empty()) return true;
    }
    return false;
  };

  std::vector<std::string> toks;
  while (next_content_line(toks)) {
    Int r = 0, c = 0;
    if (toks.size() < 2 || !parse_int(toks[0], r) || !parse_int(toks[1], c) || r <= 0 || c <= 0)
      throw InputError("malformed PALP header '" + line + "'" + at_line(lineno));
    if (r != 3 && c != 3) throw InputError("PALP block has no dimension-3 axis: " + line + at_line(lineno));
    if (r == 3 && c == 3 && opts.strict)
      throw InputError("ambiguous 3x3 PALP block rejected in strict mode" + at_line(lineno));

    std::vector<std::vector<Int>> rows;
    for (Int i = 0; i < r; ++i) {
      if (!next_content_line(toks))
        throw InputError("PALP block ended after " + std::to_string(i) + " of " + std::to_string(r) + " rows" +
                         at_line(lineno));
      if (static_cast<Int>(toks.size()) != c)
        throw InputError("PALP row has " + std::to_string(toks.size()) + " entries, expected " + std::to_string(c) +
                         at_line(lineno));
      std::vector<Int> row(static_cast<std::size_t>(c));
      for (std::size_t j = 0; j < row.size(); ++j)
        if (!parse_int(toks[j], row[j])) throw InputError("non-integer PALP entry '" + toks[j] + "'" + at_line(lineno));
      rows.push_back(std::move(row));
    }

    PolytopeRecord rec;
    rec.id = static_cast<Int>(out.size()) + 1;
    if (r == 3) {
      for (Int j = 0; j < c; ++j) rec.vertices.push_back({rows[0][j], rows[1][j], rows[2][j]});
    } else {
      for (const auto &row : rows) rec.vertices.push_back({row[0], row[1], row[2]});
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<PolytopeRecord> parse_palp_file(const std::filesystem::path &path, const PalpOptions &opts) {
  auto in = open_input(path);
  return parse_palp(in, opts);
}

void apply_id_sidecar(std::vector<PolytopeRecord> &records, std::istream &sidecar) {
  std::vector<Int> ids;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(sidecar, line)) {
    ++lineno;
    const auto toks = tokens(line);
    if (toks.empty()) continue;
    Int id = 0;
    if (toks.size() != 1 || !parse_int(toks[0], id) || id < 1) throw InputError("bad id in sidecar" + at_line(lineno));
    ids.push_back(id);
  }
  if (ids.size() != records.size())
    throw InputError("sidecar has " + std::to_string(ids.size()) + " ids for " + std::to_string(records.size()) +
                     " records");
  auto sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InputError("sidecar ids are not unique");
  for (std::size_t i = 0; i < ids.size(); ++i) records[i].id = ids[i];
}

void apply_id_sidecar_file(std::vector<PolytopeRecord> &records, const std::filesystem::path &path) {
  auto in = open_input(path);
  apply_id_sidecar(records, in);
}

// ---------------------------------------------------------------------------
// JSON records

std::vector<PolytopeRecord> parse_json(std::istream &in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error &e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw InputError("polytope JSON must be an array of records");
  std::vector<PolytopeRecord> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto &r = doc[i];
    const std::string where = "record " + std::to_string(i);
    if (!r.is_object() || !r.contains("id") || !r.contains("vertices"))
      throw InputError(where + ": expected an object with \"id\" and \"vertices\"");
    if (!r["id"].is_number_integer() || r["id"].get<Int>() < 1) throw InputError(where + ": id must be a positive integer");
    PolytopeRecord rec;
    rec.id = r["id"].get<Int>();
    const auto &vs = r["vertices"];
    if (!vs.is_array() || vs.empty()) throw InputError(where + ": vertices must be a nonempty array");
    for (const auto &v : vs) {
      if (!v.is_array() || v.size() != 3 || !std::all_of(v.begin(), v.end(), [](const json &x) { return x.is_number_integer(); }))
        throw InputError(where + ": each vertex must be an array of 3 integers");
      rec.vertices.push_back({v[0].get<Int>(), v[1].get<Int>(), v[2].get<Int>()});
    }
    out.push_back(std::move(rec));
  }
  std::vector<Int> ids;
  for (const auto &r : out) ids.push_back(r.id);
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) throw InputError("duplicate ids in polytope JSON");
  return out;
}

std::vector<PolytopeRecord> parse_json_file(const std::filesystem::path &path) {
  auto in = open_input(path);
  return parse_json(in);
}

void write_records_json(const std::vector<PolytopeRecord> &records, std::ostream &out) {
  json doc = json::array();
  for (const auto &r : records) {
    json vs = json::array();
    for (const auto &v : r.vertices) vs.push_back({v[0], v[1], v[2]});
    doc.push_back({{"id", r.id}, {"vertices", vs}});
  }
  out << doc.dump(1) << '\n';
}

// ---------------------------------------------------------------------------
// Lists

NamedLists load_expected_lists(std::istream &in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error &e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("expected-lists JSON must be an object");
  NamedLists out;
  for (auto name : kListNames) {
    const std::string key(name);
    if (!doc.contains(key) || !doc[key].is_array()) throw InputError("expected-lists JSON lacks array \"" + key + "\"");
    std::vector<Int> ids;
    for (const auto &x : doc[key]) {
      if (!x.is_number_integer()) throw InputError(key + ": ids must be integers");
      const Int id = x.get<Int>();
      if (id < 1 || id > kDatabaseSize) throw InputError(key + ": id " + std::to_string(id) + " outside 1..4319");
      ids.push_back(id);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    out[key] = std::move(ids);
  }
  return out;
}

NamedLists load_expected_lists_file(const std::filesystem::path &path) {
  auto in = open_input(path);
  return load_expected_lists(in);
}

void write_lists_json(const NamedLists &lists, std::ostream &out) {
  json doc = json::object();
  for (auto name : kListNames) {
    const std::string key(name);
    auto it = lists.find(key);
    doc[key] = it == lists.end() ? std::vector<Int>{} : it->second;
  }
  for (const auto &[k, v] : lists)
    if (!doc.contains(k)) doc[k] = v;
  out << doc.dump(1) << '\n';
}

// ---------------------------------------------------------------------------
// Reports

namespace {

const char *kind_name(PolygonClass::Kind k) {
  switch (k) {
  case PolygonClass::Kind::StandardTriangle: return "standard_triangle";
  case PolygonClass::Kind::StandardSquare: return "standard_square";
  case PolygonClass::Kind::AmTriangle: return "am_triangle";
  case PolygonClass::Kind::Other: break;
  }
  return "other";
}

PolygonClass::Kind kind_from_name(const std::string &s) {
  if (s == "standard_triangle") return PolygonClass::Kind::StandardTriangle;
  if (s == "standard_square") return PolygonClass::Kind::StandardSquare;
  if (s == "am_triangle") return PolygonClass::Kind::AmTriangle;
  if (s == "other") return PolygonClass::Kind::Other;
  throw InputError("unknown facet class '" + s + "'");
}

json opt(const std::optional<bool> &b) { return b ? json(*b) : json(nullptr); }

std::optional<bool> opt_bool(const json &j) { return j.is_null() ? std::nullopt : std::optional<bool>(j.get<bool>()); }

json report_json(const ClassificationReport &r) {
  json facets = json::array();
  for (const auto &c : r.facet_classes)
    facets.push_back({{"class", kind_name(c.kind)},
                      {"m", c.m},
                      {"vertices", c.vertex_count},
                      {"edge_lengths", c.edge_lengths},
                      {"interior_points", c.interior_points}});
  json aft = json::array();
  for (const auto &[a, b] : r.witnesses.aft) aft.push_back({a, b});
  const auto &v = r.verdicts;
  return json{{"id", r.id},
              {"reflexive", r.reflexive},
              {"vertices", r.vertex_count},
              {"edges", r.edge_count},
              {"facets", facets},
              {"verdicts",
               {{"smooth", opt(v.smooth)},
                {"isolated_singular", opt(v.isolated_singular)},
                {"nodes", opt(v.nodes)},
                {"totaro_rigid", v.totaro_rigid},
                {"rigid_face_obstruction", v.rigid_face_obstruction},
                {"indec_obstruction", opt(v.indec_obstruction)},
                {"aft_obstruction", opt(v.aft_obstruction)},
                {"low_degree", opt(v.low_degree)}}},
              {"witnesses", {{"rigid_face", r.witnesses.rigid_face}, {"indec", r.witnesses.indec}, {"aft", aft}}},
              {"degree", r.degree ? json(*r.degree) : json(nullptr)},
              {"hilbert", r.hilbert}};
}

std::string csv_bool(const std::optional<bool> &b) { return b ? (*b ? "1" : "0") : "NA"; }

template <class T> std::string joined(const std::vector<T> &xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ';';
    s += std::to_string(xs[i]);
  }
  return s;
}

} // namespace

void write_reports(std::vector<ClassificationReport> reports, std::ostream &out, ReportFormat format) {
  std::stable_sort(reports.begin(), reports.end(), [](const auto &a, const auto &b) { return a.id < b.id; });
  if (format == ReportFormat::Json) {
    json doc = json::array();
    for (const auto &r : reports) doc.push_back(report_json(r));
    out << doc.dump(1) << '\n';
    return;
  }
  out << "id,reflexive,vertices,edges,facets,smooth,isolated_singular,nodes,totaro_rigid,rigid_face_obstruction,"
         "indec_obstruction,aft_obstruction,low_degree,degree,hilbert,facet_classes,rigid_face_witnesses,"
         "indec_witnesses,aft_witnesses\n";
  for (const auto &r : reports) {
    const auto &v = r.verdicts;
    std::string classes;
    for (std::size_t i = 0; i < r.facet_classes.size(); ++i) {
      if (i) classes += ';';
      classes += to_string(r.facet_classes[i]);
    }
    std::string aft;
    for (std::size_t i = 0; i < r.witnesses.aft.size(); ++i) {
      if (i) aft += ';';
      aft += std::to_string(r.witnesses.aft[i].first) + "-" + std::to_string(r.witnesses.aft[i].second);
    }
    out << r.id << ',' << (r.reflexive ? 1 : 0) << ',' << r.vertex_count << ',' << r.edge_count << ','
        << r.facet_classes.size() << ',' << csv_bool(v.smooth) << ',' << csv_bool(v.isolated_singular) << ','
        << csv_bool(v.nodes) << ',' << (v.totaro_rigid ? 1 : 0) << ',' << (v.rigid_face_obstruction ? 1 : 0) << ','
        << csv_bool(v.indec_obstruction) << ',' << csv_bool(v.aft_obstruction) << ',' << csv_bool(v.low_degree) << ','
        << (r.degree ? std::to_string(*r.degree) : "NA") << ',' << joined(r.hilbert) << ',' << classes << ','
        << joined(r.witnesses.rigid_face) << ',' << joined(r.witnesses.indec) << ',' << aft << '\n';
  }
}

void write_reports_file(const std::vector<ClassificationReport> &reports, const std::filesystem::path &path,
                        ReportFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  write_reports(reports, out, format);
}

std::vector<ClassificationReport> read_reports_json(std::istream &in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error &e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw InputError("report JSON must be an array");
  std::vector<ClassificationReport> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    try {
      const auto &j = doc[i];
      ClassificationReport r;
      r.id = j.at("id").get<Int>();
      r.reflexive = j.at("reflexive").get<bool>();
      r.vertex_count = j.at("vertices").get<std::size_t>();
      r.edge_count = j.at("edges").get<std::size_t>();
      for (const auto &f : j.at("facets")) {
        PolygonClass c;
        c.kind = kind_from_name(f.at("class").get<std::string>());
        c.m = f.at("m").get<Int>();
        c.vertex_count = f.at("vertices").get<std::size_t>();
        c.edge_lengths = f.at("edge_lengths").get<std::vector<Int>>();
        c.interior_points = f.at("interior_points").get<Int>();
        r.facet_classes.push_back(std::move(c));
      }
      const auto &v = j.at("verdicts");
      r.verdicts.smooth = opt_bool(v.at("smooth"));
      r.verdicts.isolated_singular = opt_bool(v.at("isolated_singular"));
      r.verdicts.nodes = opt_bool(v.at("nodes"));
      r.verdicts.totaro_rigid = v.at("totaro_rigid").get<bool>();
      r.verdicts.rigid_face_obstruction = v.at("rigid_face_obstruction").get<bool>();
      r.verdicts.indec_obstruction = opt_bool(v.at("indec_obstruction"));
      r.verdicts.aft_obstruction = opt_bool(v.at("aft_obstruction"));
      r.verdicts.low_degree = opt_bool(v.at("low_degree"));
      const auto &w = j.at("witnesses");
      r.witnesses.rigid_face = w.at("rigid_face").get<std::vector<std::size_t>>();
      r.witnesses.indec = w.at("indec").get<std::vector<std::size_t>>();
      for (const auto &p : w.at("aft")) r.witnesses.aft.emplace_back(p.at(0).get<std::size_t>(), p.at(1).get<std::size_t>());
      if (!j.at("degree").is_null()) r.degree = j.at("degree").get<Int>();
      r.hilbert = j.at("hilbert").get<std::vector<Int>>();
      out.push_back(std::move(r));
    } catch (const json::exception &e) {
      throw InputError("report " + std::to_string(i) + ": " + e.what());
    }
  }
  return out;
}

} // namespace toricfano
