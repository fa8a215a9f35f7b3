// toricfano: batch classification of reflexive 3-polytopes by smoothability,
// rigidity and obstruction criteria for the associated toric Fano threefolds.
//
// Exit codes: 0 success / match, 1 mismatch, 2 input error.

#include "toricfano/altmann.hpp"
#include "toricfano/batch.hpp"
#include "toricfano/criteria.hpp"
#include "toricfano/db.hpp"
#include "toricfano/invariants.hpp"
#include "toricfano/polygon.hpp"
#include "toricfano/polytope.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace toricfano;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;

struct InputOptions {
  std::string path;
  std::string format = "auto";
  std::string ids;
  bool strict = false;
  int jobs = 0;
  Int hilbert_terms = kDefaultHilbertTerms;
};

void add_input_options(CLI::App *cmd, InputOptions &o) {
  cmd->add_option("input", o.path, "Polytope database (PALP blocks or JSON records)")->required();
  cmd->add_option("--format", o.format, "Input format")->check(CLI::IsMember({"auto", "palp", "json"}));
  cmd->add_option("--ids", o.ids, "Sidecar file with one database id per record");
  cmd->add_flag("--strict", o.strict, "Reject ambiguous 3x3 PALP blocks");
  cmd->add_option("--jobs,-j", o.jobs, "Worker threads (0 = OpenMP default)");
  cmd->add_option("--hilbert-terms", o.hilbert_terms, "Largest m for the Hilbert coefficients h_0..h_m")
      ->check(CLI::NonNegativeNumber);
}

std::vector<PolytopeRecord> load_records(const InputOptions &o) {
  std::string fmt = o.format;
  if (fmt == "auto") fmt = o.path.size() >= 5 && o.path.substr(o.path.size() - 5) == ".json" ? "json" : "palp";
  auto records = fmt == "json" ? parse_json_file(o.path) : parse_palp_file(o.path, PalpOptions{o.strict});
  if (!o.ids.empty()) apply_id_sidecar_file(records, o.ids);
  return records;
}

/// Writes to `path`, or stdout when empty.
template <class F> void with_output(const std::string &path, F &&write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  write(out);
}

int cmd_classify(const InputOptions &in, const std::string &out, const std::string &report) {
  const auto records = load_records(in);
  const auto reports = classify_records(records, in.jobs, in.hilbert_terms);
  const auto fmt = report == "csv" ? ReportFormat::Csv : ReportFormat::Json;
  with_output(out, [&](std::ostream &os) { write_reports(reports, os, fmt); });
  return kExitOk;
}

int cmd_lists(const InputOptions &in, const std::string &out) {
  const auto records = load_records(in);
  const auto lists = compute_lists(classify_records(records, in.jobs, 0));
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (auto name : kListNames) doc[std::string(name)] = lists.at(std::string(name));
  doc["L_indec|L_aft_count"] = set_union(lists.at("L_indec"), lists.at("L_aft")).size();
  with_output(out, [&](std::ostream &os) { os << doc.dump(1) << '\n'; });
  return kExitOk;
}

void print_ids(const char *label, const std::vector<Int> &ids, bool full) {
  constexpr std::size_t kCap = 20;
  std::cout << "    " << label << " (" << ids.size() << "):";
  const std::size_t n = full ? ids.size() : std::min(ids.size(), kCap);
  for (std::size_t i = 0; i < n; ++i) std::cout << ' ' << ids[i];
  if (n < ids.size()) std::cout << " ... (--full for all)";
  std::cout << '\n';
}

int cmd_verify(const InputOptions &in, const std::string &expected_path, bool full, bool counts_only) {
  const auto expected = load_expected_lists_file(expected_path);
  const auto records = load_records(in);
  const auto computed = compute_lists(classify_records(records, in.jobs, 0));
  bool ok = true;
  for (const auto &d : diff_lists(computed, expected)) {
    const bool pass = counts_only ? d.counts_match() : d.sets_match();
    ok = ok && pass;
    std::cout << (pass ? "MATCH    " : "MISMATCH ") << d.name << ": computed " << d.computed_count << ", expected "
              << d.expected_count << (d.counts_match() ? " (counts equal)" : " (counts differ)")
              << (d.sets_match() ? ", sets equal" : ", sets differ") << '\n';
    if (!d.sets_match() && !counts_only) {
      print_ids("missing", d.missing, full);
      print_ids("extra", d.extra, full);
    }
  }
  return ok ? kExitOk : kExitMismatch;
}

std::string fmt_vec(const Vec3 &v) {
  return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) + ")";
}

std::string fmt_vec(const Vec2 &v) { return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + ")"; }

std::string fmt_polygon(const LatticePolygon &p) {
  std::string s = "conv{";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + fmt_vec(p.vertices[i]);
  return s + "}";
}

std::string fmt_opt(const std::optional<bool> &b) { return b ? (*b ? "yes" : "no") : "n/a"; }

int cmd_inspect(const InputOptions &in, Int id, bool lift) {
  const auto records = load_records(in);
  const auto it = std::find_if(records.begin(), records.end(), [&](const auto &r) { return r.id == id; });
  if (it == records.end()) throw InputError("no polytope with id " + std::to_string(id));
  const LatticePolytope p = convex_hull(it->vertices);
  if (!is_fano(p)) throw InputError("polytope " + std::to_string(id) + " is not Fano");
  const auto report = classify(p, id, in.hilbert_terms);
  auto &os = std::cout;

  os << "polytope " << id << (report.reflexive ? " (reflexive)" : " (Fano, not reflexive)") << '\n';
  os << "vertices (" << p.vertices().size() << "):\n";
  for (std::size_t i = 0; i < p.vertices().size(); ++i) os << "  v" << i << " " << fmt_vec(p.vertex(i)) << '\n';
  os << "edges (" << p.edges().size() << "):\n";
  for (const auto &e : p.edges())
    os << "  v" << e.a << "-v" << e.b << "  lattice length " << lattice_length(p.vertex(e.a), p.vertex(e.b))
       << "  facets " << e.facets[0] << "," << e.facets[1] << '\n';
  os << "facets (" << p.facets().size() << "):\n";
  for (std::size_t i = 0; i < p.facets().size(); ++i) {
    const auto &f = p.facet(i);
    const auto poly = facet_to_polygon(p, i);
    os << "  F" << i << " normal " << fmt_vec(f.normal) << " height " << f.height << "  vertices";
    for (std::size_t v : f.vertices) os << " v" << v;
    os << "\n     class " << to_string(report.facet_classes[i]) << "  edge lengths";
    for (Int l : edge_lattice_lengths(poly)) os << ' ' << l;
    os << "  polygon " << fmt_polygon(poly.polygon) << '\n';
    for (const auto &d : maximal_decompositions(poly)) {
      os << "     decomposition:";
      for (std::size_t k = 0; k < d.summands.size(); ++k) os << (k ? " + " : " ") << fmt_polygon(d.summands[k]);
      os << '\n';
      if (lift) {
        const auto cone = minkowski_lift(poly, align_to(poly, d));
        os << "       lifted rays:";
        for (const auto &ray : cone.rays) {
          os << " (";
          for (std::size_t c = 0; c < ray.size(); ++c) os << (c ? (c == 2 ? ";" : ",") : "") << ray[c];
          os << ")";
        }
        os << '\n';
      }
    }
  }
  const auto &v = report.verdicts;
  os << "verdicts:\n"
     << "  smooth " << fmt_opt(v.smooth) << ", isolated_singular " << fmt_opt(v.isolated_singular) << ", nodes "
     << fmt_opt(v.nodes) << ", totaro_rigid " << (v.totaro_rigid ? "yes" : "no") << '\n'
     << "  rigid_face_obstruction " << (v.rigid_face_obstruction ? "yes" : "no") << ", indec_obstruction "
     << fmt_opt(v.indec_obstruction) << ", aft_obstruction " << fmt_opt(v.aft_obstruction) << ", low_degree "
     << fmt_opt(v.low_degree) << '\n';
  os << "witnesses:\n  rigid_face";
  for (auto f : report.witnesses.rigid_face) os << " F" << f;
  os << "\n  indec";
  for (auto f : report.witnesses.indec) os << " F" << f;
  os << "\n  aft";
  for (auto [a, b] : report.witnesses.aft) os << " (F" << a << ",F" << b << ")";
  os << '\n';
  if (report.degree) os << "degree " << *report.degree << '\n';
  if (!report.hilbert.empty()) {
    os << "hilbert";
    for (Int h : report.hilbert) os << ' ' << h;
    os << '\n';
  }
  return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Smoothability and rigidity criteria for toric Fano threefolds of reflexive 3-polytopes"};
  app.require_subcommand(1);

  InputOptions classify_in, lists_in, verify_in, inspect_in;
  std::string classify_out, report_format = "json", lists_out, expected;
  bool full = false, counts_only = false, lift = false;
  Int inspect_id = 0;

  auto *classify_cmd = app.add_subcommand("classify", "Write a classification report per polytope");
  add_input_options(classify_cmd, classify_in);
  classify_cmd->add_option("--out,-o", classify_out, "Output file (default stdout)");
  classify_cmd->add_option("--report", report_format, "Report format")->check(CLI::IsMember({"json", "csv"}));

  auto *lists_cmd = app.add_subcommand("lists", "Emit the six id lists and |L_indec u L_aft|");
  add_input_options(lists_cmd, lists_in);
  lists_cmd->add_option("--out,-o", lists_out, "Output file (default stdout)");

  auto *verify_cmd = app.add_subcommand("verify", "Compare computed lists with an expected-lists file");
  add_input_options(verify_cmd, verify_in);
  verify_cmd->add_option("--expected", expected, "Expected lists JSON")->required();
  verify_cmd->add_flag("--full", full, "Print every missing/extra id");
  verify_cmd->add_flag("--counts-only", counts_only, "Compare list sizes only (ids not in database order)");

  auto *inspect_cmd = app.add_subcommand("inspect", "Human-readable dump of one polytope");
  add_input_options(inspect_cmd, inspect_in);
  inspect_cmd->add_option("--id", inspect_id, "Polytope id")->required();
  inspect_cmd->add_flag("--lift", lift, "Also print the lifted cone rays of each decomposition");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*classify_cmd) return cmd_classify(classify_in, classify_out, report_format);
    if (*lists_cmd) return cmd_lists(lists_in, lists_out);
    if (*verify_cmd) return cmd_verify(verify_in, expected, full, counts_only);
    if (*inspect_cmd) return cmd_inspect(inspect_in, inspect_id, lift);
  } catch (const InputError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
