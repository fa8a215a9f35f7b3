#pragma once

#include "toricfano/criteria.hpp"
#include "toricfano/intlinalg.hpp"

#include <array>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace toricfano {

/// Malformed input files. Messages carry the line or record index.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string &what) : std::runtime_error(what) {}
};

struct PolytopeRecord {
  Int id = 0;
  std::vector<Vec3> vertices;

  friend bool operator==(const PolytopeRecord &, const PolytopeRecord &) = default;
};

struct PalpOptions {
  /// Reject 3x3 blocks, where rows and columns cannot be told apart.
  bool strict = false;
};

/// PALP-style blocks: a header "r c" (further header tokens ignored) followed
/// by r rows of c integers. Vertices are the columns when r = 3 and the rows
/// when c = 3; a 3x3 block is read column-wise unless strict. Ids are 1-based
/// positions in the stream.
std::vector<PolytopeRecord> parse_palp(std::istream &in, const PalpOptions &opts = {});
std::vector<PolytopeRecord> parse_palp_file(const std::filesystem::path &path, const PalpOptions &opts = {});

/// Replace positional ids with ids from a sidecar (one integer per line, in
/// record order). Counts must agree.
void apply_id_sidecar(std::vector<PolytopeRecord> &records, std::istream &sidecar);
void apply_id_sidecar_file(std::vector<PolytopeRecord> &records, const std::filesystem::path &path);

/// JSON array of {"id": int, "vertices": [[x, y, z], ...]}.
std::vector<PolytopeRecord> parse_json(std::istream &in);
std::vector<PolytopeRecord> parse_json_file(const std::filesystem::path &path);
void write_records_json(const std::vector<PolytopeRecord> &records, std::ostream &out);

/// Id sets keyed by list name; names are listed in kListNames.
using NamedLists = std::map<std::string, std::vector<Int>>;
inline constexpr std::array<std::string_view, 6> kListNames = {"L_smooth", "L_isol", "L_nodes",
                                                               "L_low",    "L_indec", "L_aft"};
inline constexpr Int kDatabaseSize = 4319;

/// {"L_smooth": [ids...], ...}. Every list in kListNames must be present and
/// every id must lie in 1..4319. Lists come back sorted.
NamedLists load_expected_lists(std::istream &in);
NamedLists load_expected_lists_file(const std::filesystem::path &path);
void write_lists_json(const NamedLists &lists, std::ostream &out);

enum class ReportFormat { Json, Csv };

/// Deterministic: sorted by id, fixed field order, newline-terminated.
void write_reports(std::vector<ClassificationReport> reports, std::ostream &out, ReportFormat format);
void write_reports_file(const std::vector<ClassificationReport> &reports, const std::filesystem::path &path,
                        ReportFormat format);
std::vector<ClassificationReport> read_reports_json(std::istream &in);

} // namespace toricfano
