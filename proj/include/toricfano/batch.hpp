#pragma once

#include "toricfano/criteria.hpp"
#include "toricfano/db.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace toricfano {

/// Classify every record; reports come back in record order. `jobs` <= 0
/// uses the OpenMP default thread count. Output does not depend on `jobs`.
std::vector<ClassificationReport> classify_records(const std::vector<PolytopeRecord> &records, int jobs,
                                                   Int hilbert_m_max = kDefaultHilbertTerms);

/// Single-threaded reference for classify_records.
std::vector<ClassificationReport> classify_records_serial(const std::vector<PolytopeRecord> &records,
                                                          Int hilbert_m_max = kDefaultHilbertTerms);

/// The six id lists over the reflexive reports.
NamedLists compute_lists(const std::vector<ClassificationReport> &reports);

std::vector<Int> set_union(const std::vector<Int> &a, const std::vector<Int> &b);

struct ListDiff {
  std::string name;
  std::size_t expected_count = 0;
  std::size_t computed_count = 0;
  std::vector<Int> missing; ///< expected but not computed
  std::vector<Int> extra;   ///< computed but not expected

  [[nodiscard]] bool counts_match() const { return expected_count == computed_count; }
  [[nodiscard]] bool sets_match() const { return missing.empty() && extra.empty(); }
};

/// One diff per entry of kListNames plus "L_indec|L_aft" for the union.
std::vector<ListDiff> diff_lists(const NamedLists &computed, const NamedLists &expected);

} // namespace toricfano
