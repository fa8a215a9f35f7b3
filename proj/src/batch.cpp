#include "toricfano/batch.hpp"

#include "toricfano/polytope.hpp"

#include <algorithm>
#include <exception>
#include <iterator>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace toricfano {

namespace {

ClassificationReport classify_record(const PolytopeRecord &rec, Int hilbert_m_max) {
  try {
    const LatticePolytope p = convex_hull(rec.vertices);
    if (!is_fano(p)) throw InputError("polytope is not Fano");
    return classify(p, rec.id, hilbert_m_max);
  } catch (const InputError &e) {
    throw InputError("polytope " + std::to_string(rec.id) + ": " + e.what());
  } catch (const std::invalid_argument &e) {
    throw InputError("polytope " + std::to_string(rec.id) + ": " + e.what());
  }
}

} // namespace

std::vector<ClassificationReport> classify_records_serial(const std::vector<PolytopeRecord> &records,
                                                          Int hilbert_m_max) {
  std::vector<ClassificationReport> out;
  out.reserve(records.size());
  for (const auto &r : records) out.push_back(classify_record(r, hilbert_m_max));
  return out;
}

std::vector<ClassificationReport> classify_records(const std::vector<PolytopeRecord> &records, int jobs,
                                                   Int hilbert_m_max) {
  std::vector<ClassificationReport> out(records.size());
  std::exception_ptr failure;
  const auto n = static_cast<std::ptrdiff_t>(records.size());
#ifdef _OPENMP
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = classify_record(records[static_cast<std::size_t>(i)], hilbert_m_max);
    } catch (...) {
#pragma omp critical(toricfano_batch_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  (void)jobs;
  if (failure) std::rethrow_exception(failure);
  return out;
}

NamedLists compute_lists(const std::vector<ClassificationReport> &reports) {
  NamedLists lists;
  for (auto name : kListNames) lists[std::string(name)];
  for (const auto &r : reports) {
    if (!r.reflexive) continue;
    const auto &v = r.verdicts;
    if (v.smooth.value_or(false)) lists["L_smooth"].push_back(r.id);
    if (v.isolated_singular.value_or(false)) lists["L_isol"].push_back(r.id);
    if (v.nodes.value_or(false)) lists["L_nodes"].push_back(r.id);
    if (v.low_degree.value_or(false)) lists["L_low"].push_back(r.id);
    if (v.indec_obstruction.value_or(false)) lists["L_indec"].push_back(r.id);
    if (v.aft_obstruction.value_or(false)) lists["L_aft"].push_back(r.id);
  }
  for (auto &[name, ids] : lists) std::sort(ids.begin(), ids.end());
  return lists;
}

std::vector<Int> set_union(const std::vector<Int> &a, const std::vector<Int> &b) {
  std::vector<Int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<ListDiff> diff_lists(const NamedLists &computed, const NamedLists &expected) {
  auto get = [](const NamedLists &l, const std::string &k) {
    auto it = l.find(k);
    return it == l.end() ? std::vector<Int>{} : it->second;
  };
  auto diff = [](const std::string &name, const std::vector<Int> &comp, const std::vector<Int> &exp) {
    ListDiff d;
    d.name = name;
    d.computed_count = comp.size();
    d.expected_count = exp.size();
    std::set_difference(exp.begin(), exp.end(), comp.begin(), comp.end(), std::back_inserter(d.missing));
    std::set_difference(comp.begin(), comp.end(), exp.begin(), exp.end(), std::back_inserter(d.extra));
    return d;
  };
  std::vector<ListDiff> out;
  for (auto name : kListNames) {
    const std::string k(name);
    out.push_back(diff(k, get(computed, k), get(expected, k)));
  }
  out.push_back(diff("L_indec|L_aft", set_union(get(computed, "L_indec"), get(computed, "L_aft")),
                     set_union(get(expected, "L_indec"), get(expected, "L_aft"))));
  return out;
}

} // namespace toricfano
