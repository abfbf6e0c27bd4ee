#include "gfd/cardinality.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>

namespace gfd {

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;  // exact: product of i consecutive ints
  }
  return result;
}

std::int64_t fishburn_formula(int n) {
  if (n < 3) throw std::invalid_argument("formula requires n >= 3");
  std::int64_t head = (std::int64_t{n} + 3) << (n - 3);
  std::int64_t tail;
  if (n % 2 == 0) {
    // (n - 3/2) * C(n-2, n/2-1), kept integral as (2n-3)*C/2.
    std::int64_t twice = (2 * std::int64_t{n} - 3) * binomial(n - 2, n / 2 - 1);
    if (twice % 2 != 0) throw std::logic_error("even-case term not integral");
    tail = twice / 2;
  } else {
    tail = ((std::int64_t{n} - 1) / 2) * binomial(n - 1, (n - 1) / 2);
  }
  return head - tail;
}

namespace {

CensusRow census_row(int n, AltSet k_mask, bool with_flags) {
  KSubset k(n, k_mask);
  Domain d = domain_of_scheme(gf_scheme(n, k));
  CensusRow row{n, k, d.size(), std::nullopt};
  if (with_flags) row.report = full_report(d);
  return row;
}

}  // namespace

std::vector<CensusRow> census(int n, bool with_flags, int workers) {
  if (n < 3) throw std::invalid_argument("census requires n >= 3");
  if (n > (with_flags ? 7 : 8))
    throw std::invalid_argument(with_flags ? "census with flags capped at n = 7"
                                           : "size-only census capped at n = 8");
  std::vector<AltSet> k_masks;
  AltSet interior = KSubset::full_set(n).mask();
  // Binary-counter order over the members of [2, n-1].
  auto members = alt_members(interior);
  for (AltSet counter = 0; counter < (AltSet{1} << members.size()); ++counter) {
    AltSet mask = 0;
    for (std::size_t i = 0; i < members.size(); ++i)
      if (counter & (AltSet{1} << i)) mask |= alt_bit(members[i]);
    k_masks.push_back(mask);
  }
  std::vector<CensusRow> rows;
  rows.reserve(k_masks.size());
  if (workers <= 1) {
    for (AltSet mask : k_masks) rows.push_back(census_row(n, mask, with_flags));
    return rows;
  }
  std::vector<std::future<CensusRow>> jobs;
  jobs.reserve(k_masks.size());
  for (AltSet mask : k_masks)
    jobs.push_back(std::async(std::launch::async | std::launch::deferred,
                              census_row, n, mask, with_flags));
  for (auto& job : jobs) rows.push_back(job.get());
  return rows;
}

ExtremalitySummary extremality_report(const std::vector<CensusRow>& rows) {
  if (rows.empty()) throw std::invalid_argument("empty census");
  ExtremalitySummary s;
  s.n = rows.front().n;
  s.min_size = s.max_size = rows.front().size;
  for (const auto& row : rows) {
    s.min_size = std::min(s.min_size, row.size);
    s.max_size = std::max(s.max_size, row.size);
  }
  KSubset fk = KSubset::fishburn(s.n);
  for (const auto& row : rows) {
    if (row.size == s.min_size) s.argmin.push_back(row.k);
    if (row.size == s.max_size) {
      s.argmax.push_back(row.k);
      if (row.k == fk) s.fishburn_attains_max = true;
    }
  }
  return s;
}

namespace {

std::string k_label(const KSubset& k) {
  auto members = k.members();
  if (members.empty()) return "-";
  std::string out;
  for (int j : members) {
    if (!out.empty()) out += '-';
    out += std::to_string(j);
  }
  return out;
}

}  // namespace

std::string ExtremalitySummary::str() const {
  std::ostringstream out;
  out << "n=" << n << " min=" << min_size << " at {";
  for (std::size_t i = 0; i < argmin.size(); ++i)
    out << (i ? "," : "") << k_label(argmin[i]);
  out << "} max=" << max_size << " at {";
  for (std::size_t i = 0; i < argmax.size(); ++i)
    out << (i ? "," : "") << k_label(argmax[i]);
  out << "} fishburn_attains_max=" << (fishburn_attains_max ? "true" : "false");
  return out.str();
}

std::string census_csv(const std::vector<CensusRow>& rows,
                       const ExtremalitySummary& summary) {
  std::ostringstream out;
  out << "n,K,size,condorcet,copious,maximal,maximal_width,directly_connected,"
         "spoc\n";
  auto flag = [](bool b) { return b ? "true" : "false"; };
  for (const auto& row : rows) {
    out << row.n << ',' << k_label(row.k) << ',' << row.size;
    if (row.report) {
      const auto& r = *row.report;
      out << ',' << flag(r.condorcet) << ',' << flag(r.copious) << ','
          << flag(r.maximal) << ',' << flag(r.maximal_width) << ','
          << flag(r.directly_connected) << ',' << flag(r.spoc.found);
    } else {
      out << ",,,,,,";
    }
    out << '\n';
  }
  out << "# " << summary.str() << '\n';
  return out.str();
}

}  // namespace gfd
