#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gfd/analysis.hpp"
#include "gfd/never.hpp"

namespace gfd {

std::int64_t binomial(int n, int k);

// Closed-form |F_K| for the alternating-scheme K, exact integer arithmetic.
std::int64_t fishburn_formula(int n);

struct CensusRow {
  int n;
  KSubset k;
  std::size_t size;
  std::optional<PropertyReport> report;
};

// One row per K in binary-counter order; full flags need n <= 7, size-only
// runs up to n = 8.
std::vector<CensusRow> census(int n, bool with_flags, int workers = 1);

struct ExtremalitySummary {
  int n;
  std::size_t min_size = 0;
  std::size_t max_size = 0;
  std::vector<KSubset> argmin;
  std::vector<KSubset> argmax;
  bool fishburn_attains_max = false;
  std::string str() const;
};

ExtremalitySummary extremality_report(const std::vector<CensusRow>& rows);

// CSV with the spec'd header; extremality summary appended as comment rows.
std::string census_csv(const std::vector<CensusRow>& rows,
                       const ExtremalitySummary& summary);

}  // namespace gfd
