#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lowrank/certify.hpp"

namespace lowrank {

struct SearchConfig {
  int n = 4;
  int r = 1;
  bool symmetric = false;
  std::size_t m = 1;
  std::int64_t lo = -4;
  std::int64_t hi = 4;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  ResourceLimits limits;
  /// Trials run concurrently; each trial's slices run serially.
  Execution execution = Execution::Parallel;

  /// Throws std::invalid_argument naming the bad field.
  void validate() const;
};

/// m matrices with independent uniform entries in [lo, hi], drawn from the
/// stream (seed, trial).
MeasurementEnsemble random_ensemble(const SearchConfig& config, std::size_t trial);

struct SearchHit {
  std::size_t trial = 0;
  MeasurementEnsemble ensemble;
  Certificate certificate;
};

struct SearchReport {
  SearchConfig config;
  std::size_t injective = 0;
  std::size_t fail = 0;
  std::size_t indeterminate = 0;
  /// Reason -> count for FAIL and INDETERMINATE trials.
  std::map<std::string, std::size_t> reasons;
  /// INJECTIVE trials, sorted by trial index.
  std::vector<SearchHit> hits;
};

SearchReport search_minimal(const SearchConfig& config);

}  // namespace lowrank
