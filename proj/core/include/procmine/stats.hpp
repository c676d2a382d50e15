#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "procmine/timestamp.hpp"

namespace procmine {

/// Summary statistics over a non-empty set of millisecond durations.
/// Median of an even count is the arithmetic mean of the two middle values.
struct DurationStats {
  std::int64_t count = 0;
  double mean_ms = 0.0;
  double median_ms = 0.0;
  DurationMs min_ms = 0;
  DurationMs max_ms = 0;

  bool operator==(const DurationStats&) const = default;
};

/// Computes DurationStats; sorts a copy of `values`. Throws Error when empty.
DurationStats duration_stats(std::vector<DurationMs> values);

/// Mean/median over an already sorted list; summation runs in sorted order so
/// results are independent of how the list was assembled.
DurationStats duration_stats_sorted(const std::vector<DurationMs>& sorted);

nlohmann::json stats_to_json(const DurationStats& s);
DurationStats stats_from_json(const nlohmann::json& j);

}  // namespace procmine
