#include "procmine/stats.hpp"

#include <algorithm>

#include "procmine/error.hpp"

namespace procmine {

DurationStats duration_stats_sorted(const std::vector<DurationMs>& sorted) {
  if (sorted.empty()) {
    throw Error("duration_stats: no values");
  }
  DurationStats s;
  s.count = static_cast<std::int64_t>(sorted.size());
  double sum = 0.0;
  for (DurationMs v : sorted) {
    sum += static_cast<double>(v);
  }
  s.mean_ms = sum / static_cast<double>(s.count);
  const std::size_t n = sorted.size();
  if (n % 2 == 1) {
    s.median_ms = static_cast<double>(sorted[n / 2]);
  } else {
    s.median_ms = (static_cast<double>(sorted[n / 2 - 1]) +
                   static_cast<double>(sorted[n / 2])) /
                  2.0;
  }
  s.min_ms = sorted.front();
  s.max_ms = sorted.back();
  return s;
}

DurationStats duration_stats(std::vector<DurationMs> values) {
  std::sort(values.begin(), values.end());
  return duration_stats_sorted(values);
}

nlohmann::json stats_to_json(const DurationStats& s) {
  return nlohmann::json{{"count", s.count},
                        {"mean_ms", s.mean_ms},
                        {"median_ms", s.median_ms},
                        {"min_ms", s.min_ms},
                        {"max_ms", s.max_ms}};
}

DurationStats stats_from_json(const nlohmann::json& j) {
  DurationStats s;
  s.count = j.at("count").get<std::int64_t>();
  s.mean_ms = j.at("mean_ms").get<double>();
  s.median_ms = j.at("median_ms").get<double>();
  s.min_ms = j.at("min_ms").get<DurationMs>();
  s.max_ms = j.at("max_ms").get<DurationMs>();
  return s;
}

}  // namespace procmine
