#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "procmine/timestamp.hpp"

namespace procmine {

/// Reserved resource key for events carried out by nobody in particular.
inline constexpr const char* kNoResource = "(none)";

struct Event {
  std::string case_id;
  std::string activity;  // non-empty
  TimestampMs timestamp = 0;
  std::optional<std::string> resource;
  std::map<std::string, std::string> attributes;
  std::int64_t seq = 0;  // intake order, unique within a case
};

struct Case {
  std::string case_id;
  std::vector<Event> events;  // sorted by (timestamp, seq) once normalized
};

/// Cases keep their intake order (first appearance in the source); writers
/// re-sort by case_id so serialized output stays byte-deterministic.
struct EventLog {
  std::vector<Case> cases;  // unique case_ids
  std::map<std::string, std::string> source_meta;

  std::int64_t total_events() const;
  const Case* find_case(std::string_view case_id) const;
};

struct LogSummary {
  std::int64_t case_count = 0;
  std::int64_t event_count = 0;
  std::map<std::string, std::int64_t> event_class_counts;
  std::map<std::string, std::int64_t> resource_counts;  // kNoResource for absent
  std::optional<TimestampMs> first_timestamp;
  std::optional<TimestampMs> last_timestamp;
  std::optional<double> mean_case_duration_ms;
  std::optional<double> median_case_duration_ms;
};

/// Sorts every case's events by (timestamp, seq) and reassigns seq densely
/// (0..n-1) in the sorted order. Idempotent; case order is untouched.
EventLog normalize(const EventLog& log);

/// Last event start minus first event start, in calendar time (weekends and
/// holidays included; events carry start times only). Throws Error on an
/// empty case. Assumes normalized event order.
DurationMs case_duration(const Case& c);

LogSummary summarize(const EventLog& log);

}  // namespace procmine
