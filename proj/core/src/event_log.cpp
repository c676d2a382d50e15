#include "procmine/event_log.hpp"

#include <algorithm>

#include "procmine/error.hpp"
#include "procmine/stats.hpp"

namespace procmine {

std::int64_t EventLog::total_events() const {
  std::int64_t n = 0;
  for (const Case& c : cases) {
    n += static_cast<std::int64_t>(c.events.size());
  }
  return n;
}

const Case* EventLog::find_case(std::string_view case_id) const {
  for (const Case& c : cases) {
    if (c.case_id == case_id) {
      return &c;
    }
  }
  return nullptr;
}

EventLog normalize(const EventLog& log) {
  EventLog out = log;
  for (Case& c : out.cases) {
    std::sort(c.events.begin(), c.events.end(), [](const Event& a, const Event& b) {
      if (a.timestamp != b.timestamp) {
        return a.timestamp < b.timestamp;
      }
      return a.seq < b.seq;
    });
    std::int64_t seq = 0;
    for (Event& e : c.events) {
      e.seq = seq++;
    }
  }
  return out;
}

DurationMs case_duration(const Case& c) {
  if (c.events.empty()) {
    throw Error("case_duration: case \"" + c.case_id + "\" has no events");
  }
  return c.events.back().timestamp - c.events.front().timestamp;
}

LogSummary summarize(const EventLog& log) {
  LogSummary s;
  s.case_count = static_cast<std::int64_t>(log.cases.size());
  std::vector<DurationMs> durations;
  durations.reserve(log.cases.size());
  for (const Case& c : log.cases) {
    for (const Event& e : c.events) {
      ++s.event_count;
      ++s.event_class_counts[e.activity];
      ++s.resource_counts[e.resource ? *e.resource : kNoResource];
      if (!s.first_timestamp || e.timestamp < *s.first_timestamp) {
        s.first_timestamp = e.timestamp;
      }
      if (!s.last_timestamp || e.timestamp > *s.last_timestamp) {
        s.last_timestamp = e.timestamp;
      }
    }
    if (!c.events.empty()) {
      durations.push_back(case_duration(c));
    }
  }
  if (!durations.empty()) {
    const DurationStats st = duration_stats(std::move(durations));
    s.mean_case_duration_ms = st.mean_ms;
    s.median_case_duration_ms = st.median_ms;
  }
  return s;
}

}  // namespace procmine
