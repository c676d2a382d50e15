#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "procmine/event_log.hpp"

namespace procmine {

/// Per-step audit record. For every step,
/// events_removed + output event count == input event count.
struct StepReport {
  std::string op_name;
  std::int64_t events_removed = 0;
  std::int64_t cases_removed = 0;
  std::int64_t cases_modified = 0;
  nlohmann::json details = nlohmann::json::object();
};

nlohmann::json report_to_json(const StepReport& r);
nlohmann::json reports_to_json(const std::vector<StepReport>& reports);

/// Deletes every event whose activity occurs fewer than min_count times
/// log-wide; cases left empty are dropped.
std::pair<EventLog, StepReport> remove_rare_event_classes(const EventLog& log,
                                                          std::int64_t min_count);

/// Collapses bursts of same-(activity, resource) events within a case: an
/// event goes when the gap from the last KEPT occurrence of that pair is
/// below `threshold` (events separated by >= threshold stay). Anchored-window
/// semantics, so removal is not monotone in the threshold.
std::pair<EventLog, StepReport> dedup_within_threshold(const EventLog& log,
                                                       DurationMs threshold);

enum class AnonymizeMode { sequential, keyed };

/// sequential: "case-000001", ... in order of first appearance.
/// keyed: 32-hex-char token from a keyed PRF (HMAC-SHA256, truncated);
/// deterministic for a fixed key, collision between distinct ids is an error.
std::pair<EventLog, StepReport> anonymize_case_ids(
    const EventLog& log, AnonymizeMode mode,
    const std::optional<std::string>& key = std::nullopt);

std::pair<EventLog, StepReport> rename_activities(
    const EventLog& log, const std::map<std::string, std::string>& mapping);

/// Unmapped resources fall back to default_role when given, otherwise stay
/// and are tallied in the report. Events without a resource are untouched.
std::pair<EventLog, StepReport> map_resources_to_roles(
    const EventLog& log, const std::map<std::string, std::string>& mapping,
    const std::optional<std::string>& default_role = std::nullopt);

enum class DateFilterMode { case_intersects, case_contained };

/// case_contained keeps cases whose first and last events lie in
/// [start, end]; case_intersects keeps cases with at least one event in range
/// (and keeps their out-of-range events too).
std::pair<EventLog, StepReport> filter_date_range(const EventLog& log,
                                                  TimestampMs start,
                                                  TimestampMs end,
                                                  DateFilterMode mode);

/// Keeps cases having >=1 event with attributes[key] in `allowed`.
std::pair<EventLog, StepReport> filter_cases_by_attribute(
    const EventLog& log, const std::string& key,
    const std::set<std::string>& allowed);

struct PipelineStep {
  std::string op;
  nlohmann::json params = nlohmann::json::object();
};

/// Ordered cleaning recipe; file form
/// {"steps":[{"op":"dedup_within_threshold","params":{"threshold_seconds":180}},...]}.
struct PipelineConfig {
  std::vector<PipelineStep> steps;
};

PipelineConfig pipeline_from_json(const nlohmann::json& j);
nlohmann::json pipeline_to_json(const PipelineConfig& config);

/// Validates every step (op name and parameter schema) without running any;
/// errors name the 1-based step index.
void validate_pipeline(const PipelineConfig& config);

/// Applies steps in order; all steps are validated before the first one runs,
/// so a bad config leaves no partial output. Executed step names and
/// parameters are appended to source_meta["pipeline"].
std::pair<EventLog, std::vector<StepReport>> run_pipeline(
    const EventLog& log, const PipelineConfig& config);

}  // namespace procmine
