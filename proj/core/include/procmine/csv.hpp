#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "procmine/event_log.hpp"

namespace procmine {

/// Maps CSV columns onto event fields. The timestamp pattern must carry all
/// of %Y %m %d %H %M %S %z (see timestamp.hpp); anything weaker cannot honor
/// the UTC-at-ingestion rule.
struct ColumnMapping {
  std::string case_column;
  std::string activity_column;
  std::string timestamp_column;
  std::string timestamp_format = std::string(kDefaultTimestampPattern);
  std::optional<std::string> resource_column;
  std::vector<std::string> attribute_columns;  // pass-through, kept as text
};

/// Mapping for logs this toolkit generates itself: case_id, activity,
/// timestamp, resource columns with ISO-8601 timestamps.
ColumnMapping default_column_mapping();

/// Throws Error on duplicate/overlapping column names or a bad pattern.
void validate_mapping(const ColumnMapping& m);

ColumnMapping mapping_from_json(const nlohmann::json& j);
nlohmann::json mapping_to_json(const ColumnMapping& m);

/// RFC 4180 parse (UTF-8, comma delimiter, header row required). One event
/// per data row, seq by file order, result normalized. Errors carry 1-based
/// row numbers counted from the header row.
EventLog parse_csv(std::string_view text, const ColumnMapping& mapping,
                   std::string_view source_name = "");

/// Cases in case_id lexicographic order, events in (timestamp, seq) order,
/// fields quoted per RFC 4180, CRLF record ends. Byte-deterministic;
/// parse_csv(write_csv(L)) reproduces canonical tuples exactly.
std::string write_csv(const EventLog& log, const ColumnMapping& mapping);

}  // namespace procmine
