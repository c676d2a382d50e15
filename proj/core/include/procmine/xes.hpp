#pragma once

#include <string>
#include <string_view>

#include "procmine/event_log.hpp"

namespace procmine {

// XES subset exchanged between the pipeline stages: log/trace/event elements,
// string and date attributes, concept:name / time:timestamp / org:resource.
// Attributes of other XES types are kept as text rather than rejected.

/// Parses the XES subset. Events need concept:name and time:timestamp;
/// violations raise Error with 1-based trace/event indexes, malformed XML
/// raises Error with line:column.
EventLog parse_xes(std::string_view text, std::string_view source_name = "");

/// Traces in case_id lexicographic order, timestamps at forced millisecond
/// precision, attributes sorted by key. Byte-deterministic;
/// parse_xes(write_xes(L)) reproduces canonical tuples exactly.
std::string write_xes(const EventLog& log);

}  // namespace procmine
