#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace procmine {

// Instants are UTC milliseconds since the Unix epoch; durations are
// millisecond counts. All arithmetic stays in integer milliseconds,
// humanization happens at the presentation layer only.
using TimestampMs = std::int64_t;
using DurationMs = std::int64_t;

// Pattern tokens: %Y %m %d %H %M %S %z %% plus literal characters.
// %S parses an optional fractional part (".1", ".123", extra digits
// truncated to milliseconds) and emits ".mmm" only when nonzero.
// %z parses "Z", "+HH:MM", "-HH:MM", "+HHMM", "-HHMM" and emits "+00:00"
// (instants are normalized to UTC at ingestion, offsets honored then
// discarded).
inline constexpr std::string_view kDefaultTimestampPattern = "%Y-%m-%dT%H:%M:%S%z";

/// Parses `text` against `pattern`; throws Error on any mismatch, bad
/// calendar date, or missing timezone token.
TimestampMs parse_timestamp(std::string_view text,
                            std::string_view pattern = kDefaultTimestampPattern);

/// Formats `ts` in UTC against `pattern` (see token notes above).
std::string format_timestamp(TimestampMs ts,
                             std::string_view pattern = kDefaultTimestampPattern);

/// ISO-8601 with forced millisecond digits: "2022-01-06T09:30:00.000+00:00".
std::string format_timestamp_iso_ms(TimestampMs ts);

/// Throws Error unless `pattern` contains each of %Y %m %d %H %M %S %z
/// exactly once (anything weaker cannot satisfy the UTC-at-ingestion and
/// round-trip contracts).
void validate_timestamp_pattern(std::string_view pattern);

/// One-decimal duration rendering: picks the largest unit of {d, h, min, s}
/// in which the magnitude is at least 2, falling back to ms. 165240000 ms
/// renders as "45.9 h", -439776000 ms as "-5.1 d".
std::string humanize_duration(double ms);

}  // namespace procmine
