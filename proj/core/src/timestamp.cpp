#include "procmine/timestamp.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>

#include "procmine/error.hpp"

namespace procmine {
namespace {

constexpr std::int64_t kMsPerSecond = 1000;
constexpr std::int64_t kMsPerMinute = 60 * kMsPerSecond;
constexpr std::int64_t kMsPerHour = 60 * kMsPerMinute;
constexpr std::int64_t kMsPerDay = 24 * kMsPerHour;

// Days between 1970-01-01 and y-m-d in the proleptic Gregorian calendar
// (Howard Hinnant's civil-days algorithm).
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, std::int64_t& y, unsigned& m, unsigned& d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = doy - (153 * mp + 2) / 5 + 1;
  m = mp + (mp < 10 ? 3 : -9);
  y += m <= 2;
}

bool is_leap(std::int64_t y) {
  return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

unsigned last_day_of_month(std::int64_t y, unsigned m) {
  static constexpr std::array<unsigned, 12> days = {31, 28, 31, 30, 31, 30,
                                                    31, 31, 30, 31, 30, 31};
  if (m == 2 && is_leap(y)) {
    return 29;
  }
  return days[m - 1];
}

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error("timestamp \"" + std::string(text) + "\": " + what +
                " at offset " + std::to_string(pos));
  }

  std::int64_t digits(int count, const char* what) {
    std::int64_t v = 0;
    for (int i = 0; i < count; ++i) {
      if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        fail(std::string("expected ") + std::to_string(count) + "-digit " + what);
      }
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    return v;
  }

  void literal(char c) {
    if (done() || peek() != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos;
  }
};

struct Fields {
  std::int64_t year = 1970;
  unsigned month = 1;
  unsigned day = 1;
  std::int64_t hour = 0;
  std::int64_t minute = 0;
  std::int64_t second = 0;
  std::int64_t millis = 0;
  std::int64_t offset_minutes = 0;
  bool have_offset = false;
};

void parse_offset(Cursor& c, Fields& f) {
  if (c.done()) {
    c.fail("expected timezone offset");
  }
  const char ch = c.peek();
  if (ch == 'Z' || ch == 'z') {
    ++c.pos;
    f.offset_minutes = 0;
    f.have_offset = true;
    return;
  }
  if (ch != '+' && ch != '-') {
    c.fail("expected 'Z' or signed offset");
  }
  const int sign = ch == '-' ? -1 : 1;
  ++c.pos;
  const std::int64_t hh = c.digits(2, "offset hour");
  if (!c.done() && c.peek() == ':') {
    ++c.pos;
  }
  const std::int64_t mm = c.digits(2, "offset minute");
  if (hh > 23 || mm > 59) {
    c.fail("offset out of range");
  }
  f.offset_minutes = sign * (hh * 60 + mm);
  f.have_offset = true;
}

void parse_fraction(Cursor& c, Fields& f) {
  if (c.done() || c.peek() != '.') {
    return;
  }
  ++c.pos;
  if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek()))) {
    c.fail("expected fractional digits after '.'");
  }
  std::int64_t ms = 0;
  int seen = 0;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
    if (seen < 3) {
      ms = ms * 10 + (c.peek() - '0');
      ++seen;
    }
    ++c.pos;  // digits beyond millisecond precision are truncated
  }
  while (seen < 3) {
    ms *= 10;
    ++seen;
  }
  f.millis = ms;
}

}  // namespace

void validate_timestamp_pattern(std::string_view pattern) {
  std::array<int, 7> seen{};  // Y m d H M S z
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (pattern[i] != '%') {
      continue;
    }
    if (i + 1 >= pattern.size()) {
      throw Error("timestamp pattern ends with dangling '%'");
    }
    const char t = pattern[++i];
    switch (t) {
      case 'Y': ++seen[0]; break;
      case 'm': ++seen[1]; break;
      case 'd': ++seen[2]; break;
      case 'H': ++seen[3]; break;
      case 'M': ++seen[4]; break;
      case 'S': ++seen[5]; break;
      case 'z': ++seen[6]; break;
      case '%': break;
      default:
        throw Error(std::string("timestamp pattern: unsupported token %") + t);
    }
  }
  static constexpr std::array<const char*, 7> names = {"%Y", "%m", "%d", "%H",
                                                       "%M", "%S", "%z"};
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (seen[i] != 1) {
      throw Error(std::string("timestamp pattern must contain ") + names[i] +
                  " exactly once");
    }
  }
}

TimestampMs parse_timestamp(std::string_view text, std::string_view pattern) {
  validate_timestamp_pattern(pattern);
  Cursor c{text};
  Fields f;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    const char pc = pattern[i];
    if (pc != '%') {
      c.literal(pc);
      continue;
    }
    const char t = pattern[++i];
    switch (t) {
      case 'Y': f.year = c.digits(4, "year"); break;
      case 'm': f.month = static_cast<unsigned>(c.digits(2, "month")); break;
      case 'd': f.day = static_cast<unsigned>(c.digits(2, "day")); break;
      case 'H': f.hour = c.digits(2, "hour"); break;
      case 'M': f.minute = c.digits(2, "minute"); break;
      case 'S':
        f.second = c.digits(2, "second");
        parse_fraction(c, f);
        break;
      case 'z': parse_offset(c, f); break;
      case '%': c.literal('%'); break;
      default: break;  // unreachable, pattern validated
    }
  }
  if (!c.done()) {
    c.fail("trailing characters");
  }
  if (f.month < 1 || f.month > 12) {
    throw Error("timestamp \"" + std::string(text) + "\": month out of range");
  }
  if (f.day < 1 || f.day > last_day_of_month(f.year, f.month)) {
    throw Error("timestamp \"" + std::string(text) + "\": day out of range");
  }
  if (f.hour > 23 || f.minute > 59 || f.second > 60) {
    throw Error("timestamp \"" + std::string(text) + "\": time out of range");
  }
  if (!f.have_offset) {
    throw Error("timestamp \"" + std::string(text) + "\": missing timezone");
  }
  std::int64_t ms = days_from_civil(f.year, f.month, f.day) * kMsPerDay;
  ms += f.hour * kMsPerHour + f.minute * kMsPerMinute + f.second * kMsPerSecond;
  ms += f.millis;
  ms -= f.offset_minutes * kMsPerMinute;  // normalize to UTC
  return ms;
}

namespace {

std::string format_impl(TimestampMs ts, std::string_view pattern, bool force_ms) {
  std::int64_t days = ts / kMsPerDay;
  std::int64_t rem = ts % kMsPerDay;
  if (rem < 0) {
    rem += kMsPerDay;
    --days;
  }
  std::int64_t year;
  unsigned month, day;
  civil_from_days(days, year, month, day);
  const std::int64_t hour = rem / kMsPerHour;
  const std::int64_t minute = (rem / kMsPerMinute) % 60;
  const std::int64_t second = (rem / kMsPerSecond) % 60;
  const std::int64_t millis = rem % kMsPerSecond;

  std::string out;
  char buf[16];
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    const char pc = pattern[i];
    if (pc != '%') {
      out += pc;
      continue;
    }
    const char t = pattern[++i];
    switch (t) {
      case 'Y':
        std::snprintf(buf, sizeof buf, "%04lld", static_cast<long long>(year));
        out += buf;
        break;
      case 'm':
        std::snprintf(buf, sizeof buf, "%02u", month);
        out += buf;
        break;
      case 'd':
        std::snprintf(buf, sizeof buf, "%02u", day);
        out += buf;
        break;
      case 'H':
        std::snprintf(buf, sizeof buf, "%02lld", static_cast<long long>(hour));
        out += buf;
        break;
      case 'M':
        std::snprintf(buf, sizeof buf, "%02lld", static_cast<long long>(minute));
        out += buf;
        break;
      case 'S':
        std::snprintf(buf, sizeof buf, "%02lld", static_cast<long long>(second));
        out += buf;
        if (force_ms || millis != 0) {
          std::snprintf(buf, sizeof buf, ".%03lld", static_cast<long long>(millis));
          out += buf;
        }
        break;
      case 'z':
        out += "+00:00";
        break;
      case '%':
        out += '%';
        break;
      default:
        break;
    }
  }
  return out;
}

}  // namespace

std::string format_timestamp(TimestampMs ts, std::string_view pattern) {
  validate_timestamp_pattern(pattern);
  return format_impl(ts, pattern, /*force_ms=*/false);
}

std::string format_timestamp_iso_ms(TimestampMs ts) {
  return format_impl(ts, kDefaultTimestampPattern, /*force_ms=*/true);
}

std::string humanize_duration(double ms) {
  struct Unit {
    const char* name;
    double ms;
  };
  static constexpr Unit units[] = {
      {"d", 86400000.0}, {"h", 3600000.0}, {"min", 60000.0}, {"s", 1000.0}};
  const double mag = std::abs(ms);
  for (const Unit& u : units) {
    if (mag / u.ms >= 2.0) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.1f %s", ms / u.ms, u.name);
      return buf;
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f ms", ms);
  return buf;
}

}  // namespace procmine
