#include "procmine/csv.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "procmine/error.hpp"

namespace procmine {
namespace {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;  // row N in errors = index + 2
};

// Strict RFC 4180: quoted fields may contain commas, quotes ("" escape) and
// line breaks; a bare quote inside an unquoted field is an error.
CsvTable parse_table(std::string_view text) {
  CsvTable table;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_was_quoted = false;
  std::size_t row_no = 1;  // 1-based, header included

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_was_quoted = false;
  };
  auto end_record = [&] {
    end_field();
    if (table.header.empty()) {
      table.header = std::move(record);
    } else {
      table.rows.push_back(std::move(record));
    }
    record.clear();
    ++row_no;
  };

  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < n && text[i + 1] == '"') {
          field += '"';
          i += 2;
        } else {
          in_quotes = false;
          ++i;
        }
      } else {
        field += c;
        ++i;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty() || field_was_quoted) {
          throw Error("csv row " + std::to_string(row_no) +
                      ": unexpected '\"' inside unquoted field");
        }
        in_quotes = true;
        field_was_quoted = true;
        ++i;
        break;
      case ',':
        end_field();
        ++i;
        break;
      case '\r':
        if (i + 1 < n && text[i + 1] == '\n') {
          ++i;
        }
        end_record();
        ++i;
        break;
      case '\n':
        end_record();
        ++i;
        break;
      default:
        if (field_was_quoted) {
          throw Error("csv row " + std::to_string(row_no) +
                      ": data after closing quote");
        }
        field += c;
        ++i;
    }
  }
  if (in_quotes) {
    throw Error("csv row " + std::to_string(row_no) + ": unterminated quoted field");
  }
  // Final record without trailing newline.
  if (!field.empty() || field_was_quoted || !record.empty()) {
    end_record();
  }
  return table;
}

std::size_t column_index(const CsvTable& t, const std::string& name) {
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    if (t.header[i] == name) {
      return i;
    }
  }
  throw Error("csv header: missing mapped column \"" + name + "\"");
}

std::string quote_field(const std::string& f) {
  if (f.find_first_of(",\"\r\n") == std::string::npos) {
    return f;
  }
  std::string out = "\"";
  for (char c : f) {
    if (c == '"') {
      out += "\"\"";
    } else {
      out += c;
    }
  }
  out += '"';
  return out;
}

}  // namespace

ColumnMapping default_column_mapping() {
  ColumnMapping m;
  m.case_column = "case_id";
  m.activity_column = "activity";
  m.timestamp_column = "timestamp";
  m.resource_column = "resource";
  return m;
}

void validate_mapping(const ColumnMapping& m) {
  std::vector<std::string> names = {m.case_column, m.activity_column,
                                    m.timestamp_column};
  for (const std::string& n : names) {
    if (n.empty()) {
      throw Error("column mapping: case/activity/timestamp columns must be named");
    }
  }
  if (m.resource_column) {
    names.push_back(*m.resource_column);
  }
  names.insert(names.end(), m.attribute_columns.begin(), m.attribute_columns.end());
  std::set<std::string> unique(names.begin(), names.end());
  if (unique.size() != names.size()) {
    throw Error("column mapping: mapped column names must be distinct");
  }
  validate_timestamp_pattern(m.timestamp_format);
}

ColumnMapping mapping_from_json(const nlohmann::json& j) {
  if (!j.is_object()) {
    throw Error("column mapping: expected a JSON object");
  }
  static const std::set<std::string> known = {
      "case_column", "activity_column", "timestamp_column",
      "timestamp_format", "resource_column", "attribute_columns"};
  ColumnMapping m;
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) {
      throw Error("column mapping: unknown key \"" + key + "\"");
    }
  }
  m.case_column = j.at("case_column").get<std::string>();
  m.activity_column = j.at("activity_column").get<std::string>();
  m.timestamp_column = j.at("timestamp_column").get<std::string>();
  if (j.contains("timestamp_format") && !j["timestamp_format"].is_null()) {
    m.timestamp_format = j["timestamp_format"].get<std::string>();
  }
  if (j.contains("resource_column") && !j["resource_column"].is_null()) {
    m.resource_column = j["resource_column"].get<std::string>();
  }
  if (j.contains("attribute_columns") && !j["attribute_columns"].is_null()) {
    m.attribute_columns = j["attribute_columns"].get<std::vector<std::string>>();
  }
  validate_mapping(m);
  return m;
}

nlohmann::json mapping_to_json(const ColumnMapping& m) {
  nlohmann::json j{{"case_column", m.case_column},
                   {"activity_column", m.activity_column},
                   {"timestamp_column", m.timestamp_column},
                   {"timestamp_format", m.timestamp_format},
                   {"attribute_columns", m.attribute_columns}};
  j["resource_column"] = m.resource_column ? nlohmann::json(*m.resource_column)
                                           : nlohmann::json(nullptr);
  return j;
}

EventLog parse_csv(std::string_view text, const ColumnMapping& mapping,
                   std::string_view source_name) {
  validate_mapping(mapping);
  const CsvTable table = parse_table(text);
  if (table.header.empty()) {
    throw Error("csv: missing header row");
  }
  {
    std::set<std::string> seen;
    for (const std::string& h : table.header) {
      if (!seen.insert(h).second) {
        throw Error("csv header: duplicate column name \"" + h + "\"");
      }
    }
  }
  const std::size_t case_idx = column_index(table, mapping.case_column);
  const std::size_t act_idx = column_index(table, mapping.activity_column);
  const std::size_t ts_idx = column_index(table, mapping.timestamp_column);
  std::optional<std::size_t> res_idx;
  if (mapping.resource_column) {
    res_idx = column_index(table, *mapping.resource_column);
  }
  std::vector<std::size_t> attr_idx;
  for (const std::string& a : mapping.attribute_columns) {
    attr_idx.push_back(column_index(table, a));
  }

  EventLog log;
  std::unordered_map<std::string, std::size_t> case_pos;
  std::int64_t seq = 0;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const std::vector<std::string>& row = table.rows[r];
    const std::string row_no = std::to_string(r + 2);  // header is row 1
    if (row.size() != table.header.size()) {
      throw Error("csv row " + row_no + ": expected " +
                  std::to_string(table.header.size()) + " fields, got " +
                  std::to_string(row.size()));
    }
    Event e;
    e.case_id = row[case_idx];
    e.activity = row[act_idx];
    if (e.activity.empty()) {
      throw Error("csv row " + row_no + ": empty activity");
    }
    try {
      e.timestamp = parse_timestamp(row[ts_idx], mapping.timestamp_format);
    } catch (const Error& err) {
      throw Error("csv row " + row_no + ": " + err.what());
    }
    if (res_idx && !row[*res_idx].empty()) {
      e.resource = row[*res_idx];
    }
    for (std::size_t a = 0; a < attr_idx.size(); ++a) {
      e.attributes[mapping.attribute_columns[a]] = row[attr_idx[a]];
    }
    e.seq = seq++;  // file order; normalize() makes it dense per case

    auto [it, inserted] = case_pos.try_emplace(e.case_id, log.cases.size());
    if (inserted) {
      log.cases.push_back(Case{e.case_id, {}});
    }
    log.cases[it->second].events.push_back(std::move(e));
  }
  log.source_meta["format"] = "csv";
  if (!source_name.empty()) {
    log.source_meta["source"] = std::string(source_name);
  }
  log.source_meta["mapping"] = mapping_to_json(mapping).dump();
  return normalize(log);
}

std::string write_csv(const EventLog& log, const ColumnMapping& mapping) {
  validate_mapping(mapping);
  std::vector<std::string> header = {mapping.case_column, mapping.activity_column,
                                     mapping.timestamp_column};
  if (mapping.resource_column) {
    header.push_back(*mapping.resource_column);
  }
  header.insert(header.end(), mapping.attribute_columns.begin(),
                mapping.attribute_columns.end());

  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) {
      out += ',';
    }
    out += quote_field(header[i]);
  }
  out += "\r\n";

  std::vector<const Case*> order;
  order.reserve(log.cases.size());
  for (const Case& c : log.cases) {
    order.push_back(&c);
  }
  std::sort(order.begin(), order.end(),
            [](const Case* a, const Case* b) { return a->case_id < b->case_id; });

  for (const Case* c : order) {
    for (const Event& e : c->events) {
      std::vector<std::string> row = {
          e.case_id, e.activity,
          format_timestamp(e.timestamp, mapping.timestamp_format)};
      if (mapping.resource_column) {
        row.push_back(e.resource.value_or(""));
      }
      for (const std::string& a : mapping.attribute_columns) {
        auto it = e.attributes.find(a);
        row.push_back(it == e.attributes.end() ? "" : it->second);
      }
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) {
          out += ',';
        }
        out += quote_field(row[i]);
      }
      out += "\r\n";
    }
  }
  return out;
}

}  // namespace procmine
