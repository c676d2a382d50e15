#include "procmine/xes.hpp"

#include <algorithm>
#include <unordered_map>

#include "procmine/error.hpp"
#include "procmine/xml.hpp"

namespace procmine {
namespace {

constexpr std::string_view kConceptName = "concept:name";
constexpr std::string_view kTimeTimestamp = "time:timestamp";
constexpr std::string_view kOrgResource = "org:resource";

// <string key="..." value="..."/> and friends; returns false for elements
// that are not key/value attributes (extensions, classifiers, globals).
bool attribute_kv(const XmlNode& n, std::string& key, std::string& value) {
  if (n.name != "string" && n.name != "date" && n.name != "int" &&
      n.name != "float" && n.name != "boolean" && n.name != "id") {
    return false;
  }
  const std::string* k = n.attr("key");
  const std::string* v = n.attr("value");
  if (!k || !v) {
    return false;
  }
  key = *k;
  value = *v;
  return true;
}

}  // namespace

EventLog parse_xes(std::string_view text, std::string_view source_name) {
  const XmlNode root = parse_xml(text);
  if (root.name != "log") {
    throw Error("xes: root element is <" + root.name + ">, expected <log>");
  }
  EventLog log;
  std::unordered_map<std::string, std::size_t> case_pos;
  std::int64_t seq = 0;
  std::size_t trace_no = 0;
  for (const XmlNode& trace : root.children) {
    if (trace.name != "trace") {
      continue;  // extensions, globals, classifiers, log attributes
    }
    ++trace_no;
    std::string case_id;
    bool have_id = false;
    for (const XmlNode& child : trace.children) {
      std::string key, value;
      if (attribute_kv(child, key, value) && key == kConceptName) {
        case_id = value;
        have_id = true;
        break;
      }
    }
    if (!have_id) {
      throw Error("xes trace " + std::to_string(trace_no) +
                  ": missing concept:name");
    }
    std::size_t event_no = 0;
    for (const XmlNode& ev : trace.children) {
      if (ev.name != "event") {
        continue;
      }
      ++event_no;
      const std::string where =
          "xes trace " + std::to_string(trace_no) + " event " + std::to_string(event_no);
      Event e;
      e.case_id = case_id;
      bool have_activity = false;
      bool have_time = false;
      for (const XmlNode& child : ev.children) {
        std::string key, value;
        if (!attribute_kv(child, key, value)) {
          continue;
        }
        if (key == kConceptName) {
          e.activity = value;
          have_activity = true;
        } else if (key == kTimeTimestamp) {
          try {
            e.timestamp = parse_timestamp(value);
          } catch (const Error& err) {
            throw Error(where + ": " + err.what());
          }
          have_time = true;
        } else if (key == kOrgResource) {
          e.resource = value;
        } else {
          e.attributes[key] = value;
        }
      }
      if (!have_activity) {
        throw Error(where + ": missing concept:name");
      }
      if (!have_time) {
        throw Error(where + ": missing time:timestamp");
      }
      if (e.activity.empty()) {
        throw Error(where + ": empty concept:name");
      }
      e.seq = seq++;
      auto [it, inserted] = case_pos.try_emplace(case_id, log.cases.size());
      if (inserted) {
        log.cases.push_back(Case{case_id, {}});
      }
      log.cases[it->second].events.push_back(std::move(e));
    }
  }
  log.source_meta["format"] = "xes";
  if (!source_name.empty()) {
    log.source_meta["source"] = std::string(source_name);
  }
  return normalize(log);
}

std::string write_xes(const EventLog& log) {
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<log xes.version=\"1.0\">\n";
  out +=
      "  <extension name=\"Concept\" prefix=\"concept\" "
      "uri=\"http://www.xes-standard.org/concept.xesext\"/>\n";
  out +=
      "  <extension name=\"Time\" prefix=\"time\" "
      "uri=\"http://www.xes-standard.org/time.xesext\"/>\n";
  out +=
      "  <extension name=\"Organizational\" prefix=\"org\" "
      "uri=\"http://www.xes-standard.org/org.xesext\"/>\n";

  std::vector<const Case*> order;
  order.reserve(log.cases.size());
  for (const Case& c : log.cases) {
    order.push_back(&c);
  }
  std::sort(order.begin(), order.end(),
            [](const Case* a, const Case* b) { return a->case_id < b->case_id; });

  for (const Case* c : order) {
    out += "  <trace>\n";
    out += "    <string key=\"concept:name\" value=\"" +
           xml_escape_attr(c->case_id) + "\"/>\n";
    for (const Event& e : c->events) {
      out += "    <event>\n";
      out += "      <string key=\"concept:name\" value=\"" +
             xml_escape_attr(e.activity) + "\"/>\n";
      out += "      <date key=\"time:timestamp\" value=\"" +
             format_timestamp_iso_ms(e.timestamp) + "\"/>\n";
      if (e.resource) {
        out += "      <string key=\"org:resource\" value=\"" +
               xml_escape_attr(*e.resource) + "\"/>\n";
      }
      for (const auto& [key, value] : e.attributes) {
        out += "      <string key=\"" + xml_escape_attr(key) + "\" value=\"" +
               xml_escape_attr(value) + "\"/>\n";
      }
      out += "    </event>\n";
    }
    out += "  </trace>\n";
  }
  out += "</log>\n";
  return out;
}

}  // namespace procmine
