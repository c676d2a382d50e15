#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace procmine {

/// Element tree produced by parse_xml. Only what the XES subset needs:
/// elements, attributes, character data; comments, CDATA, processing
/// instructions and DOCTYPE are consumed and dropped.
struct XmlNode {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attrs;  // document order
  std::vector<XmlNode> children;
  std::string text;  // concatenated character data
  int line = 0;
  int col = 0;

  const std::string* attr(std::string_view key) const;
};

/// Parses one document and returns its root element. Malformed input throws
/// Error with line:column position.
XmlNode parse_xml(std::string_view input);

/// Escapes &, <, >, " and control characters for attribute values.
std::string xml_escape_attr(std::string_view s);

}  // namespace procmine
