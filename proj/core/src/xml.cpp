#include "procmine/xml.hpp"

#include <cctype>

#include "procmine/error.hpp"

namespace procmine {

const std::string* XmlNode::attr(std::string_view key) const {
  for (const auto& [k, v] : attrs) {
    if (k == key) {
      return &v;
    }
  }
  return nullptr;
}

namespace {

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':';
}
bool is_name_char(char c) {
  return is_name_start(c) || std::isdigit(static_cast<unsigned char>(c)) ||
         c == '-' || c == '.';
}

class Parser {
public:
  explicit Parser(std::string_view in) : in_(in) {}

  XmlNode parse_document() {
    skip_misc();
    if (done() || peek() != '<') {
      fail("expected root element");
    }
    XmlNode root = parse_element();
    skip_misc();
    if (!done()) {
      fail("content after root element");
    }
    return root;
  }

private:
  std::string_view in_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;

  bool done() const { return pos_ >= in_.size(); }
  char peek() const { return in_[pos_]; }

  char advance() {
    const char c = in_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error("xml " + std::to_string(line_) + ":" + std::to_string(col_) +
                ": " + what);
  }

  bool starts_with(std::string_view s) const {
    return in_.substr(pos_, s.size()) == s;
  }

  void expect(std::string_view s) {
    if (!starts_with(s)) {
      fail("expected \"" + std::string(s) + "\"");
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
      advance();
    }
  }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) {
      advance();
    }
  }

  // Whitespace, comments, PIs, XML declaration, DOCTYPE (no internal subset
  // recursion needed; bracketed subsets are skipped bracket-aware).
  void skip_misc() {
    for (;;) {
      skip_ws();
      if (starts_with("<?")) {
        skip_until("?>");
      } else if (starts_with("<!--")) {
        skip_until("-->");
      } else if (starts_with("<!DOCTYPE")) {
        int depth = 0;
        while (!done()) {
          const char c = advance();
          if (c == '[' || c == '<') {
            ++depth;
          } else if (c == ']') {
            --depth;
          } else if (c == '>') {
            if (depth <= 0) {
              break;
            }
            --depth;
          }
        }
      } else {
        return;
      }
    }
  }

  void skip_until(std::string_view end) {
    while (!done()) {
      if (starts_with(end)) {
        expect(end);
        return;
      }
      advance();
    }
    fail("unterminated \"" + std::string(end) + "\" construct");
  }

  std::string parse_name() {
    if (done() || !is_name_start(peek())) {
      fail("expected name");
    }
    std::string name;
    while (!done() && is_name_char(peek())) {
      name += advance();
    }
    return name;
  }

  void append_entity(std::string& out) {
    expect("&");
    std::string ent;
    while (!done() && peek() != ';') {
      ent += advance();
      if (ent.size() > 10) {
        fail("unterminated entity reference");
      }
    }
    if (done()) {
      fail("unterminated entity reference");
    }
    advance();  // ';'
    if (ent == "amp") {
      out += '&';
    } else if (ent == "lt") {
      out += '<';
    } else if (ent == "gt") {
      out += '>';
    } else if (ent == "quot") {
      out += '"';
    } else if (ent == "apos") {
      out += '\'';
    } else if (!ent.empty() && ent[0] == '#') {
      long code = 0;
      try {
        code = (ent.size() > 1 && (ent[1] == 'x' || ent[1] == 'X'))
                   ? std::stol(ent.substr(2), nullptr, 16)
                   : std::stol(ent.substr(1), nullptr, 10);
      } catch (const std::exception&) {
        fail("bad character reference &" + ent + ";");
      }
      if (code < 0 || code > 0x10FFFF) {
        fail("character reference out of range");
      }
      // UTF-8 encode.
      const unsigned long cp = static_cast<unsigned long>(code);
      if (cp < 0x80) {
        out += static_cast<char>(cp);
      } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
      } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
      } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
      }
    } else {
      fail("unknown entity &" + ent + ";");
    }
  }

  std::string parse_attr_value() {
    if (done() || (peek() != '"' && peek() != '\'')) {
      fail("expected quoted attribute value");
    }
    const char quote = advance();
    std::string value;
    while (!done() && peek() != quote) {
      if (peek() == '&') {
        append_entity(value);
      } else if (peek() == '<') {
        fail("'<' in attribute value");
      } else {
        value += advance();
      }
    }
    if (done()) {
      fail("unterminated attribute value");
    }
    advance();
    return value;
  }

  XmlNode parse_element() {
    XmlNode node;
    node.line = line_;
    node.col = col_;
    expect("<");
    node.name = parse_name();
    for (;;) {
      skip_ws();
      if (done()) {
        fail("unterminated start tag <" + node.name);
      }
      if (peek() == '>') {
        advance();
        break;
      }
      if (starts_with("/>")) {
        expect("/>");
        return node;
      }
      std::string key = parse_name();
      skip_ws();
      expect("=");
      skip_ws();
      for (const auto& [k, v] : node.attrs) {
        if (k == key) {
          fail("duplicate attribute \"" + key + "\"");
        }
      }
      node.attrs.emplace_back(std::move(key), parse_attr_value());
    }
    // Content.
    for (;;) {
      if (done()) {
        fail("missing end tag </" + node.name + ">");
      }
      if (starts_with("</")) {
        expect("</");
        const std::string name = parse_name();
        if (name != node.name) {
          fail("mismatched end tag </" + name + ">, expected </" + node.name + ">");
        }
        skip_ws();
        expect(">");
        return node;
      }
      if (starts_with("<!--")) {
        skip_until("-->");
      } else if (starts_with("<![CDATA[")) {
        expect("<![CDATA[");
        while (!done() && !starts_with("]]>")) {
          node.text += advance();
        }
        expect("]]>");
      } else if (starts_with("<?")) {
        skip_until("?>");
      } else if (peek() == '<') {
        node.children.push_back(parse_element());
      } else if (peek() == '&') {
        append_entity(node.text);
      } else {
        node.text += advance();
      }
    }
  }
};

}  // namespace

XmlNode parse_xml(std::string_view input) {
  return Parser(input).parse_document();
}

std::string xml_escape_attr(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\n': out += "&#10;"; break;
      case '\r': out += "&#13;"; break;
      case '\t': out += "&#9;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace procmine
