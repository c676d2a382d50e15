#pragma once

#include <stdexcept>
#include <string>

namespace procmine {

/// Thrown for every data, parameter, and validation failure in the library.
/// Messages carry positions (row, trace/event index, step index) where the
/// failing operation has one.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace procmine
