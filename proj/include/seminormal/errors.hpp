#pragma once

#include <stdexcept>
#include <string>

namespace seminormal {

/// Raised by rf_parse / shape parsing with the offending position.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Denominator vanishes at the requested evaluation point.
class PoleError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Group enumeration or verification sweep exceeds the configured size cap.
class CapError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Shape / representation label is not valid for the requested group type.
class InvalidLabel : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace seminormal
