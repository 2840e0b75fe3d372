#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ltlshield {

// Base for every error the library reports. Callers that only care about
// "something in ltlshield failed" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A construction exceeded its configured state budget.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

}  // namespace ltlshield
