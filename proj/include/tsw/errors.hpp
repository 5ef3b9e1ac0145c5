#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tsw {

// Malformed textual input (ordinal grammar, family DSL, rationals).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        pos_(pos) {}

  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// A configured resource cap was exceeded (support size, ground size, ...).
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& capName, const std::string& detail)
      : std::runtime_error("cap '" + capName + "' exceeded: " + detail),
        cap_(capName) {}

  const std::string& capName() const { return cap_; }

 private:
  std::string cap_;
};

// A postcondition that is re-checked exactly failed to hold.
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace tsw
