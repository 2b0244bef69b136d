#pragma once

#include <stdexcept>
#include <string>

namespace vrpstw {

// Contract violation on caller-supplied data: bad customer ids, malformed
// configurations, broken solution invariants.
class InputError : public std::runtime_error {
  public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed text input; carries the offending 1-based line when known.
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
    ParseError(const std::string& what, int line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    int line() const noexcept { return line_; }

  private:
    int line_ = -1;
};

}  // namespace vrpstw
