#pragma once

#include <stdexcept>
#include <string>

namespace quintic {

// Error taxonomy. Every throwing operation documents which of these it uses.

// Caller passed something outside the operation's domain.
struct argument_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Operation requires state the object does not have (e.g. an unfrozen group).
struct state_error : std::logic_error {
  using std::logic_error::logic_error;
};

// A configured bound (degree, orbit size, index) would be exceeded.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A randomized search exhausted its retry budget.
struct search_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Row or feature deliberately not supported.
struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input file could not be parsed; carries 1-based line and column.
struct parse_error : std::runtime_error {
  int line;
  int column;
  parse_error(const std::string& what, int line_, int column_)
      : std::runtime_error(what + " (line " + std::to_string(line_) +
                           ", column " + std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
};

// Internal consistency check failed; indicates a bug, not bad input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace quintic
