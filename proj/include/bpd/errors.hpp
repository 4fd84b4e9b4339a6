#pragma once

#include <stdexcept>
#include <string>

namespace bpd {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidInput : Error {
  using Error::Error;
};

/// Malformed diagram text; line/col are 1-indexed.
struct ParseError : Error {
  int line, col;
  ParseError(const std::string& what, int line_, int col_)
      : Error(what + " (line " + std::to_string(line_) + ", col " + std::to_string(col_) + ")"),
        line(line_), col(col_) {}
};

struct NotActive : Error {
  using Error::Error;
};

struct NotApplicable : Error {
  using Error::Error;
};

struct LimitExceeded : Error {
  using Error::Error;
};

struct UnknownPattern : Error {
  using Error::Error;
};

struct InvalidOccurrence : Error {
  using Error::Error;
};

struct NotInSpan : Error {
  using Error::Error;
};

/// A checked identity failed inside the library itself.
struct InternalInconsistency : Error {
  using Error::Error;
};

struct ConstructionFailed : Error {
  using Error::Error;
};

}  // namespace bpd
