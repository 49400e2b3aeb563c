#pragma once

#include <stdexcept>
#include <string>

namespace udg {

enum class ErrorKind {
  PreconditionViolated,
  InternalAssertionFailed,
  ResampleExceeded,
  FullSpan,
  DegenerateSpan,
  NotOnSphere,
  NotDegenerate,
  K33Excluded,
  TooManyEdges,
  ForbiddenSubgraphForSphere,
  UnreachableByTheorem,
  DidNotDecide,
  MissingVertex,
  NoSolution,
  ParseError,
};

const char* to_string(ErrorKind k);

struct Error : std::runtime_error {
  ErrorKind kind;
  Error(ErrorKind k, const std::string& msg);
};

[[noreturn]] void fail(ErrorKind k, const std::string& msg);

inline void require(bool cond, ErrorKind k, const std::string& msg) {
  if (!cond) fail(k, msg);
}

// Internal invariants; a throw here means a bug, not an input property.
inline void check_internal(bool cond, const std::string& msg) {
  if (!cond) fail(ErrorKind::InternalAssertionFailed, msg);
}

}  // namespace udg
