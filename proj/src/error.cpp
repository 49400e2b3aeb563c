#include "udg/error.hpp"

namespace udg {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::InternalAssertionFailed: return "InternalAssertionFailed";
    case ErrorKind::ResampleExceeded: return "ResampleExceeded";
    case ErrorKind::FullSpan: return "FullSpan";
    case ErrorKind::DegenerateSpan: return "DegenerateSpan";
    case ErrorKind::NotOnSphere: return "NotOnSphere";
    case ErrorKind::NotDegenerate: return "NotDegenerate";
    case ErrorKind::K33Excluded: return "K33Excluded";
    case ErrorKind::TooManyEdges: return "TooManyEdges";
    case ErrorKind::ForbiddenSubgraphForSphere: return "ForbiddenSubgraphForSphere";
    case ErrorKind::UnreachableByTheorem: return "UnreachableByTheorem";
    case ErrorKind::DidNotDecide: return "DidNotDecide";
    case ErrorKind::MissingVertex: return "MissingVertex";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind k, const std::string& msg)
    : std::runtime_error(std::string(to_string(k)) + ": " + msg), kind(k) {}

void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

}  // namespace udg
