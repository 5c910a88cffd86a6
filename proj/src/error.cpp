#include "numcurve/error.hpp"

namespace numcurve {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyGenerators: return "EmptyGenerators";
    case ErrorKind::NonCoprime: return "NonCoprime";
    case ErrorKind::ZeroGenerator: return "ZeroGenerator";
    case ErrorKind::NotAMember: return "NotAMember";
    case ErrorKind::GeneratorNotInS: return "GeneratorNotInS";
    case ErrorKind::ZeroInIdeal: return "ZeroInIdeal";
    case ErrorKind::EvenB: return "EvenB";
    case ErrorKind::BNotInS: return "BNotInS";
    case ErrorKind::ParentMismatch: return "ParentMismatch";
    case ErrorKind::StabilizationFailure: return "StabilizationFailure";
    case ErrorKind::UnknownPredicate: return "UnknownPredicate";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace numcurve
