#include "quditx/error.hpp"

namespace quditx {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::NegativeDiagonal: return "NegativeDiagonal";
    case ErrorKind::TraceNotOne: return "TraceNotOne";
    case ErrorKind::BlockPositivityViolated: return "BlockPositivityViolated";
    case ErrorKind::NotXShaped: return "NotXShaped";
    case ErrorKind::InvalidDensityMatrix: return "InvalidDensityMatrix";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::NotDistribution: return "NotDistribution";
    case ErrorKind::OutOfRegion: return "OutOfRegion";
    case ErrorKind::BadGrid: return "BadGrid";
    case ErrorKind::BadRule: return "BadRule";
    case ErrorKind::BadRange: return "BadRange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::BadFlags: return "BadFlags";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace quditx
