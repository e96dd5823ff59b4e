#include "nestroot/error.hpp"

namespace nestroot {

const char* ToString(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidOrder:
      return "invalid-order";
    case ErrorKind::kRankOutOfBounds:
      return "rank-out-of-bounds";
    case ErrorKind::kNegativeRadicand:
      return "negative-radicand";
    case ErrorKind::kInsufficientPrecision:
      return "insufficient-precision";
    case ErrorKind::kExponentOverflow:
      return "exponent-overflow";
    case ErrorKind::kSizeLimit:
      return "size-limit";
    case ErrorKind::kDomain:
      return "domain";
    case ErrorKind::kUndersampling:
      return "undersampling";
    case ErrorKind::kParse:
      return "parse";
    case ErrorKind::kCannotCertify:
      return "cannot-certify";
    case ErrorKind::kInternalInconsistency:
      return "internal-inconsistency";
  }
  return "unknown";
}

}  // namespace nestroot
