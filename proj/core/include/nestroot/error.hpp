#pragma once

#include <stdexcept>
#include <string>

namespace nestroot {

// Every failure raised by the library derives from Error. The kind lets
// front ends map failures onto exit codes without string matching.
enum class ErrorKind {
  kInvalidOrder,
  kRankOutOfBounds,
  kNegativeRadicand,
  kInsufficientPrecision,
  kExponentOverflow,
  kSizeLimit,
  kDomain,
  kUndersampling,
  kParse,
  kCannotCertify,
  kInternalInconsistency,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

const char* ToString(ErrorKind kind);

}  // namespace nestroot
