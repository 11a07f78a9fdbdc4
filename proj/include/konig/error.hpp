#pragma once

#include <stdexcept>
#include <string>

namespace konig {

enum class ErrorKind {
  kSameSideEdge,
  kIndexOutOfRange,
  kDuplicateVertex,
  kUnknownVertex,
  kNotBipartite,
  kForeignMatching,
  kInvalidMatching,
  kInvalidPath,
  kInvalidArgument,
  kSaturatedStart,
  kNotACover,
  kNotMinimumCover,
  kSaturationImpossible,
  kRoundTripFailed,
  kNotAugmenting,
  kMalformedStructure,
  kNotMaximal,
  kPathExplosion,
  kEmptyGraph,
  kBudgetExceeded,
  kParse,
  kIo,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map them to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace konig
