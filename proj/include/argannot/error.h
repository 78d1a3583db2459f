#ifndef ARGANNOT_ERROR_H_
#define ARGANNOT_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace argannot {

// Failure classes raised by the toolkit. Names match the codes printed by
// the CLI and returned in HTTP error bodies.
enum class ErrorCode {
  kEmptyInput,
  kInvalidEncoding,
  kUnknownSegment,
  kOffsetOutOfRange,
  kNotAdjacent,
  kCrossParagraph,
  kUnknownLabel,
  kEndpointNotClaim,
  kDuplicatePair,
  kSelfLoop,
  kTargetNotPrior,
  kDuplicateOutgoing,
  kValidationError,
  kSchemaVersionMismatch,
  kReferentialIntegrity,
  kDocumentMismatch,
  kNoOverlap,
  kUncoveredDisagreement,
  kInvalidResult,
  kParseError,
  kIoError,
  kNotFound,
  kConflict,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace argannot

#endif  // ARGANNOT_ERROR_H_
