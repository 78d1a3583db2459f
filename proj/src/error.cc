#include "argannot/error.h"

namespace argannot {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kInvalidEncoding: return "InvalidEncoding";
    case ErrorCode::kUnknownSegment: return "UnknownSegment";
    case ErrorCode::kOffsetOutOfRange: return "OffsetOutOfRange";
    case ErrorCode::kNotAdjacent: return "NotAdjacent";
    case ErrorCode::kCrossParagraph: return "CrossParagraph";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kEndpointNotClaim: return "EndpointNotClaim";
    case ErrorCode::kDuplicatePair: return "DuplicatePair";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kTargetNotPrior: return "TargetNotPrior";
    case ErrorCode::kDuplicateOutgoing: return "DuplicateOutgoing";
    case ErrorCode::kValidationError: return "ValidationError";
    case ErrorCode::kSchemaVersionMismatch: return "SchemaVersionMismatch";
    case ErrorCode::kReferentialIntegrity: return "ReferentialIntegrity";
    case ErrorCode::kDocumentMismatch: return "DocumentMismatch";
    case ErrorCode::kNoOverlap: return "NoOverlap";
    case ErrorCode::kUncoveredDisagreement: return "UncoveredDisagreement";
    case ErrorCode::kInvalidResult: return "InvalidResult";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kConflict: return "Conflict";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace argannot
