#include "cascade/error.hpp"

namespace cascade {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kEmptyGraph: return "EmptyGraph";
    case ErrorCode::kDuplicateNode: return "DuplicateNode";
    case ErrorCode::kDanglingEdge: return "DanglingEdge";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kInvalidWeight: return "InvalidWeight";
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kStateGraphMismatch: return "StateGraphMismatch";
    case ErrorCode::kUnknownSource: return "UnknownSource";
    case ErrorCode::kInvalidScenario: return "InvalidScenario";
    case ErrorCode::kInvalidAlpha: return "InvalidAlpha";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kInvalidControlId: return "InvalidControlId";
    case ErrorCode::kInvalidThreatId: return "InvalidThreatId";
    case ErrorCode::kUnknownComponent: return "UnknownComponent";
    case ErrorCode::kUnknownControl: return "UnknownControl";
    case ErrorCode::kInvalidStrategy: return "InvalidStrategy";
    case ErrorCode::kMissingKindMetadata: return "MissingKindMetadata";
    case ErrorCode::kIo: return "IoError";
  }
  return "Error";
}

}  // namespace cascade
