#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cascade {

/// Categories of failure reported by the library.
///
/// Every category except kIo is a validation failure of some input;
/// the CLI maps kIo to exit status 2 and everything else to 1.
enum class ErrorCode {
  kEmptyGraph,
  kDuplicateNode,
  kDanglingEdge,
  kSelfLoop,
  kDuplicateEdge,
  kInvalidWeight,
  kUnknownNode,
  kStateGraphMismatch,
  kUnknownSource,
  kInvalidScenario,
  kInvalidAlpha,
  kSchemaError,
  kInvalidControlId,
  kInvalidThreatId,
  kUnknownComponent,
  kUnknownControl,
  kInvalidStrategy,
  kMissingKindMetadata,
  kIo,
};

/// Stable name of an error code, e.g. "UnknownSource".
std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  /// The message is prefixed with the code name: "SelfLoop: a -- a".
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  bool is_io() const noexcept { return code_ == ErrorCode::kIo; }

 private:
  ErrorCode code_;
};

}  // namespace cascade
