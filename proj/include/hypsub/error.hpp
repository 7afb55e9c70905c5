#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypsub {

enum class ErrorCode {
  PresentationInvalid,
  BallTooLarge,
  OutOfBall,
  DimensionZero,
  WrongDimension,
  EmptyTuple,
  RipsViolation,
  RadiusScheduleExceeded,
  VertexNotInHull,
  BasisNotClosed,
  HomotopyIdentityFailed,
  ApproximationConstraint,
  ChainMapResidual,
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

/// Every module error carries a machine-readable code and, for input
/// validation failures, a JSON-pointer style field path.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string path = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& path() const noexcept { return path_; }
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string path_;
  std::string message_;
};

}  // namespace hypsub
