#pragma once

#include <stdexcept>
#include <string>

namespace toricfan {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  SingularBasis,
  ZeroVector,
  DimensionMismatch,
  NotContained,
  UnpairedFacet,
  DegenerateFacet,
  NonGenericWitness,
  PointIsRay,
  OutsideSupport,
  FaceNotPresent,
  MissingLabel,
  MissingCoordinates,
  Internal,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so the
// C API can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace toricfan
