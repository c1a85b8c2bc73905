#pragma once

#include <stdexcept>
#include <string>

namespace adsgeo {

enum class ErrorCode {
  InvalidInput,
  DimensionMismatch,
  ZeroVector,
  NotAnIsometry,
  NotIdentityComponent,
  NotOnHyperboloid,
  NotNull,
  BoundaryInput,
  OutsideAffineDomain,
  NotOrthogonal,
  NotNormalized,
  NotLoxodromic,
  CausallyRelated,
  DifferentStableLeaf,
  EmptySample,
  DuplicateRay,
  PureLightlike,
  NotInside,
  NonSpacelikeChord,
  RadialTangent,
};

const char* to_string(ErrorCode code) noexcept;

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotAnIsometry: return "NotAnIsometry";
    case ErrorCode::NotIdentityComponent: return "NotIdentityComponent";
    case ErrorCode::NotOnHyperboloid: return "NotOnHyperboloid";
    case ErrorCode::NotNull: return "NotNull";
    case ErrorCode::BoundaryInput: return "BoundaryInput";
    case ErrorCode::OutsideAffineDomain: return "OutsideAffineDomain";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotLoxodromic: return "NotLoxodromic";
    case ErrorCode::CausallyRelated: return "CausallyRelated";
    case ErrorCode::DifferentStableLeaf: return "DifferentStableLeaf";
    case ErrorCode::EmptySample: return "EmptySample";
    case ErrorCode::DuplicateRay: return "DuplicateRay";
    case ErrorCode::PureLightlike: return "PureLightlike";
    case ErrorCode::NotInside: return "NotInside";
    case ErrorCode::NonSpacelikeChord: return "NonSpacelikeChord";
    case ErrorCode::RadialTangent: return "RadialTangent";
  }
  return "Unknown";
}

}  // namespace adsgeo
