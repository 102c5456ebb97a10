#pragma once

#include <stdexcept>
#include <string>

namespace isotopy {

enum class ErrorCode {
  // surface_map
  InvolutionViolation,
  FixedPointViolation,
  LabelInconsistent,
  NonIntegerGenus,
  NonOrientable,
  LabelSetMismatch,
  // arrangement
  CrossingDegree,
  FragmentGap,
  HMismatch,
  GOnBoundary,
  NonIntegerFaceGenus,
  UnknownEdge,
  // lambda
  CyclomaticTooSmall,
  EdgeInTree,
  NotNormalForm,
  // homotopy
  NotCellular,
  DualDisconnected,
  NotOneVertex,
  NotCanonical,
  SystemMismatch,
  EndpointFaceMismatch,
  UnknownHEdge,
  // plane
  SelfIntersecting,
  PunctureOnEdge,
  DuplicatePoint,
  RayDegeneracy,
  // testkit
  NotSimpleCycle,
  PunctureOnCycle,
  RadiusExceeded,
  // engine / fixed-vertex mode
  InvalidInput,
  AnchorMismatch,
  UnanchoredFixedVertex,
  FixedVerticesShareFace,
  Internal,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvolutionViolation: return "InvolutionViolation";
    case ErrorCode::FixedPointViolation: return "FixedPointViolation";
    case ErrorCode::LabelInconsistent: return "LabelInconsistent";
    case ErrorCode::NonIntegerGenus: return "NonIntegerGenus";
    case ErrorCode::NonOrientable: return "NonOrientable";
    case ErrorCode::LabelSetMismatch: return "LabelSetMismatch";
    case ErrorCode::CrossingDegree: return "CrossingDegree";
    case ErrorCode::FragmentGap: return "FragmentGap";
    case ErrorCode::HMismatch: return "HMismatch";
    case ErrorCode::GOnBoundary: return "GOnBoundary";
    case ErrorCode::NonIntegerFaceGenus: return "NonIntegerFaceGenus";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::CyclomaticTooSmall: return "CyclomaticTooSmall";
    case ErrorCode::EdgeInTree: return "EdgeInTree";
    case ErrorCode::NotNormalForm: return "NotNormalForm";
    case ErrorCode::NotCellular: return "NotCellular";
    case ErrorCode::DualDisconnected: return "DualDisconnected";
    case ErrorCode::NotOneVertex: return "NotOneVertex";
    case ErrorCode::NotCanonical: return "NotCanonical";
    case ErrorCode::SystemMismatch: return "SystemMismatch";
    case ErrorCode::EndpointFaceMismatch: return "EndpointFaceMismatch";
    case ErrorCode::UnknownHEdge: return "UnknownHEdge";
    case ErrorCode::SelfIntersecting: return "SelfIntersecting";
    case ErrorCode::PunctureOnEdge: return "PunctureOnEdge";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::RayDegeneracy: return "RayDegeneracy";
    case ErrorCode::NotSimpleCycle: return "NotSimpleCycle";
    case ErrorCode::PunctureOnCycle: return "PunctureOnCycle";
    case ErrorCode::RadiusExceeded: return "RadiusExceeded";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::AnchorMismatch: return "AnchorMismatch";
    case ErrorCode::UnanchoredFixedVertex: return "UnanchoredFixedVertex";
    case ErrorCode::FixedVerticesShareFace: return "FixedVerticesShareFace";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool cond, ErrorCode code, const std::string& message) {
  if (!cond) fail(code, message);
}

}  // namespace isotopy
