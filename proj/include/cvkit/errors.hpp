#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace cvkit {

enum class ErrorCode {
  GluingNotInvolution,
  SlotGluedToItself,
  EulerCharacteristicInvalid,
  FlowerRequiresNAtLeast4,
  FlipOnFoldedEdge,
  FlipOnSelfGluedSquare,
  FlipIllegal,
  LengthMismatch,
  NegativeEntry,
  NotAdmissible,
  EdgeBalanceViolated,
  TriangulationMismatch,
  NotTrivalent,
  ZeroColoring,
  EmptyRelativeComplex,
  EmptyComplex,
  BadPartition,
  BadWeights,
  ToricHypothesisFails,
  ZeroBeta,
  TauDegenerate,
  IndexOutOfRange,
  NotUnitDeterminant,
  Overflow,
  ParseError,
  UnknownFixture,
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::GluingNotInvolution: return "GluingNotInvolution";
    case ErrorCode::SlotGluedToItself: return "SlotGluedToItself";
    case ErrorCode::EulerCharacteristicInvalid: return "EulerCharacteristicInvalid";
    case ErrorCode::FlowerRequiresNAtLeast4: return "FlowerRequiresNAtLeast4";
    case ErrorCode::FlipOnFoldedEdge: return "FlipOnFoldedEdge";
    case ErrorCode::FlipOnSelfGluedSquare: return "FlipOnSelfGluedSquare";
    case ErrorCode::FlipIllegal: return "FlipIllegal";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::EdgeBalanceViolated: return "EdgeBalanceViolated";
    case ErrorCode::TriangulationMismatch: return "TriangulationMismatch";
    case ErrorCode::NotTrivalent: return "NotTrivalent";
    case ErrorCode::ZeroColoring: return "ZeroColoring";
    case ErrorCode::EmptyRelativeComplex: return "EmptyRelativeComplex";
    case ErrorCode::EmptyComplex: return "EmptyComplex";
    case ErrorCode::BadPartition: return "BadPartition";
    case ErrorCode::BadWeights: return "BadWeights";
    case ErrorCode::ToricHypothesisFails: return "ToricHypothesisFails";
    case ErrorCode::ZeroBeta: return "ZeroBeta";
    case ErrorCode::TauDegenerate: return "TauDegenerate";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotUnitDeterminant: return "NotUnitDeterminant";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
  }
  return "Unknown";
}

// Flip errors are illegal operations, everything else is a validation error.
inline bool is_illegal_operation(ErrorCode c) {
  return c == ErrorCode::FlipOnFoldedEdge || c == ErrorCode::FlipOnSelfGluedSquare ||
         c == ErrorCode::FlipIllegal;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer addition overflow");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer subtraction overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer multiplication overflow");
  return r;
}

}  // namespace cvkit
