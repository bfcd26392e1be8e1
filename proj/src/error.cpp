#include "pizza/error.hpp"

namespace pizza {

const char* code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::DepthLimitExceeded: return "DepthLimitExceeded";
    case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorCode::NotContinuousGerm: return "NotContinuousGerm";
    case ErrorCode::NonVanishingAtOrigin: return "NonVanishingAtOrigin";
    case ErrorCode::PositivityUnverifiable: return "PositivityUnverifiable";
    case ErrorCode::UnsupportedExpression: return "UnsupportedExpression";
    case ErrorCode::SectorMismatch: return "SectorMismatch";
    case ErrorCode::InvalidPizza: return "InvalidPizza";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::InvalidSlice: return "InvalidSlice";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::AllSamplesZero: return "AllSamplesZero";
    case ErrorCode::OutsideAllSectors: return "OutsideAllSectors";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IOError: return "IOError";
  }
  return "Unknown";
}

}  // namespace pizza
