#include "schnyder/errors.hpp"

namespace schnyder {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::FixedPointEdge: return "FixedPointEdge";
    case ErrorCode::NotPermutation: return "NotPermutation";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NegativeGenus: return "NegativeGenus";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotZeroHomologous: return "NotZeroHomologous";
    case ErrorCode::NotCirculation: return "NotCirculation";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::NotSchnyder: return "NotSchnyder";
    case ErrorCode::NotEdgeLabeling: return "NotEdgeLabeling";
    case ErrorCode::MalformedIntervalPattern: return "MalformedIntervalPattern";
    case ErrorCode::MonochromaticFace: return "MonochromaticFace";
    case ErrorCode::SinkVertex: return "SinkVertex";
    case ErrorCode::Type0Face: return "Type0Face";
    case ErrorCode::NotDirected: return "NotDirected";
    case ErrorCode::ForbiddenRootFace: return "ForbiddenRootFace";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotHomologous: return "NotHomologous";
    case ErrorCode::NoOrientation: return "NoOrientation";
    case ErrorCode::IterationBudgetExceeded: return "IterationBudgetExceeded";
    case ErrorCode::NotContractible: return "NotContractible";
    case ErrorCode::DegenerateGrid: return "DegenerateGrid";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace schnyder
