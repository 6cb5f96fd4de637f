#include "artinkms/error.hpp"

namespace artinkms {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::AsymmetricMatrix: return "AsymmetricMatrix";
    case ErrorKind::BadDiagonal: return "BadDiagonal";
    case ErrorKind::BadEntry: return "BadEntry";
    case ErrorKind::InconsistentWeights: return "InconsistentWeights";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NonUniformWeights: return "NonUniformWeights";
    case ErrorKind::IdentityEntry: return "IdentityEntry";
    case ErrorKind::IdentityArgument: return "IdentityArgument";
    case ErrorKind::LeafInput: return "LeafInput";
    case ErrorKind::Inconclusive: return "Inconclusive";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::GuaranteeUnavailable: return "GuaranteeUnavailable";
    case ErrorKind::UnsaturatedPinf: return "UnsaturatedPinf";
    case ErrorKind::NoPositiveRoot: return "NoPositiveRoot";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Defect: return "Defect";
  }
  return "Unknown";
}

}  // namespace artinkms
