#include "opetope/error.hpp"

namespace opetope {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::unknown_basis_id: return "UnknownBasisId";
    case ErrorCode::dimension_zero: return "DimensionZero";
    case ErrorCode::rank_too_large: return "RankTooLarge";
    case ErrorCode::wrong_dimension: return "WrongDimension";
    case ErrorCode::empty_basis: return "EmptyBasis";
    case ErrorCode::fast_path_inapplicable: return "FastPathInapplicable";
    case ErrorCode::not_atomic: return "NotAtomic";
    case ErrorCode::not_unital: return "NotUnital";
    case ErrorCode::formula_mismatch: return "FormulaMismatch";
    case ErrorCode::unknown_edge: return "UnknownEdge";
    case ErrorCode::not_total: return "NotTotal";
    case ErrorCode::multiplicity_violation: return "MultiplicityViolation";
    case ErrorCode::not_opetopic: return "NotOpetopic";
    case ErrorCode::not_reduced: return "NotReduced";
    case ErrorCode::invalid_sequence: return "InvalidSequence";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::reference_error: return "ReferenceError";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::internal: return "InternalError";
  }
  return "Unknown";
}

}  // namespace opetope
