#include "mould/error.hpp"

namespace mould {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::zero_denominator: return "ZeroDenominator";
    case Errc::not_invertible: return "NotInvertible";
    case Errc::layer_mismatch: return "LayerMismatch";
    case Errc::not_lu: return "NotLU";
    case Errc::truncation_exceeded: return "TruncationExceeded";
    case Errc::overlapping_indices: return "OverlappingIndices";
    case Errc::not_length_homogeneous: return "NotLengthHomogeneous";
    case Errc::not_grouplike_constant: return "NotGrouplikeConstant";
    case Errc::schema_error: return "SchemaError";
    case Errc::unknown_check: return "UnknownCheck";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace mould
