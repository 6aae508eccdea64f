#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mould {

enum class Errc {
  zero_denominator,
  not_invertible,
  layer_mismatch,
  not_lu,
  truncation_exceeded,
  overlapping_indices,
  not_length_homogeneous,
  not_grouplike_constant,
  schema_error,
  unknown_check,
  invalid_argument,
};

std::string_view errc_name(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mould
