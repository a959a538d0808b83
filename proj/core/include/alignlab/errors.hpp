#pragma once

#include <stdexcept>
#include <string>

namespace alignlab {

enum class Errc {
  negative_entry,
  sum_not_one,
  degenerate_marginal,
  zero_entry,
  nonpositive_correlation,
  dimension_mismatch,
  n_too_large,
  n_too_small,
  l_too_large,
  orbit_too_large,
  psi_out_of_range,
  z_out_of_range,
  degenerate_input,
  zero_pair_probability,
  invalid_argument,
};

const char* errc_name(Errc c);

/// All domain failures throw this; `code()` identifies the contract violated.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace alignlab
