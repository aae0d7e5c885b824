#pragma once

#include <stdexcept>
#include <string>

namespace tfb {

enum class errc {
  grid_mismatch,
  non_grid_shift,
  zero_window,
  lattice_too_large,
  non_square_grid,
  probe_out_of_range,
  non_positive_lambda,
  exponent_out_of_range,
  exponent_order,
  negative_weight_order,
  tau_half,
  non_positive_argument,
  resolution_insufficient,
  index_condition_violated,
  empty_family,
  midpoint_unavailable,
  invalid_input,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

  // exit-code class for the CLI: numerical guards vs bad input
  bool is_numerical_guard() const noexcept {
    return code_ == errc::resolution_insufficient || code_ == errc::lattice_too_large;
  }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace tfb
