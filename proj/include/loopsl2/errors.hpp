#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace loopsl2 {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct parse_error : error {
  using error::error;
};

struct domain_error : error {
  using error::error;
};

// Mixed layers, wrong arity, layer 0 where a positive layer is required.
struct layer_mismatch : error {
  using error::error;
};

// Operands over different numbers of variables.
struct arity_mismatch : error {
  using error::error;
};

struct bound_exceeded : error {
  using error::error;
};

struct not_divisible : error {
  using error::error;
};

struct empty_window : error {
  using error::error;
};

// A Laurent polynomial that is not permutation invariant. `first` carries a
// nonzero coefficient that differs from the one at its permutation `second`.
struct not_symmetric : error {
  std::vector<std::int64_t> first;
  std::vector<std::int64_t> second;
  not_symmetric(std::vector<std::int64_t> a, std::vector<std::int64_t> b)
      : error("polynomial is not symmetric"), first(std::move(a)), second(std::move(b))
  {
  }
};

// ζ(e_n) = 0: e_n is a unit, so no algebra homomorphism exists.
struct no_homomorphism : error {
  using error::error;
};

// The requested object needs roots outside the rationals.
struct requires_extension : error {
  using error::error;
};

} // namespace loopsl2
