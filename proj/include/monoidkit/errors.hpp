#pragma once

#include <stdexcept>
#include <string>

namespace monoidkit {

enum class errc {
  associativity_violation,
  identity_violation,
  generators_not_generating,
  index_out_of_range,
  size_overflow,
  not_an_ideal,
  not_a_congruence,
  not_homomorphism,
  identity_not_preserved,
  not_idempotent,
  not_an_h_class,
  order_bound_exceeded,
  not_a_group,
  not_normal,
  equal_elements,
  not_regular,
  l_related_pair,
  no_source,
  invalid_parameter,
  malformed_element,
  window_too_small,
  parse_error,
  zero_argument,
  internal_error,
};

const char* errc_name(errc code);

class MonoidError : public std::runtime_error {
 public:
  MonoidError(errc code, const std::string& what);
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] void raise(errc code, const std::string& what);

}  // namespace monoidkit
