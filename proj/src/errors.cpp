#include "monoidkit/errors.hpp"

namespace monoidkit {

const char* errc_name(errc code) {
  switch (code) {
    case errc::associativity_violation: return "AssociativityViolation";
    case errc::identity_violation: return "IdentityViolation";
    case errc::generators_not_generating: return "GeneratorsNotGenerating";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::size_overflow: return "SizeOverflow";
    case errc::not_an_ideal: return "NotAnIdeal";
    case errc::not_a_congruence: return "NotACongruence";
    case errc::not_homomorphism: return "NotHomomorphism";
    case errc::identity_not_preserved: return "IdentityNotPreserved";
    case errc::not_idempotent: return "NotIdempotent";
    case errc::not_an_h_class: return "NotAnHClass";
    case errc::order_bound_exceeded: return "OrderBoundExceeded";
    case errc::not_a_group: return "NotAGroup";
    case errc::not_normal: return "NotNormal";
    case errc::equal_elements: return "EqualElements";
    case errc::not_regular: return "NotRegular";
    case errc::l_related_pair: return "LRelatedPair";
    case errc::no_source: return "NoSource";
    case errc::invalid_parameter: return "InvalidParameter";
    case errc::malformed_element: return "MalformedElement";
    case errc::window_too_small: return "WindowTooSmall";
    case errc::parse_error: return "ParseError";
    case errc::zero_argument: return "ZeroArgument";
    case errc::internal_error: return "InternalError";
  }
  return "UnknownError";
}

MonoidError::MonoidError(errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

void raise(errc code, const std::string& what) { throw MonoidError(code, what); }

}  // namespace monoidkit
