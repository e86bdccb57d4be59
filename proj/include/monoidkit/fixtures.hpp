#pragma once

// Stock monoids used by the CLI, the test corpus and the gallery.

#include <string>

#include "monoidkit/monoid.hpp"

namespace monoidkit {

FiniteMonoid trivial_monoid();
FiniteMonoid cyclic_group(std::uint32_t n);
FiniteMonoid klein_group();
FiniteMonoid sym3();

// Full transformation monoid on k points (k <= 4), composition applied
// left to right: (f*g)(p) = g(f(p)). Identity is element 0.
FiniteMonoid full_transformations(std::uint32_t k);

// Order-4 fixture {id, sw, c1, c2} in that element order.
FiniteMonoid t2();

// Lookup by CLI name: trivial, c2..c6, klein, s3.
FiniteMonoid group_by_name(const std::string& name);

}  // namespace monoidkit
