#pragma once

// Finite monoids as dense multiplication tables, and the basic
// constructions: direct products, adjunctions, Rees quotients, quotients by
// a congruence, homomorphisms, opposite monoid.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monoidkit/errors.hpp"
#include "monoidkit/partition.hpp"

namespace monoidkit {

using element = std::uint32_t;
using ElementSet = std::vector<element>;  // kept sorted, no duplicates

// Global element-count cap guarding construction blow-up (default 100000).
std::uint64_t element_cap();
void set_element_cap(std::uint64_t cap);

ElementSet normalized_set(ElementSet s);
bool set_contains(const ElementSet& s, element x);

// Associative table without a designated identity; intermediate data for
// adjoin() and the identity-free Rees matrix construction.
struct SemigroupTable {
  std::uint32_t size = 0;
  std::vector<element> table;
  std::vector<std::string> names;

  element at(element x, element y) const { return table[std::size_t(x) * size + y]; }
  std::optional<element> find_identity() const;
};

struct FiniteMonoid {
  std::uint32_t size = 0;
  std::vector<element> table;  // row-major: table[x*size+y] = x*y
  element identity = 0;
  ElementSet generators;
  std::vector<std::string> names;  // empty, or one per element
  std::optional<element> zero;

  element at(element x, element y) const { return table[std::size_t(x) * size + y]; }
  std::string name_of(element x) const;
  element power(element x, std::uint64_t k) const;
  bool is_idempotent(element x) const { return at(x, x) == x; }
  bool is_group() const;
  void check_element(element x) const;
};

// Validates all invariants (associativity, identity law, generator closure,
// zero law) and returns the monoid. Detects a zero element when none is
// declared.
FiniteMonoid build_monoid(FiniteMonoid spec);

FiniteMonoid direct_product(const FiniteMonoid& m, const FiniteMonoid& n);

enum class Adjoin { identity, zero };
FiniteMonoid adjoin(const FiniteMonoid& m, Adjoin kind);
FiniteMonoid adjoin_identity(const SemigroupTable& s);

struct Homomorphism {
  FiniteMonoid source;
  FiniteMonoid target;
  std::vector<element> map;

  element apply(element x) const { return map[x]; }
};

Homomorphism check_homomorphism(const FiniteMonoid& m, const FiniteMonoid& n,
                                std::vector<element> map);
Homomorphism identity_homomorphism(const FiniteMonoid& m);

// I must be a nonempty two-sided ideal; collapses it to a single zero.
std::pair<FiniteMonoid, Homomorphism> rees_quotient(const FiniteMonoid& m, const ElementSet& ideal);

// pi must be a verified two-sided congruence.
std::pair<FiniteMonoid, Homomorphism> quotient_by(const FiniteMonoid& m, const Congruence& pi);

struct RegularityReport {
  ElementSet idempotents;
  bool regular = false;
  std::vector<std::optional<element>> witness;  // per element: y with xyx = x
};

RegularityReport regularity_report(const FiniteMonoid& m);
RegularityReport regularity_report(const SemigroupTable& s);

FiniteMonoid opposite(const FiniteMonoid& m);

// Witness (x, s) with x in I and xs or sx outside I, if I is not an ideal.
std::optional<std::pair<element, element>> ideal_violation(const FiniteMonoid& m, const ElementSet& ideal);

// Brute-force isomorphism search with invariant pruning, bounded at order 64.
// Returns the element map source -> target when the monoids are isomorphic.
std::optional<std::vector<element>> monoid_iso(const FiniteMonoid& a, const FiniteMonoid& b);

inline constexpr std::uint32_t kIsoOrderBound = 64;

}  // namespace monoidkit
