#pragma once

// One- and two-sided congruences: principal closure, validity checking,
// largest congruence inside a partition (Sigma), Q_M sets, the action /
// congruence round trip, tiny-scale enumeration and rf-compatibility.

#include <optional>
#include <utility>
#include <vector>

#include "monoidkit/monoid.hpp"
#include "monoidkit/partition.hpp"

namespace monoidkit {

inline constexpr std::uint32_t kEnumerationBound = 7;

Congruence principal_congruence(const FiniteMonoid& m,
                                const std::vector<std::pair<element, element>>& pairs, Side side);

struct CongruenceViolation {
  element x, y, mult;
  bool left_mult;  // violating product was mult*x vs mult*y
};

std::optional<CongruenceViolation> congruence_violation(const FiniteMonoid& m, const Partition& pi, Side side);
bool is_congruence(const FiniteMonoid& m, const Partition& pi, Side side);

// Sigma_side(pi): the largest congruence of the given side contained in pi,
// by coarsest-stable partition refinement over the generator Cayley edges.
Congruence largest_contained(const FiniteMonoid& m, const Partition& pi, Side side);

// Definitional route: filter pairs by "(xm, ym) in pi for all m" (and dually
// / both-sided with all u,v). Independent of the refinement implementation.
Congruence largest_contained_definitional(const FiniteMonoid& m, const Partition& pi, Side side);

ElementSet q_set(const FiniteMonoid& m, element s, const ElementSet& x);

struct FiniteAction {
  FiniteMonoid monoid;
  std::uint32_t npoints = 0;
  std::vector<std::uint32_t> act;  // npoints x monoid.size
  std::optional<std::uint32_t> source;

  std::uint32_t at(std::uint32_t p, element m) const { return act[std::size_t(p) * monoid.size + m]; }
};

FiniteAction action_from_congruence(const FiniteMonoid& m, const Congruence& rho);
Congruence congruence_from_action(const FiniteAction& a);
Congruence kernel_of_action(const FiniteAction& a);

// All set partitions of 0..n-1 (Bell-number many); refuses n beyond bound.
std::vector<Partition> all_partitions(std::uint32_t n, std::uint32_t bound = kEnumerationBound);

// All congruences of the given side, by Bell-number enumeration of set
// partitions; refuses monoids larger than the bound.
std::vector<Congruence> enumerate_congruences(const FiniteMonoid& m, Side side,
                                              std::uint32_t bound = kEnumerationBound);

// Same over a multiplicatively closed subset (a subsemigroup, typically an
// ideal); partitions live on positions of `sub`.
std::vector<Congruence> enumerate_congruences_on(const FiniteMonoid& m, const ElementSet& sub, Side side,
                                                 std::uint32_t bound = kEnumerationBound);

struct RfPairReport {
  element s, t;
  bool separated = false;
  Partition witness;  // over positions of the ideal
};

struct RfReport {
  ElementSet ideal;
  bool compatible = false;
  std::vector<RfPairReport> pairs;
};

// For every distinct pair of ideal elements, search for a congruence rho on
// the ideal with s/rho != t/rho such that rho united with the diagonal is a
// congruence on all of M.
RfReport rf_compatible_check(const FiniteMonoid& m, const ElementSet& ideal,
                             std::uint32_t bound = kEnumerationBound);

}  // namespace monoidkit
