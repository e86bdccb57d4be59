#pragma once

// Stabilizers and Schutzenberger groups of H-classes, small permutation
// group utilities, and the homomorphism a monoid map induces between them.

#include <optional>
#include <vector>

#include "monoidkit/green.hpp"
#include "monoidkit/monoid.hpp"

namespace monoidkit {

inline constexpr std::uint32_t kGroupOrderBound = 64;

struct PermGroup {
  std::uint32_t degree = 0;
  std::vector<std::vector<std::uint32_t>> perms;  // sorted, unique
  std::uint32_t identity_index = 0;
  std::vector<std::uint32_t> table;  // group multiplication on perm indices

  std::uint32_t order() const { return static_cast<std::uint32_t>(perms.size()); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table[a * order() + b]; }
  std::uint32_t inverse(std::uint32_t a) const;
  std::uint32_t element_order(std::uint32_t a) const;

  // verifies closure, identity and inverses
  static PermGroup from_perms(std::vector<std::vector<std::uint32_t>> perms);
  // right regular representation of a group given by its table
  static PermGroup regular_representation(const FiniteMonoid& group);
};

struct SchutzGroup {
  ElementSet h_class;          // sorted
  element base_point = 0;      // minimal element of H
  ElementSet stabilizer;       // Stab(H), a submonoid of M
  Partition sigma;             // over positions of `stabilizer`
  PermGroup group;             // Gamma(H) acting on positions of `h_class`
  std::vector<std::uint32_t> class_to_perm;  // sigma class -> perm index
};

ElementSet stabilizer(const FiniteMonoid& m, const ElementSet& h_class);
ElementSet stabilizer(const FiniteMonoid& m, const GreenStructure& g, const ElementSet& h_class);

SchutzGroup schutzenberger_group(const FiniteMonoid& m, const ElementSet& h_class);
SchutzGroup schutzenberger_group(const FiniteMonoid& m, const GreenStructure& g, const ElementSet& h_class);

struct GroupHom {
  PermGroup source;
  PermGroup target;
  std::vector<std::uint32_t> map;  // per source perm index

  bool bijective() const;
};

// Backtracking over generator images with order-profile pruning.
std::optional<GroupHom> group_iso(const PermGroup& a, const PermGroup& b);

// All normal subgroups (as sets of perm indices), found by closing unions of
// conjugacy classes; includes the trivial and full subgroups.
std::vector<std::vector<std::uint32_t>> normal_subgroups(const PermGroup& g);

// Same, for a group given by a monoid table (element sets).
std::vector<ElementSet> normal_subgroups_of(const FiniteMonoid& group);

bool is_subgroup(const FiniteMonoid& group, const ElementSet& subset);
bool is_normal_subgroup(const FiniteMonoid& group, const ElementSet& subset);

// The map Gamma(H) -> Gamma(H-class of phi(h)) that a monoid homomorphism
// induces between Schutzenberger groups; verified well-defined and
// multiplicative at construction.
GroupHom induced_schutz_hom(const Homomorphism& phi, const ElementSet& h_class);

}  // namespace monoidkit
