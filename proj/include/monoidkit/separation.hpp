#pragma once

// Constructive separation of distinct elements by finite-index congruences:
// the Schutzenberger coset-block route, the right letter mapping, and the
// pre-image of L under a homomorphism.

#include <vector>

#include "monoidkit/congruence.hpp"
#include "monoidkit/green.hpp"
#include "monoidkit/schutzen.hpp"

namespace monoidkit {

enum class SepRoute { not_l, not_r, same_h };

const char* route_name(SepRoute r);

struct SeparationWitness {
  element x = 0, y = 0;
  SepRoute route = SepRoute::not_l;
  Congruence congruence;  // two-sided, verified, separates x from y

  // same-H route data
  ElementSet h_class;
  element base_h = 0, s_x = 0, s_y = 0;
  std::vector<std::uint32_t> chosen_n;    // subgroup of Gamma(H), perm indices
  std::vector<ElementSet> blocks;         // C_0..C_m (C_0 = h*N)
  Partition pi;                           // blocks plus the complement class
  std::size_t q_set_count = 0;            // distinct Q_M(s, C_k) over s, k<=m
};

struct SeparateOptions {
  // Pick the largest normal subgroup of Gamma(H) keeping s_x and s_y in
  // different cosets instead of the trivial one; coarser witnesses.
  bool largest_valid_normal = false;
};

SeparationWitness separate(const FiniteMonoid& m, element x, element y, SeparateOptions opts = {});

struct RLMData {
  element a = 0, b = 0;
  std::vector<std::uint32_t> cone_a, cone_b;    // L-class ids
  std::vector<std::uint32_t> orbit_a, orbit_b;  // L-class ids
  // maps on orbit positions shifted by one: point 0 is the sink
  std::vector<std::vector<std::uint32_t>> alpha, beta;      // per element
  std::vector<std::vector<std::uint32_t>> alpha_set, beta_set;  // A(s), B(s) as sorted map ids
  std::vector<std::vector<std::uint32_t>> alpha_maps, beta_maps;  // registry, id -> table
};

// Right letter mapping: requires a regular monoid and (a,b) not L-related;
// returns a verified finite-index right congruence containing L and
// separating a from b.
std::pair<Congruence, RLMData> right_letter_congruence(const FiniteMonoid& m, element a, element b);

// Pulls the target's L relation back along phi; a right congruence on the
// source containing its own L relation.
Partition l_preimage_congruence(const Homomorphism& phi);

}  // namespace monoidkit
