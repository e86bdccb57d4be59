#pragma once

// Green's relations and the egg-box structure of a finite monoid.

#include <utility>
#include <vector>

#include "monoidkit/monoid.hpp"
#include "monoidkit/partition.hpp"

namespace monoidkit {

struct GreenStructure {
  Partition r, l, j, h, d;
  // principal ideals of each class representative (the minimal element)
  std::vector<ElementSet> r_ideal;  // rep*M, indexed by R-class
  std::vector<ElementSet> l_ideal;  // M*rep, indexed by L-class
  std::vector<ElementSet> j_ideal;  // M*rep*M, indexed by J-class
  // per J-class: number of R-classes and of L-classes it contains
  std::vector<std::pair<std::uint32_t, std::uint32_t>> j_type;

  std::uint32_t h_class_of(element x) const { return h.cls[x]; }
};

// R/L via strongly connected components of the generator Cayley graphs,
// J via the two-sided graph, H = R meet L, D = join of R and L.
GreenStructure green_structure(const FiniteMonoid& m);

// Definitional oracle: xM = yM etc. compared as sets. Kept independent of
// the SCC route; used by tests and the acceptance suite.
GreenStructure green_structure_definitional(const FiniteMonoid& m);

// gh = g and hg = h test for idempotents; agrees with L-membership.
bool idempotent_l_test(const FiniteMonoid& m, element e, element f);

struct MaximalSubgroup {
  ElementSet h_class;
  element idempotent;
};

std::vector<MaximalSubgroup> maximal_subgroups(const FiniteMonoid& m);
std::vector<MaximalSubgroup> maximal_subgroups(const FiniteMonoid& m, const GreenStructure& g);

}  // namespace monoidkit
