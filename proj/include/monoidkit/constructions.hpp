#pragma once

// Rees matrix semigroups with the sandwich-matrix rank machinery, and the
// M(G,N) construction with its Q(M,K) quotients.

#include <optional>
#include <utility>
#include <vector>

#include "monoidkit/monoid.hpp"
#include "monoidkit/partition.hpp"
#include "monoidkit/schutzen.hpp"

namespace monoidkit {

struct ReesSpec {
  FiniteMonoid group;
  std::uint32_t icount = 0, jcount = 0;
  std::vector<element> entries;  // row-major, jcount rows of icount group elements

  element p(std::uint32_t j, std::uint32_t i) const { return entries[std::size_t(j) * icount + i]; }
};

// I x G x J with (i,g,j)(k,h,l) = (i, g p_{jk} h, l); identityless in general.
SemigroupTable rees_semigroup(const ReesSpec& spec);

// With adjoin_identity the S^1 monoid; without it the table must already
// contain an identity (the 1x1 case), else NotAGroup/InvalidParameter.
FiniteMonoid rees_matrix(const ReesSpec& spec, bool adjoin_identity);

struct RankReport {
  Partition cols;  // ~I classes over column indices
  Partition rows;  // ~J classes over row indices
  std::uint32_t r_i = 0, r_j = 0, rank = 0;
  std::optional<ElementSet> modulus;  // the normal subgroup N when reducing P/N
};

RankReport matrix_rank(const ReesSpec& spec, const std::optional<ElementSet>& normal = std::nullopt);

// (N, rank of P/N) for every normal subgroup N of the structure group.
std::vector<std::pair<ElementSet, std::uint32_t>> golubov_profile(const ReesSpec& spec);

// n-truncation of the diagonal-a / off-diagonal-e matrix over C2.
ReesSpec diagonal_matrix(std::uint32_t n);

// M(G,N) on {1} u G u Nbar u hG u {0}; requires N normal in G.
FiniteMonoid mgn(const FiniteMonoid& group, const ElementSet& normal);

// element layout helpers for mgn
struct MgnLayout {
  std::uint32_t group_order = 0, normal_order = 0;
  element one() const { return 0; }
  element g(element x) const { return 1 + x; }
  element nbar(std::uint32_t pos) const { return 1 + group_order + pos; }
  element d(element x) const { return 1 + group_order + normal_order + x; }
  element h() const;  // d(e_G)
  element zero() const { return 2 * group_order + normal_order + 1; }
};
MgnLayout mgn_layout(const FiniteMonoid& group, const ElementSet& normal);

struct MgnQuotientResult {
  FiniteMonoid q;            // Q(M,K) built as a congruence quotient of mgn(G,N)
  Homomorphism projection;   // mgn(G,N) -> Q
  FiniteMonoid rebuilt;      // mgn(G/K, NK/K), built independently
  bool iso_verified = false;
};

MgnQuotientResult mgn_quotient(const FiniteMonoid& group, const ElementSet& normal, const ElementSet& k);

// quotient group G/K as a monoid of cosets, with the projection
std::pair<FiniteMonoid, Homomorphism> quotient_group(const FiniteMonoid& group, const ElementSet& k);

}  // namespace monoidkit
