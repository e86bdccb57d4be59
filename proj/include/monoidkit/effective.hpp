#pragma once

// Lazily evaluated infinite monoids given by closed-form normal forms:
// the a/b_j monoid with its T_n shadows, the Example-13 monoid, and the
// commutative tau monoid, together with their decidable congruences and
// bounded verification of the derivation chains.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monoidkit/monoid.hpp"

namespace monoidkit {

// tau(2^k (2r+1)) = (2/3)(2^(2 ceil(k/2)) - 1); always a nonnegative integer
std::int64_t tau(std::int64_t z);

struct TauLemmaReport {
  bool divisibility_ok = false;  // a = b mod 2^m implies tau(a) = tau(b) mod 2^(m+1)
  bool no_fixed_residue_ok = false;  // every x is violated at some m
  std::string first_violation;
  std::uint64_t checked = 0;
};

TauLemmaReport tau_lemma_check(int max_m, std::int64_t bound);

// ---------------------------------------------------------------- ab monoid

struct AbElement {
  enum class Tag { one, a, b, zero } tag = Tag::one;
  std::int64_t idx = 0;  // exponent i >= 1 for a, index j for b

  bool operator==(const AbElement&) const = default;
  auto operator<=>(const AbElement&) const = default;
  std::string str() const;
};

struct AbMonoid {
  static AbElement one() { return {AbElement::Tag::one, 0}; }
  static AbElement zero() { return {AbElement::Tag::zero, 0}; }
  static AbElement a(std::int64_t i);
  static AbElement b(std::int64_t j);

  AbElement mul(const AbElement& x, const AbElement& y) const;
  // all forms with parameters of magnitude <= bound; no bound = only 1, 0
  std::vector<AbElement> window(std::optional<std::int64_t> bound) const;
};

AbMonoid ab_monoid();

// T_n shadow of order 2n+2: {1, a..a^n, b, ab, ..., a^(n-1)b, 0}
FiniteMonoid t_n(std::uint32_t n);

struct ThetaN {
  std::uint32_t n = 0;
  FiniteMonoid target;

  element apply(const AbElement& x) const;
};

ThetaN theta_n(std::uint32_t n);
// theta respects products on every pair from the window
bool theta_multiplicative_on_window(const ThetaN& theta, std::int64_t bound);

// ------------------------------------------------------ the b-ladder monoid

struct Ex13Element {
  enum class Tag { one, a_word, c_word, b_elem, d_elem, zero } tag = Tag::one;
  std::vector<std::int64_t> word;    // a-letters, c-letters, or the d-prefix
  std::int64_t j = 0;                // b_elem base index
  std::vector<std::int64_t> suffix;  // b_elem c-suffix, strictly increasing
  std::int64_t t = 0;                // d_elem power, >= 1

  bool operator==(const Ex13Element&) const = default;
  std::string str() const;
};

struct Ex13Monoid {
  static Ex13Element one();
  static Ex13Element zero();
  static Ex13Element a(std::int64_t i);
  static Ex13Element a_word(std::vector<std::int64_t> w);
  static Ex13Element c(std::int64_t k);
  static Ex13Element c_word(std::vector<std::int64_t> w);
  static Ex13Element b(std::int64_t j, std::vector<std::int64_t> suffix = {});
  static Ex13Element d(std::vector<std::int64_t> prefix, std::int64_t t);

  Ex13Element mul(const Ex13Element& x, const Ex13Element& y) const;
  std::vector<Ex13Element> window(std::optional<std::int64_t> bound, std::uint32_t max_len = 2) const;
};

Ex13Monoid ex13_monoid();

// ------------------------------------------------- commutative tau monoid

struct CmElement {
  enum class Tag { a, b, c, d, e, zero } tag = Tag::a;
  std::int64_t i = 0;  // family index for b/c
  std::int64_t p = 0;  // a-exponent

  bool operator==(const CmElement&) const = default;
  auto operator<=>(const CmElement&) const = default;
  std::string str() const;
};

struct CmMonoid {
  static CmElement one() { return {CmElement::Tag::a, 0, 0}; }
  static CmElement zero() { return {CmElement::Tag::zero, 0, 0}; }
  static CmElement a(std::int64_t p) { return {CmElement::Tag::a, 0, p}; }
  static CmElement b(std::int64_t i, std::int64_t p = 0) { return {CmElement::Tag::b, i, p}; }
  static CmElement c(std::int64_t i, std::int64_t p = 0) { return {CmElement::Tag::c, i, p}; }
  static CmElement d(std::int64_t p = 0) { return {CmElement::Tag::d, 0, p}; }
  static CmElement e(std::int64_t p = 0) { return {CmElement::Tag::e, 0, p}; }

  CmElement mul(const CmElement& x, const CmElement& y) const;
  std::vector<CmElement> window(std::optional<std::int64_t> bound) const;
};

CmMonoid cm_monoid();

// ------------------------------------------------------ derivation chains

struct DerivationStep {
  std::string lhs, rhs;
  bool holds = false;
};

struct DerivationReport {
  std::string name;
  std::vector<DerivationStep> steps;
  bool pass = false;
};

DerivationReport ex13_collapse(std::int64_t p, std::int64_t q);   // 1 <= p < q
DerivationReport ab_l_collapse(std::uint32_t n);                  // n >= 1
DerivationReport cm_de_collapse(std::int64_t i, std::int64_t j);  // i != j
DerivationReport derivation_check(const std::string& name, const std::vector<std::int64_t>& params);

// -------------------------------------------- decidable stock congruences

struct CmLabel {
  int family = 0;
  std::int64_t u = 0, v = 0;

  bool operator==(const CmLabel&) const = default;
  auto operator<=>(const CmLabel&) const = default;
};

// case1(m,i):  a^r c_i split mod m, everything else in I one class
// case2(m):    relations (C mod 2^(m+1) x 2^m), D/E mod 2^(m+1) with the
//              tau(2^m) shift identifying D and E classes
// bpart(m,i):  on N = A u B u {0}: A and B_i split mod m, B \ B_i one class
struct CmRelation {
  enum class Kind { case1, case2, bpart } kind = Kind::case2;
  std::int64_t m = 1;
  std::int64_t i = 0;
  bool corrupt_tau_shift = false;  // negative control: drop the shift

  bool in_domain(const CmElement& x) const;
  bool ambient_contains(const CmElement& x) const;
  CmLabel classify(const CmElement& x) const;
  std::int64_t residue_modulus() const;
  std::string name() const;
};

CmRelation cm_congruence(const std::string& kind, std::int64_t m, std::int64_t i = 0);

struct CompatReport {
  bool pass = false;
  std::size_t pairs_checked = 0;
  std::size_t products_checked = 0;
  std::array<std::size_t, 4> branch_hits{};  // the four b_k case-analysis branches
  std::vector<std::string> violations;
};

// For every related pair in the element window and every generator in the
// generator window (restricted to the relation's ambient submonoid), the
// products stay related; b_k products of C-pairs are classified into the
// four case-analysis branches and checked against the predicted class.
CompatReport verify_compat(const CmMonoid& m, const CmRelation& rel, std::int64_t window_bound,
                           std::int64_t gen_bound);

// ab monoid with its (all-singleton) L partition as the relation
CompatReport verify_compat_ab_l(std::int64_t window_bound, std::int64_t gen_bound);

}  // namespace monoidkit
