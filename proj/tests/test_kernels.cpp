#include <doctest.h>

#include <random>

#include "monoidkit/constructions.hpp"
#include "monoidkit/fixtures.hpp"
#include "monoidkit/kernels.hpp"
#include "monoidkit/partition.hpp"

using namespace monoidkit;

namespace {

std::vector<element> random_table(std::uint32_t n, std::mt19937& rng) {
  std::vector<element> t(std::size_t(n) * n);
  for (auto& v : t) v = rng() % n;
  return t;
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("associativity kernel: serial and parallel agree, including the witness") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      std::uint32_t n = 8 + rng() % 40;
      auto t = random_table(n, rng);
      auto s = kernels::associativity_violation_serial(t.data(), n);
      auto p = kernels::associativity_violation(t.data(), n);
      REQUIRE(s.has_value() == p.has_value());
      if (s) {
        CHECK(s->x == p->x);
        CHECK(s->y == p->y);
        CHECK(s->z == p->z);
      }
    }
    // associative inputs yield no witness on either route
    auto m = full_transformations(3);
    CHECK_FALSE(kernels::associativity_violation_serial(m.table.data(), m.size).has_value());
    CHECK_FALSE(kernels::associativity_violation(m.table.data(), m.size).has_value());
  }

  TEST_CASE("associativity kernel agrees on a large monoid above the parallel threshold") {
    auto saved = element_cap();
    set_element_cap(1u << 20);
    auto big = direct_product(full_transformations(3), sym3());  // order 162, above the cutover
    CHECK_FALSE(kernels::associativity_violation(big.table.data(), big.size).has_value());
    // corrupting e*e guarantees a violation at (e, e, z) for some z; both
    // routes must report the same minimal triple
    auto corrupted = big.table;
    const element e = big.identity;
    corrupted[std::size_t(e) * big.size + e] = (e + 1) % big.size;
    auto s = kernels::associativity_violation_serial(corrupted.data(), big.size);
    auto p = kernels::associativity_violation(corrupted.data(), big.size);
    REQUIRE(s.has_value());
    REQUIRE(p.has_value());
    CHECK(s->x == p->x);
    CHECK(s->y == p->y);
    CHECK(s->z == p->z);
    set_element_cap(saved);
  }

  TEST_CASE("regularity kernel: serial and parallel agree") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
      std::uint32_t n = 6 + rng() % 30;
      auto t = random_table(n, rng);
      CHECK(kernels::regularity_witnesses_serial(t.data(), n) == kernels::regularity_witnesses(t.data(), n));
    }
    auto m = t2();
    auto w = kernels::regularity_witnesses(m.table.data(), m.size);
    for (element x = 0; x < m.size; ++x) {
      REQUIRE(w[x].has_value());
      CHECK(m.at(m.at(x, *w[x]), x) == x);
    }
  }

  TEST_CASE("signature kernel: serial and parallel agree") {
    std::mt19937 rng(13);
    std::uint32_t n = 40;
    auto t = random_table(n, rng);
    std::vector<std::uint32_t> cls(n);
    for (auto& v : cls) v = rng() % 5;
    std::vector<element> mults(n);
    for (element x = 0; x < n; ++x) mults[x] = x;
    std::vector<std::uint32_t> a(std::size_t(n) * n), b(std::size_t(n) * n);
    kernels::right_signatures_serial(t.data(), n, cls.data(), mults.data(), n, a.data());
    kernels::right_signatures(t.data(), n, cls.data(), mults.data(), n, b.data());
    CHECK(a == b);
  }
}
