#include <doctest.h>

#include <algorithm>
#include <random>

#include "monoidkit/congruence.hpp"
#include "monoidkit/constructions.hpp"
#include "monoidkit/effective.hpp"
#include "monoidkit/fixtures.hpp"
#include "monoidkit/green.hpp"

using namespace monoidkit;

TEST_SUITE("congruence") {
  TEST_CASE("principal congruence of (c1,c2) on T2") {
    auto t = t2();
    auto c = principal_congruence(t, {{2, 3}}, Side::two_sided);
    CHECK(c.partition == Partition::from_classes(4, {{0}, {1}, {2, 3}}));
    CHECK(c.verified);
  }

  TEST_CASE("principal congruence of the empty pair list is the identity") {
    CHECK(principal_congruence(t2(), {}, Side::right).partition == Partition::identity(4));
  }

  TEST_CASE("collapsing 1 with a group element collapses the group") {
    auto c = principal_congruence(cyclic_group(2), {{0, 1}}, Side::two_sided);
    CHECK(c.partition == Partition::universal(2));
  }

  TEST_CASE("principal congruences on one side only") {
    auto t = t2();
    auto left = principal_congruence(t, {{2, 3}}, Side::left);
    CHECK(left.partition == Partition::from_classes(4, {{0}, {1}, {2, 3}}));
    CHECK(is_congruence(t, left.partition, Side::left));
    // the right closure of (id, sw) stays inside the unit H-class
    auto right = principal_congruence(t, {{0, 1}}, Side::right);
    CHECK(right.partition == Partition::from_classes(4, {{0, 1}, {2}, {3}}));
    CHECK_FALSE(is_congruence(t, right.partition, Side::left));
  }

  TEST_CASE("is_congruence with the spec witness") {
    auto t = t2();
    CHECK(is_congruence(t, Partition::from_classes(4, {{0, 1}, {2, 3}}), Side::right));
    auto v = congruence_violation(t, Partition::from_classes(4, {{0, 2}, {1}, {3}}), Side::right);
    REQUIRE(v.has_value());
    CHECK(v->x == 0);
    CHECK(v->y == 2);
    CHECK(v->mult == 1);  // id*sw = sw, c1*sw = c2 land in different classes
    CHECK_FALSE(v->left_mult);
    CHECK(is_congruence(t, Partition::identity(4), Side::left));
    CHECK(is_congruence(t, Partition::identity(4), Side::right));
  }

  TEST_CASE("largest_contained: a right congruence is its own Sigma_r") {
    auto t = t2();
    Partition pi = Partition::from_classes(4, {{0, 1}, {2, 3}});
    CHECK(largest_contained(t, pi, Side::right).partition == pi);
    CHECK(largest_contained(t, Partition::identity(4), Side::right).partition == Partition::identity(4));
    CHECK(largest_contained(t, Partition::identity(4), Side::left).partition == Partition::identity(4));
    CHECK(largest_contained(t, Partition::identity(4), Side::two_sided).partition == Partition::identity(4));
  }

  TEST_CASE("refinement equals the definitional route, all sides") {
    std::vector<FiniteMonoid> monoids = {t2(), sym3(), mgn(cyclic_group(2), {0, 1})};
    for (auto& m : monoids) {
      auto g = green_structure(m);
      for (auto side : {Side::left, Side::right, Side::two_sided}) {
        for (const Partition& pi : {g.l, g.r, g.j, Partition::universal(m.size)}) {
          CHECK(largest_contained(m, pi, side).partition ==
                largest_contained_definitional(m, pi, side).partition);
        }
      }
    }
  }

  TEST_CASE("refinement equals the definitional route on random partitions, all sides") {
    std::mt19937 rng(4242);
    std::vector<FiniteMonoid> monoids = {t2(), sym3(), mgn(cyclic_group(2), {0, 1}), t_n(4)};
    for (int trial = 0; trial < 30; ++trial) {
      auto& m = monoids[trial % monoids.size()];
      std::uint32_t k = 1 + rng() % m.size;
      std::vector<std::uint32_t> labels(m.size);
      for (auto& v : labels) v = rng() % k;
      Partition pi = Partition::from_labels(labels);
      for (auto side : {Side::left, Side::right, Side::two_sided})
        CHECK(largest_contained(m, pi, side).partition ==
              largest_contained_definitional(m, pi, side).partition);
    }
  }

  TEST_CASE("q_set examples on T2") {
    auto t = t2();
    CHECK(q_set(t, 2, {2}) == ElementSet{0, 2});
    CHECK(q_set(t, 0, {1, 3}) == ElementSet{1, 3});  // s = identity
    ElementSet all = {0, 1, 2, 3};
    CHECK(q_set(t, 3, all) == all);
  }

  TEST_CASE("action from the identity congruence is the regular action") {
    auto c2 = cyclic_group(2);
    auto a = action_from_congruence(c2, Congruence{Partition::identity(2), Side::right, true});
    CHECK(a.npoints == 2);
    CHECK(a.at(0, 1) == 1);
    CHECK(a.at(1, 1) == 0);
    REQUIRE(a.source.has_value());
  }

  TEST_CASE("action on T2 L-classes and back") {
    auto t = t2();
    auto g = green_structure(t);
    auto a = action_from_congruence(t, Congruence{g.l, Side::right, true});
    CHECK(a.npoints == 3);
    CHECK(*a.source == g.l.cls[0]);
    auto back = congruence_from_action(a);
    CHECK(back.partition == g.l);
  }

  TEST_CASE("actions satisfy the action axioms") {
    auto t = t2();
    auto g = green_structure(t);
    auto a = action_from_congruence(t, Congruence{g.l, Side::right, true});
    for (std::uint32_t p = 0; p < a.npoints; ++p) {
      CHECK(a.at(p, t.identity) == p);
      for (element m1 = 0; m1 < t.size; ++m1)
        for (element m2 = 0; m2 < t.size; ++m2)
          CHECK(a.at(a.at(p, m1), m2) == a.at(p, t.at(m1, m2)));
    }
  }

  TEST_CASE("one-point action has kernel Phi") {
    auto t = t2();
    auto a = action_from_congruence(t, Congruence{Partition::universal(4), Side::right, true});
    CHECK(a.npoints == 1);
    CHECK(kernel_of_action(a).partition == Partition::universal(4));
    auto sourceless = a;
    sourceless.source.reset();
    CHECK_THROWS_AS((void)congruence_from_action(sourceless), MonoidError);
  }

  TEST_CASE("round trip on every right congruence of small monoids") {
    for (auto& m : {cyclic_group(4), t2(), direct_product(cyclic_group(2), cyclic_group(2))}) {
      for (auto& rho : enumerate_congruences(m, Side::right))
        CHECK(congruence_from_action(action_from_congruence(m, rho)).partition == rho.partition);
    }
  }

  TEST_CASE("congruence enumeration: C2 has two, T2 has four two-sided") {
    auto cs2 = enumerate_congruences(cyclic_group(2), Side::two_sided);
    CHECK(cs2.size() == 2);

    auto t = t2();
    auto cst = enumerate_congruences(t, Side::two_sided);
    // hand-derived: Delta, Phi, {{id},{sw},{c1,c2}}, {{id,sw},{c1,c2}}
    REQUIRE(cst.size() == 4);
    std::vector<Partition> expect = {
        Partition::identity(4),
        Partition::from_classes(4, {{0}, {1}, {2, 3}}),
        Partition::from_classes(4, {{0, 1}, {2, 3}}),
        Partition::universal(4),
    };
    for (auto& e : expect)
      CHECK(std::any_of(cst.begin(), cst.end(), [&](const Congruence& c) { return c.partition == e; }));
  }

  TEST_CASE("enumeration respects the Bell bound") {
    CHECK_THROWS_AS((void)enumerate_congruences(mgn(cyclic_group(2), {0, 1}), Side::right), MonoidError);
    CHECK(all_partitions(4).size() == 15);
    CHECK(all_partitions(5).size() == 52);
  }

  TEST_CASE("both partitions of a 2-element zero subsemigroup are congruences") {
    // {s, 0} with s*s = 0 inside the 3-element monoid {1, s, 0}
    FiniteMonoid m;
    m.size = 3;
    m.table = {0, 1, 2, 1, 2, 2, 2, 2, 2};
    m.identity = 0;
    m.generators = {1};
    m = build_monoid(std::move(m));
    auto cs = enumerate_congruences_on(m, {1, 2}, Side::two_sided);
    CHECK(cs.size() == 2);
  }

  TEST_CASE("rf-compatibility of a singleton ideal is vacuous") {
    auto m = adjoin(cyclic_group(2), Adjoin::zero);
    auto report = rf_compatible_check(m, {2});
    CHECK(report.compatible);
    CHECK(report.pairs.empty());
  }

  TEST_CASE("constant ideal of T2 is rf-compatible with the identity witness") {
    auto report = rf_compatible_check(t2(), {2, 3});
    CHECK(report.compatible);
    REQUIRE(report.pairs.size() == 1);
    CHECK(report.pairs[0].separated);
    CHECK(report.pairs[0].witness == Partition::identity(2));
  }

  TEST_CASE("rf-compatibility over the D u {0} ideal of mgn(C2,C2)") {
    auto g2 = cyclic_group(2);
    auto m = mgn(g2, {0, 1});
    auto lay = mgn_layout(g2, {0, 1});
    auto report = rf_compatible_check(m, {lay.d(0), lay.d(1), lay.zero()});
    CHECK(report.compatible);
    CHECK(report.pairs.size() == 3);
    for (auto& p : report.pairs) CHECK(p.separated);
  }

  TEST_CASE("rf check rejects non-ideals") {
    CHECK_THROWS_AS((void)rf_compatible_check(t2(), {2}), MonoidError);
  }

  TEST_CASE("Sigma of a right congruence has at least as many classes") {
    for (auto& m : {t2(), cyclic_group(4)}) {
      for (auto& rho : enumerate_congruences(m, Side::right)) {
        auto sigma = largest_contained(m, rho.partition, Side::two_sided);
        CHECK(sigma.index() >= rho.index());
        CHECK(sigma.partition.refines(rho.partition));
      }
    }
  }
}
