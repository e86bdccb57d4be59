#include <doctest.h>

#include <set>

#include "monoidkit/congruence.hpp"
#include "monoidkit/constructions.hpp"
#include "monoidkit/fixtures.hpp"
#include "monoidkit/green.hpp"

using namespace monoidkit;

namespace {

ReesSpec two_by_two_spec() {
  // P = [[a, e], [e, e]] over C2
  ReesSpec spec;
  spec.group = cyclic_group(2);
  spec.icount = spec.jcount = 2;
  spec.entries = {1, 0, 0, 0};
  return spec;
}

}  // namespace

TEST_SUITE("constructions") {
  TEST_CASE("Rees semigroup over C2 is an order-8 regular semigroup") {
    auto s = rees_semigroup(two_by_two_spec());
    CHECK(s.size == 8);
    CHECK(regularity_report(s).regular);
    auto m = rees_matrix(two_by_two_spec(), true);
    CHECK(m.size == 9);
    CHECK(regularity_report(m).regular);
  }

  TEST_CASE("1x1 Rees matrix is the group itself") {
    ReesSpec spec;
    spec.group = cyclic_group(2);
    spec.icount = spec.jcount = 1;
    spec.entries = {0};
    auto m = rees_matrix(spec, false);
    REQUIRE(monoid_iso(m, cyclic_group(2)).has_value());
  }

  TEST_CASE("Rees matrix needs a group") {
    ReesSpec spec;
    spec.group = t2();
    spec.icount = spec.jcount = 1;
    spec.entries = {0};
    CHECK_THROWS_AS((void)rees_semigroup(spec), MonoidError);
  }

  TEST_CASE("matrix rank of the 2x2 example") {
    auto r = matrix_rank(two_by_two_spec());
    CHECK(r.r_i == 2);
    CHECK(r.r_j == 2);
    CHECK(r.rank == 2);
    auto rn = matrix_rank(two_by_two_spec(), ElementSet{0, 1});
    CHECK(rn.rank == 1);  // constant modulo the full group
  }

  TEST_CASE("diagonal matrices: the truncation phenomenon starts at n = 3") {
    CHECK(diagonal_matrix(1).entries == std::vector<element>{1});
    CHECK(matrix_rank(diagonal_matrix(2)).r_i == 1);  // columns related via g = a
    CHECK(matrix_rank(diagonal_matrix(2)).rank == 1);
    CHECK(matrix_rank(diagonal_matrix(3)).rank == 3);
    for (std::uint32_t n = 3; n <= 8; ++n) CHECK(matrix_rank(diagonal_matrix(n)).rank == n);
  }

  TEST_CASE("column and row relations are genuine equivalences") {
    for (auto spec : {two_by_two_spec(), diagonal_matrix(3), diagonal_matrix(4)}) {
      auto r = matrix_rank(spec);
      // transitivity: elements sharing a class must be pairwise related via some g
      auto related_cols = [&](std::uint32_t i, std::uint32_t k) {
        for (element g = 0; g < spec.group.size; ++g) {
          bool ok = true;
          for (std::uint32_t j = 0; j < spec.jcount && ok; ++j)
            ok = spec.p(j, i) == spec.group.at(spec.p(j, k), g);
          if (ok) return true;
        }
        return false;
      };
      for (std::uint32_t i = 0; i < spec.icount; ++i)
        for (std::uint32_t k = 0; k < spec.icount; ++k)
          if (r.cols.cls[i] == r.cols.cls[k]) CHECK(related_cols(i, k));
    }
  }

  TEST_CASE("golubov profile over C2") {
    auto prof = golubov_profile(two_by_two_spec());
    REQUIRE(prof.size() == 2);
    CHECK(prof[0].first == ElementSet{0});
    CHECK(prof[0].second == 2);
    CHECK(prof[1].first == ElementSet{0, 1});
    CHECK(prof[1].second == 1);

    ReesSpec trivial_spec;
    trivial_spec.group = trivial_monoid();
    trivial_spec.icount = trivial_spec.jcount = 2;
    trivial_spec.entries = {0, 0, 0, 0};
    auto tp = golubov_profile(trivial_spec);
    REQUIRE(tp.size() == 1);
    CHECK(tp[0].second == 1);

    auto p4 = golubov_profile(diagonal_matrix(4));
    REQUIRE(p4.size() == 2);
    CHECK(p4[0].second == 4);
    CHECK(p4[1].second == 1);
  }

  TEST_CASE("rank never grows when reducing modulo a normal subgroup") {
    for (auto spec : {two_by_two_spec(), diagonal_matrix(3), diagonal_matrix(5)}) {
      auto base = matrix_rank(spec).rank;
      for (auto& n : normal_subgroups_of(spec.group)) CHECK(matrix_rank(spec, n).rank <= base);
    }
  }

  TEST_CASE("mgn(C2,C2): order, layout, and the idempotent-free D") {
    auto g2 = cyclic_group(2);
    auto m = mgn(g2, {0, 1});
    auto lay = mgn_layout(g2, {0, 1});
    CHECK(m.size == 8);
    CHECK(m.at(lay.h(), lay.g(1)) == lay.d(1));          // h*g = hg
    CHECK(m.at(lay.nbar(1), lay.h()) == lay.d(1));       // nbar*h = h*n
    CHECK(m.at(lay.g(1), lay.nbar(1)) == lay.zero());    // g*nbar = 0
    CHECK(m.at(lay.h(), lay.nbar(0)) == lay.zero());     // h*nbar = 0
    CHECK(m.at(lay.d(1), lay.d(0)) == lay.zero());       // D*D = 0
    CHECK_FALSE(m.is_idempotent(lay.d(0)));
    CHECK_FALSE(m.is_idempotent(lay.d(1)));
    CHECK_FALSE(regularity_report(m).regular);
  }

  TEST_CASE("mgn sizes: trivial N and the C4 case") {
    CHECK(mgn(cyclic_group(2), {0}).size == 7);
    auto m = mgn(cyclic_group(4), {0, 2});
    CHECK(m.size == 12);
    auto lay = mgn_layout(cyclic_group(4), {0, 2});
    auto g = green_structure(m);
    std::set<std::uint32_t> l_classes;
    for (element x = 0; x < 4; ++x) l_classes.insert(g.l.cls[lay.d(x)]);
    CHECK(l_classes.size() == 2);  // indexed by G/N
  }

  TEST_CASE("matrix_rank rejects a non-normal modulus") {
    ReesSpec spec;
    spec.group = sym3();
    spec.icount = spec.jcount = 2;
    spec.entries = {0, 2, 0, 0};
    CHECK_THROWS_AS((void)matrix_rank(spec, ElementSet{0, 2}), MonoidError);
    CHECK_NOTHROW((void)matrix_rank(spec, ElementSet{0, 3, 4}));  // A3 is normal
  }

  TEST_CASE("mgn requires a normal subgroup") {
    CHECK_THROWS_AS((void)mgn(sym3(), ElementSet{0, 2}), MonoidError);  // <(01)> not normal
    CHECK_THROWS_AS((void)mgn(t2(), ElementSet{0}), MonoidError);       // not a group
  }

  TEST_CASE("mgn quotients: collapse everything, nothing, and halfway") {
    auto g2 = cyclic_group(2);
    auto full = mgn_quotient(g2, {0, 1}, {0, 1});
    CHECK(full.iso_verified);
    CHECK(full.q.size == 5);  // mgn(trivial, trivial)

    auto none = mgn_quotient(g2, {0, 1}, {0});
    CHECK(none.iso_verified);
    CHECK(none.q.size == 8);
    REQUIRE(monoid_iso(none.q, mgn(g2, {0, 1})).has_value());

    auto half = mgn_quotient(cyclic_group(4), {0, 1, 2, 3}, {0, 2});
    CHECK(half.iso_verified);
    CHECK(half.q.size == 8);
    REQUIRE(monoid_iso(half.q, mgn(g2, {0, 1})).has_value());
  }

  TEST_CASE("quotient group C4 / <x^2> is C2") {
    auto [q, proj] = quotient_group(cyclic_group(4), {0, 2});
    REQUIRE(monoid_iso(q, cyclic_group(2)).has_value());
  }

  TEST_CASE("Rees matrix monoids over a group are regular") {
    for (std::uint32_t n = 1; n <= 4; ++n)
      CHECK(regularity_report(rees_matrix(diagonal_matrix(n), true)).regular);
  }
}
