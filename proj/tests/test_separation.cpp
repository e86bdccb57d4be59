#include <doctest.h>

#include "monoidkit/constructions.hpp"
#include "monoidkit/effective.hpp"
#include "monoidkit/fixtures.hpp"
#include "monoidkit/separation.hpp"

using namespace monoidkit;

TEST_SUITE("separation") {
  TEST_CASE("T2: constants separate along the not-L route") {
    auto w = separate(t2(), 2, 3);
    CHECK(w.route == SepRoute::not_l);
    CHECK_FALSE(w.congruence.partition.same(2, 3));
    CHECK(w.congruence.side == Side::two_sided);
    CHECK(w.congruence.verified);
  }

  TEST_CASE("T2: the unit H-class pair takes the same-H route") {
    auto w = separate(t2(), 0, 1);
    CHECK(w.route == SepRoute::same_h);
    CHECK(w.h_class == ElementSet{0, 1});
    CHECK(w.base_h == 0);
    CHECK(w.chosen_n.size() == 1);  // trivial N by default
    REQUIRE(w.blocks.size() == 2);
    CHECK(w.blocks[0] == ElementSet{0});
    CHECK(w.blocks[1] == ElementSet{1});
    CHECK(w.pi == Partition::from_classes(4, {{0}, {1}, {2, 3}}));
    CHECK(w.congruence.partition == Partition::from_classes(4, {{0}, {1}, {2, 3}}));
  }

  TEST_CASE("mgn(C2,C2): idempotent-free H-class pair separates") {
    auto m = mgn(cyclic_group(2), {0, 1});
    auto lay = mgn_layout(cyclic_group(2), {0, 1});
    auto w = separate(m, lay.d(0), lay.d(1));
    CHECK(w.route == SepRoute::same_h);
    CHECK_FALSE(w.congruence.partition.same(lay.d(0), lay.d(1)));
    CHECK(w.q_set_count > 0);
  }

  TEST_CASE("separate rejects equal elements and bad indices") {
    CHECK_THROWS_AS((void)separate(t2(), 1, 1), MonoidError);
    CHECK_THROWS_AS((void)separate(t2(), 0, 17), MonoidError);
  }

  TEST_CASE("not-R route via the opposite convention") {
    // in opposite(T2) the constants are R-related but not L-related
    auto w = separate(opposite(t2()), 2, 3);
    CHECK(w.route == SepRoute::not_r);
    CHECK_FALSE(w.congruence.partition.same(2, 3));
  }

  TEST_CASE("block compatibility under right multiplication") {
    // S3 unit group inside T3, largest valid normal subgroup gives coset blocks
    auto t3 = full_transformations(3);
    element id = 5;  // the identity map "012"
    REQUIRE(t3.identity == id);
    element transposition = 7;  // "021"
    auto w = separate(t3, id, transposition, SeparateOptions{true});
    REQUIRE(w.route == SepRoute::same_h);
    CHECK(w.chosen_n.size() == 3);  // A3 keeps the cosets of id and a transposition apart
    CHECK(w.blocks.size() == 2);
    for (auto& block : w.blocks)
      for (auto u : block)
        for (auto v : block)
          for (element s = 0; s < t3.size; ++s) {
            auto in_block = [&](element e, const ElementSet& b) { return set_contains(b, e); };
            for (auto& target : w.blocks)
              CHECK(in_block(t3.at(u, s), target) == in_block(t3.at(v, s), target));
          }
  }

  TEST_CASE("coarser witness with the largest valid normal subgroup") {
    auto t3 = full_transformations(3);
    auto w_default = separate(t3, 5, 7);
    auto w_coarse = separate(t3, 5, 7, SeparateOptions{true});
    CHECK(w_coarse.congruence.index() <= w_default.congruence.index());
  }

  TEST_CASE("separate covers every pair of a small sweep") {
    for (auto& m : {cyclic_group(4), t2(), mgn(cyclic_group(2), {0, 1}), t_n(3)}) {
      for (element x = 0; x < m.size; ++x)
        for (element y = 0; y < m.size; ++y) {
          if (x == y) continue;
          auto w = separate(m, x, y);
          CHECK_FALSE(w.congruence.partition.same(x, y));
        }
    }
  }

  TEST_CASE("right letter mapping on T2 separates the constants") {
    auto [rho, data] = right_letter_congruence(t2(), 2, 3);
    CHECK(rho.side == Side::right);
    CHECK(rho.verified);
    CHECK_FALSE(rho.partition.same(2, 3));
    // cones and orbits over the three L-classes
    CHECK(data.orbit_a.size() == 2);  // L_{c1} and L_{c2} reach each other via sw
    CHECK(data.orbit_b.size() == 2);
  }

  TEST_CASE("truncated maps respect the action: alpha_st = alpha_s then alpha_t") {
    auto m = t2();
    auto [rho, data] = right_letter_congruence(m, 2, 3);
    for (element s = 0; s < m.size; ++s)
      for (element t = 0; t < m.size; ++t) {
        const auto& fs = data.alpha[s];
        const auto& ft = data.alpha[t];
        const auto& fst = data.alpha[m.at(s, t)];
        for (std::size_t p = 0; p < fs.size(); ++p) CHECK(fst[p] == ft[fs[p]]);
      }
  }

  TEST_CASE("right letter mapping on T3 with a constant and a permutation") {
    auto t3 = full_transformations(3);
    element constant = 0;      // "000"
    element transposition = 7; // "021"
    auto [rho, data] = right_letter_congruence(t3, constant, transposition);
    CHECK_FALSE(rho.partition.same(constant, transposition));
    auto g = green_structure(t3);
    CHECK(g.l.refines(rho.partition));
  }

  TEST_CASE("right letter mapping rejections") {
    CHECK_THROWS_AS((void)right_letter_congruence(t2(), 0, 1), MonoidError);       // L-related
    CHECK_THROWS_AS((void)right_letter_congruence(t_n(2), 0, 3), MonoidError);     // not regular
  }

  TEST_CASE("L pre-image along the identity is L itself") {
    auto t = t2();
    auto rho = l_preimage_congruence(identity_homomorphism(t));
    CHECK(rho == green_structure(t).l);
  }

  TEST_CASE("L pre-image along the Rees projection of T2") {
    auto t = t2();
    auto [q, proj] = rees_quotient(t, {2, 3});
    auto rho = l_preimage_congruence(proj);
    CHECK(rho == Partition::from_classes(4, {{0, 1}, {2, 3}}));
    CHECK(green_structure(t).l.refines(rho));
  }

  TEST_CASE("L pre-image of a group target is universal") {
    auto phi = check_homomorphism(cyclic_group(4), cyclic_group(2), {0, 1, 0, 1});
    CHECK(l_preimage_congruence(phi) == Partition::universal(4));
  }

  TEST_CASE("L pre-image separates idempotents whose images do not absorb") {
    // e = c1, f = c2 under the identity map: phi(e)phi(f) = c2 != phi(e)
    auto t = t2();
    auto rho = l_preimage_congruence(identity_homomorphism(t));
    CHECK(t.at(2, 3) != 2);
    CHECK_FALSE(rho.same(2, 3));
  }
}
