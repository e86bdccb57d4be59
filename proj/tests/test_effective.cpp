#include <doctest.h>

#include <set>

#include "monoidkit/effective.hpp"
#include "monoidkit/green.hpp"

using namespace monoidkit;

TEST_SUITE("effective") {
  TEST_CASE("tau values") {
    CHECK(tau(1) == 0);
    CHECK(tau(3) == 0);
    CHECK(tau(2) == 2);
    CHECK(tau(4) == 2);
    CHECK(tau(8) == 10);
    CHECK(tau(-2) == 2);
    CHECK(tau(32) == 42);
    CHECK_THROWS_AS((void)tau(0), MonoidError);
  }

  TEST_CASE("tau lemma worked rows") {
    // a = 2, b = 10, m = 3: 2 = 10 mod 8 and tau agree mod 16
    CHECK((10 - 2) % 8 == 0);
    CHECK((tau(10) - tau(2)) % 16 == 0);
    // x = 10 is violated at m = 5: 10 != tau(32) = 42 mod 64
    CHECK((10 - tau(32)) % 64 != 0);
    auto rep = tau_lemma_check(8, 128);
    CHECK(rep.divisibility_ok);
    CHECK(rep.no_fixed_residue_ok);
    // truncating at m <= 8 leaves the survivor x = 170 = tau(2^8); only
    // larger m kill it, which is the content of the no-fixed-residue lemma
    CHECK(tau(256) == 170);
    CHECK_FALSE(tau_lemma_check(8, 256).no_fixed_residue_ok);
    CHECK(tau_lemma_check(9, 256).no_fixed_residue_ok);
  }

  TEST_CASE("ab monoid multiplication") {
    AbMonoid m;
    CHECK(m.mul(AbMonoid::a(2), AbMonoid::b(3)) == AbMonoid::b(5));
    CHECK(m.mul(AbMonoid::b(3), AbMonoid::a(1)) == AbMonoid::zero());
    CHECK(m.mul(AbMonoid::b(0), AbMonoid::b(1)) == AbMonoid::zero());
    CHECK(m.mul(AbMonoid::a(1), AbMonoid::a(2)) == AbMonoid::a(3));
    CHECK(m.mul(AbMonoid::one(), AbMonoid::b(-4)) == AbMonoid::b(-4));
  }

  TEST_CASE("ab windows") {
    AbMonoid m;
    auto w1 = m.window(1);
    REQUIRE(w1.size() == 6);  // 1, a, b_-1, b_0, b_1, 0
    CHECK(w1[0] == AbMonoid::one());
    CHECK(w1[1] == AbMonoid::a(1));
    CHECK(w1.back() == AbMonoid::zero());
    CHECK(m.window(std::nullopt).size() == 2);
  }

  TEST_CASE("ab associativity on a window") {
    AbMonoid m;
    auto win = m.window(3);
    for (auto& x : win)
      for (auto& y : win)
        for (auto& z : win) CHECK(m.mul(m.mul(x, y), z) == m.mul(x, m.mul(y, z)));
  }

  TEST_CASE("t_n orders and theta") {
    CHECK(t_n(3).size == 8);
    CHECK_THROWS_AS((void)t_n(0), MonoidError);
    auto theta2 = theta_n(2);
    CHECK(theta2.target.name_of(theta2.apply(AbMonoid::b(5))) == "ab");  // 5 mod 2 = 1
    auto theta1 = theta_n(1);
    CHECK(theta1.apply(AbMonoid::a(1)) != theta1.apply(AbMonoid::b(0)));
    for (std::uint32_t n : {1u, 2u, 3u, 5u, 8u}) CHECK(theta_multiplicative_on_window(theta_n(n), 8));
  }

  TEST_CASE("L-classes of the ab monoid are singletons, yet images collapse") {
    // theta images of b_0 and b_1 are L-related in every T_n
    for (std::uint32_t n = 1; n <= 12; ++n) {
      auto theta = theta_n(n);
      auto g = green_structure(theta.target);
      CHECK(g.l.cls[theta.apply(AbMonoid::b(0))] == g.l.cls[theta.apply(AbMonoid::b(1))]);
    }
  }

  TEST_CASE("ex13 relation checks from the relation list") {
    Ex13Monoid m;
    CHECK(m.mul(m.a(2), m.b(0)) == m.b(0, {2}));            // a_i b_j = b_j c_(i-j)
    CHECK(m.mul(m.a(0), m.b(0)) == m.b(0));                 // trivial action for i <= j
    CHECK(m.mul(m.b(0), m.d({}, 1)) == m.b(1));             // b_j d = b_(j+1)
    CHECK(m.mul(m.a(1), m.mul(m.a(1), m.b(0))) == m.b(0));  // involution
    CHECK(m.mul(m.b(0, {2}), m.c(2)) == m.b(0));            // b_j c_k^2 = b_j
    CHECK(m.mul(m.a(3), m.mul(m.a(1), m.b(0))) == m.mul(m.a(1), m.mul(m.a(3), m.b(0))));
    CHECK(m.mul(m.c(1), m.c(2)) != m.mul(m.c(2), m.c(1)));  // C stays free
    CHECK(m.mul(m.a(1), m.c(1)) == m.zero());
    CHECK(m.mul(m.d({}, 1), m.b(0)) == m.zero());
  }

  TEST_CASE("ex13 associativity on a window") {
    Ex13Monoid m;
    auto win = m.window(2, 2);
    REQUIRE(win.size() >= 20);
    for (auto& x : win)
      for (auto& y : win)
        for (auto& z : win) CHECK(m.mul(m.mul(x, y), z) == m.mul(x, m.mul(y, z)));
  }

  TEST_CASE("ex13 b_j d^t walks the B ladder and shifts suffixes") {
    Ex13Monoid m;
    for (std::int64_t j = -3; j <= 3; ++j)
      for (std::int64_t t = 1; t <= 4; ++t) CHECK(m.mul(m.b(j), m.d({}, t)) == m.b(j + t));
    // left a-action matches the right c-action under the index shift
    for (std::int64_t j = -2; j <= 2; ++j)
      for (std::int64_t i = j + 1; i <= j + 4; ++i)
        CHECK(m.mul(m.a(i), m.b(j)) == m.mul(m.b(j), m.c(i - j)));
  }

  TEST_CASE("ex13 malformed elements are rejected") {
    Ex13Monoid m;
    CHECK_THROWS_AS((void)m.c(0), MonoidError);
    CHECK_THROWS_AS((void)m.b(0, {2, 1}), MonoidError);
    CHECK_THROWS_AS((void)m.d({}, 0), MonoidError);
    Ex13Element bad{Ex13Element::Tag::a_word, {}, 0, {}, 0};
    CHECK_THROWS_AS((void)m.mul(bad, m.b(0)), MonoidError);
  }

  TEST_CASE("cm monoid multiplication and commutativity") {
    CmMonoid m;
    CHECK(m.mul(m.b(0), m.c(0)) == m.d());
    CHECK(m.mul(m.b(0), m.c(2)) == m.e(2));  // tau(2) = 2
    CHECK(m.mul(m.b(1), m.b(2)) == m.zero());
    CHECK(m.mul(m.a(2), m.b(0, 1)) == m.b(0, 3));
    auto win = m.window(1);
    REQUIRE(win.size() == 28);
    for (auto& x : win)
      for (auto& y : win) CHECK(m.mul(x, y) == m.mul(y, x));
    CHECK(m.window(std::nullopt).size() == 2);  // A(0) and 0
  }

  TEST_CASE("cm associativity and the generator action on Green classes") {
    CmMonoid m;
    auto win = m.window(1);
    for (auto& x : win)
      for (auto& y : win)
        for (auto& z : win) CHECK(m.mul(m.mul(x, y), z) == m.mul(x, m.mul(y, z)));
    for (std::int64_t i = -3; i <= 3; ++i) {
      CHECK(m.mul(m.b(i), m.c(i)).tag == CmElement::Tag::d);
      for (std::int64_t j = -3; j <= 3; ++j)
        if (i != j) CHECK(m.mul(m.b(j), m.c(i)).tag == CmElement::Tag::e);
    }
  }

  TEST_CASE("derivation chains") {
    CHECK(ex13_collapse(1, 3).pass);
    CHECK(ex13_collapse(1, 3).steps.size() == 5);
    CHECK(ab_l_collapse(5).pass);
    auto cm01 = cm_de_collapse(0, 1);
    CHECK(cm01.pass);  // tau(1) = 0, so b_0 c_1 = e and b_1 c_1 = d
    CHECK_THROWS_AS((void)ex13_collapse(3, 2), MonoidError);
    CHECK_THROWS_AS((void)cm_de_collapse(1, 1), MonoidError);
    CHECK(derivation_check("ex13_collapse", {1, 3}).pass);
    CHECK(derivation_check("ab_L_collapse", {5}).pass);
    CHECK(derivation_check("cm_de_collapse", {0, 1}).pass);
    CHECK_THROWS_AS((void)derivation_check("nonsense", {}), MonoidError);
  }

  TEST_CASE("case2 classifier identifies D and E with the tau shift") {
    auto rel = cm_congruence("case2", 1);
    CHECK(rel.classify(CmMonoid::d(0)) == rel.classify(CmMonoid::e(2)));   // tau(2) = 2 mod 4
    CHECK(rel.classify(CmMonoid::d(1)) != rel.classify(CmMonoid::e(2)));
    CHECK_THROWS_AS((void)rel.classify(CmMonoid::a(1)), MonoidError);  // ideal only
    // restricted to D u E there are exactly 2^(m+1) labels
    for (std::int64_t m = 1; m <= 3; ++m) {
      auto r = cm_congruence("case2", m);
      std::set<CmLabel> labels;
      const std::int64_t span = std::int64_t(2) << m;
      for (std::int64_t p = -2 * span; p <= 2 * span; ++p) {
        labels.insert(r.classify(CmMonoid::d(p)));
        labels.insert(r.classify(CmMonoid::e(p)));
      }
      CHECK(labels.size() == static_cast<std::size_t>(std::int64_t(1) << (m + 1)));
    }
  }

  TEST_CASE("case1 classifier splits one C column and lumps the rest") {
    auto rel = cm_congruence("case1", 3, 0);
    CHECK(rel.classify(CmMonoid::c(0, 0)) == rel.classify(CmMonoid::c(0, 3)));
    CHECK(rel.classify(CmMonoid::c(0, 0)) != rel.classify(CmMonoid::c(0, 1)));
    CHECK(rel.classify(CmMonoid::c(1, 0)) == rel.classify(CmMonoid::c(1, 5)));
    CHECK(rel.classify(CmMonoid::c(1, 0)) == rel.classify(CmMonoid::d(7)));
  }

  TEST_CASE("verify_compat: case1, case2 and bpart pass on honest windows") {
    CmMonoid m;
    for (std::int64_t mm = 1; mm <= 2; ++mm) {
      auto rep = verify_compat(m, cm_congruence("case2", mm), std::int64_t(1) << (mm + 2),
                               std::int64_t(1) << mm);
      CHECK(rep.pass);
      for (auto hits : rep.branch_hits) CHECK(hits > 0);
    }
    CHECK(verify_compat(m, cm_congruence("case1", 3, 0), 8, 3).pass);
    CHECK(verify_compat(m, cm_congruence("bpart", 3, 0), 8, 3).pass);
    CHECK(verify_compat_ab_l(4, 4).pass);
  }

  TEST_CASE("verify_compat: corrupted classifier is caught") {
    CmMonoid m;
    auto rel = cm_congruence("case2", 1);
    rel.corrupt_tau_shift = true;
    auto rep = verify_compat(m, rel, 8, 2);
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.violations.empty());
  }

  TEST_CASE("verify_compat refuses windows below the residue system") {
    CmMonoid m;
    CHECK_THROWS_AS((void)verify_compat(m, cm_congruence("case2", 3), 32, 2), MonoidError);
  }

  TEST_CASE("cm_congruence rejects bad parameters") {
    CHECK_THROWS_AS((void)cm_congruence("case2", 0), MonoidError);
    CHECK_THROWS_AS((void)cm_congruence("caseX", 1), MonoidError);
  }
}
