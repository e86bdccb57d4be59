#include "monoidkit/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "monoidkit/cli.hpp"
#include "monoidkit/congruence.hpp"
#include "monoidkit/constructions.hpp"
#include "monoidkit/effective.hpp"
#include "monoidkit/fixtures.hpp"
#include "monoidkit/green.hpp"
#include "monoidkit/io.hpp"
#include "monoidkit/schutzen.hpp"
#include "monoidkit/separation.hpp"

namespace monoidkit::suites {

namespace {

struct Tally {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      if (first_failure.empty()) first_failure = what;
    }
  }

  std::string detail(const std::string& what) const {
    std::string s = what + ": " + std::to_string(checks) + " checks, " + std::to_string(failures) + " failures";
    if (!first_failure.empty()) s += " (first: " + first_failure + ")";
    return s;
  }
};

}  // namespace

std::vector<std::pair<std::string, FiniteMonoid>> corpus() {
  std::vector<std::pair<std::string, FiniteMonoid>> out;
  out.emplace_back("C2", cyclic_group(2));
  out.emplace_back("C4", cyclic_group(4));
  out.emplace_back("C2xC2", direct_product(cyclic_group(2), cyclic_group(2)));
  out.emplace_back("S3", sym3());
  out.emplace_back("T2", t2());
  out.emplace_back("T3", full_transformations(3));
  out.emplace_back("mgn(C2,C2)", mgn(cyclic_group(2), {0, 1}));
  out.emplace_back("mgn(C4,<x2>)", mgn(cyclic_group(4), {0, 2}));
  for (std::uint32_t n = 1; n <= 5; ++n)
    out.emplace_back("rees(diag_" + std::to_string(n) + ")^1", rees_matrix(diagonal_matrix(n), true));
  for (std::uint32_t n = 1; n <= 10; ++n) out.emplace_back("t_n(" + std::to_string(n) + ")", t_n(n));
  return out;
}

namespace {

SuiteResult suite_schutz_props() {
  Tally t;
  for (auto& [name, m] : corpus()) {
    auto green = green_structure(m);
    auto h_classes = green.h.classes();
    std::vector<SchutzGroup> sgs;
    for (auto& h : h_classes) sgs.push_back(schutzenberger_group(m, green, h));

    for (std::uint32_t hc = 0; hc < h_classes.size(); ++hc) {
      const auto& h = h_classes[hc];
      const auto& sg = sgs[hc];
      std::vector<char> in(m.size, 0);
      for (auto x : h) in[x] = 1;
      // (i) the one-point stabilizer is the same set for every base point
      for (auto base : h) {
        ElementSet one_point;
        for (element s = 0; s < m.size; ++s)
          if (in[m.at(base, s)]) one_point.push_back(s);
        t.expect(one_point == sg.stabilizer, name + ": stab definitions differ on H" + std::to_string(hc));
      }
      // (iii) h * Stab(H) = H for each h
      for (auto base : h) {
        ElementSet image;
        for (auto s : sg.stabilizer) image.push_back(m.at(base, s));
        t.expect(normalized_set(std::move(image)) == h, name + ": h*Stab != H on H" + std::to_string(hc));
      }
      // (v) |Gamma(H)| = |H| with a regular action
      t.expect(sg.group.order() == h.size(), name + ": |Gamma| != |H| on H" + std::to_string(hc));
      for (std::uint32_t p1 = 0; p1 < h.size(); ++p1)
        for (std::uint32_t p2 = 0; p2 < h.size(); ++p2) {
          std::uint32_t hits = 0;
          for (auto& perm : sg.group.perms) hits += perm[p1] == p2;
          t.expect(hits == 1, name + ": action not regular on H" + std::to_string(hc));
        }
      // (vii) group H-classes satisfy Gamma(H) iso H
      element idem = m.size;
      for (auto x : h)
        if (m.is_idempotent(x)) idem = x;
      if (idem != m.size) {
        FiniteMonoid sub;
        sub.size = static_cast<std::uint32_t>(h.size());
        sub.table.resize(h.size() * h.size());
        auto pos = [&](element x) {
          return static_cast<element>(std::lower_bound(h.begin(), h.end(), x) - h.begin());
        };
        for (std::size_t a = 0; a < h.size(); ++a)
          for (std::size_t b = 0; b < h.size(); ++b) sub.table[a * h.size() + b] = pos(m.at(h[a], h[b]));
        sub.identity = pos(idem);
        for (element x = 0; x < sub.size; ++x) sub.generators.push_back(x);
        sub = build_monoid(std::move(sub));
        t.expect(group_iso(sg.group, PermGroup::regular_representation(sub)).has_value(),
                 name + ": Gamma(H) not iso to the group H" + std::to_string(hc));
      }
    }
    // (iv) equal stabilizers along L; (vi) Gamma iso along R and along L
    for (std::uint32_t h1 = 0; h1 < h_classes.size(); ++h1)
      for (std::uint32_t h2 = h1 + 1; h2 < h_classes.size(); ++h2) {
        bool same_l = green.l.cls[h_classes[h1][0]] == green.l.cls[h_classes[h2][0]];
        bool same_r = green.r.cls[h_classes[h1][0]] == green.r.cls[h_classes[h2][0]];
        if (same_l)
          t.expect(sgs[h1].stabilizer == sgs[h2].stabilizer,
                   name + ": stabilizers differ along an L-class");
        if (same_l || same_r)
          t.expect(group_iso(sgs[h1].group, sgs[h2].group).has_value(),
                   name + ": Gamma not iso along R/L (H" + std::to_string(h1) + ",H" + std::to_string(h2) + ")");
      }
  }
  return {"schutz-props", t.failures == 0, t.detail("stabilizer and Schutzenberger-group laws over all corpus H-classes"), 0, 10};
}

SuiteResult suite_tn_order() {
  Tally t;
  for (std::uint32_t n = 1; n <= 50; ++n)
    t.expect(t_n(n).size == 2 * n + 2, "t_n(" + std::to_string(n) + ") order");
  return {"tn-order", t.failures == 0, t.detail("|t_n(n)| = 2n+2 for 1 <= n <= 50"), 0, 1};
}

SuiteResult suite_mgn() {
  Tally t;
  std::vector<std::pair<std::string, FiniteMonoid>> groups;
  groups.emplace_back("C2", cyclic_group(2));
  groups.emplace_back("C4", cyclic_group(4));
  groups.emplace_back("C2xC2", direct_product(cyclic_group(2), cyclic_group(2)));
  groups.emplace_back("S3", sym3());
  for (auto& [gname, g] : groups) {
    auto normals = normal_subgroups_of(g);
    for (auto& n : normals) {
      FiniteMonoid m = mgn(g, n);
      std::string ctx = "mgn(" + gname + ",|N|=" + std::to_string(n.size()) + ")";
      t.expect(m.size == 2 * g.size + n.size() + 2, ctx + " order != 2|G|+|N|+2");
      auto green = green_structure(m);
      t.expect(green.j.count == 5, ctx + " J-class count != 5");
      t.expect(is_congruence(m, green.j, Side::two_sided), ctx + " J not a congruence");
      MgnLayout lay = mgn_layout(g, n);
      std::uint32_t d_j = green.j.cls[lay.h()];
      std::set<std::uint32_t> l_in_d;
      for (element x = 0; x < m.size; ++x)
        if (green.j.cls[x] == d_j) l_in_d.insert(green.l.cls[x]);
      t.expect(l_in_d.size() == g.size / n.size(), ctx + " D-class L-count != [G:N]");
      for (auto& k : normals)
        t.expect(mgn_quotient(g, n, k).iso_verified,
                 ctx + " Q(M,K) not iso to rebuilt, |K|=" + std::to_string(k.size()));
    }
  }
  return {"mgn", t.failures == 0, t.detail("M(G,N) structure and quotient isomorphisms"), 0, 30};
}

SuiteResult suite_sigma() {
  Tally t;
  auto monoids = corpus();
  std::mt19937 rng(12345);

  // refinement route vs definitional route on 200 random partitions
  for (int i = 0; i < 200; ++i) {
    auto& [name, m] = monoids[i % monoids.size()];
    std::uint32_t k = 1 + rng() % m.size;
    std::vector<std::uint32_t> labels(m.size);
    for (auto& v : labels) v = rng() % k;
    Partition pi = Partition::from_labels(labels);
    t.expect(largest_contained(m, pi, Side::right).partition ==
                 largest_contained_definitional(m, pi, Side::right).partition,
             name + ": Sigma_r routes disagree");
  }

  // maximality: Sigma_r(pi) contains every right congruence inside pi
  for (auto& [name, m] : monoids) {
    if (m.size > 5) continue;
    auto congruences = enumerate_congruences(m, Side::right);
    for (auto& pi : all_partitions(m.size)) {
      auto sigma = largest_contained(m, pi, Side::right);
      for (auto& rho : congruences)
        if (rho.partition.refines(pi))
          t.expect(rho.partition.refines(sigma.partition), name + ": Sigma_r not maximal");
    }
  }

  // Sigma_r equivalence holds exactly when all the Q(., C_i) sets agree
  for (auto& [name, m] : monoids) {
    if (m.size > 12) continue;
    auto green = green_structure(m);
    std::vector<Partition> pis = {Partition::identity(m.size), Partition::universal(m.size),
                                  green.r, green.l, green.j, green.h, green.d};
    for (int i = 0; i < 20; ++i) {
      std::uint32_t k = 1 + rng() % m.size;
      std::vector<std::uint32_t> labels(m.size);
      for (auto& v : labels) v = rng() % k;
      pis.push_back(Partition::from_labels(labels));
    }
    for (auto& pi : pis) {
      auto sigma = largest_contained(m, pi, Side::right);
      auto classes = pi.classes();
      for (element x = 0; x < m.size; ++x)
        for (element y = 0; y < m.size; ++y) {
          bool qs_equal = true;
          for (auto& c : classes)
            if (q_set(m, x, c) != q_set(m, y, c)) {
              qs_equal = false;
              break;
            }
          t.expect(qs_equal == sigma.partition.same(x, y), name + ": Q-set fingerprint mismatch");
        }
    }
  }
  return {"sigma", t.failures == 0, t.detail("Sigma_r two routes, maximality, Q-set fingerprints"), 0, 60};
}

SuiteResult suite_separation() {
  Tally t;
  for (auto& [name, m] : corpus()) {
    for (element x = 0; x < m.size; ++x)
      for (element y = 0; y < m.size; ++y) {
        if (x == y) continue;
        try {
          auto w = separate(m, x, y);
          t.expect(w.congruence.verified && w.congruence.side == Side::two_sided &&
                       !w.congruence.partition.same(x, y),
                   name + ": weak witness for (" + std::to_string(x) + "," + std::to_string(y) + ")");
        } catch (const MonoidError& e) {
          t.expect(false, name + ": separate threw " + e.what());
        }
      }
  }
  return {"separation", t.failures == 0, t.detail("separate() on every ordered pair of every corpus monoid"), 0, 60};
}

SuiteResult suite_letter_mapping() {
  Tally t;
  for (auto& [name, m] : corpus()) {
    if (!regularity_report(m).regular) continue;
    auto green = green_structure(m);
    for (element a = 0; a < m.size; ++a)
      for (element b = 0; b < m.size; ++b) {
        if (green.l.cls[a] == green.l.cls[b]) continue;
        try {
          auto [rho, data] = right_letter_congruence(m, a, b);
          t.expect(rho.verified && rho.side == Side::right && !rho.partition.same(a, b) &&
                       green.l.refines(rho.partition),
                   name + ": weak rlm congruence");
        } catch (const MonoidError& e) {
          t.expect(false, name + ": right_letter_congruence threw " + e.what());
        }
      }
  }
  return {"letter-mapping", t.failures == 0,
          t.detail("right letter mapping on every non-L-related pair of regular corpus monoids"), 0, 60};
}

SuiteResult suite_rank_growth() {
  Tally t;
  for (std::uint32_t n = 3; n <= 12; ++n)
    t.expect(matrix_rank(diagonal_matrix(n)).rank == n, "rank(P_" + std::to_string(n) + ") != n");
  for (std::uint32_t n = 1; n <= 12; ++n) {
    auto spec = diagonal_matrix(n);
    t.expect(matrix_rank(spec, ElementSet{0, 1}).rank == 1, "rank(P_" + std::to_string(n) + "/C2) != 1");
  }
  return {"rank-growth", t.failures == 0, t.detail("rank growth of the truncated diagonal matrices"), 0, 5};
}

SuiteResult suite_tau() {
  Tally t;
  auto div = tau_lemma_check(8, 1024);
  t.expect(div.divisibility_ok, "divisibility lemma: " + div.first_violation);
  auto fix = tau_lemma_check(20, 1 << 16);
  t.expect(fix.no_fixed_residue_ok, "no-fixed-residue lemma: " + fix.first_violation);
  return {"tau", t.failures == 0, t.detail("tau divisibility and no-fixed-residue laws, exhaustive"), 0, 10};
}

SuiteResult suite_cm_compat() {
  Tally t;
  CmMonoid m;
  for (std::int64_t mm = 1; mm <= 3; ++mm) {
    auto rel = cm_congruence("case2", mm);
    const std::int64_t window = std::int64_t(1) << (mm + 2);
    const std::int64_t genw = std::int64_t(1) << mm;
    auto rep = verify_compat(m, rel, window, genw);
    t.expect(rep.pass, rel.name() + ": " + (rep.violations.empty() ? "?" : rep.violations[0]));
    for (int br = 0; br < 4; ++br)
      t.expect(rep.branch_hits[static_cast<std::size_t>(br)] > 0,
               rel.name() + ": branch " + std::to_string(br + 1) + " never exercised");
    // D(p), D(q) separated exactly when p != q mod 2^(m+1)
    const std::int64_t mod = std::int64_t(1) << (mm + 1);
    for (std::int64_t p = -window; p <= window; ++p)
      for (std::int64_t q = -window; q <= window; ++q) {
        bool same = rel.classify(CmMonoid::d(p)) == rel.classify(CmMonoid::d(q));
        t.expect(same == (((p - q) % mod + mod) % mod == 0), rel.name() + ": D separation wrong");
      }
    auto corrupted = rel;
    corrupted.corrupt_tau_shift = true;
    t.expect(!verify_compat(m, corrupted, window, genw).pass,
             rel.name() + ": corrupted classifier passed");
  }
  return {"cm-compat", t.failures == 0,
          t.detail("case2 compatibility, branch coverage, D separation, negative control"), 0, 60};
}

SuiteResult suite_derivations() {
  Tally t;
  for (std::int64_t p = 1; p <= 10; ++p)
    for (std::int64_t q = p + 1; q <= 10; ++q)
      t.expect(ex13_collapse(p, q).pass, "ex13_collapse(" + std::to_string(p) + "," + std::to_string(q) + ")");
  for (std::uint32_t n = 1; n <= 20; ++n)
    t.expect(ab_l_collapse(n).pass, "ab_L_collapse(" + std::to_string(n) + ")");
  for (std::int64_t i = -5; i <= 5; ++i)
    for (std::int64_t j = -5; j <= 5; ++j) {
      if (i == j) continue;
      t.expect(cm_de_collapse(i, j).pass, "cm_de_collapse(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  return {"derivations", t.failures == 0, t.detail("ex13, ab and cm derivation chains"), 0, 5};
}

SuiteResult suite_roundtrip() {
  Tally t;
  // action <-> congruence round trip on all right congruences, order <= 5
  for (auto& [name, m] : corpus()) {
    if (m.size > 5) continue;
    for (auto& rho : enumerate_congruences(m, Side::right)) {
      auto action = action_from_congruence(m, rho);
      t.expect(congruence_from_action(action).partition == rho.partition, name + ": round trip not identity");
    }
  }
  // table file round trip
  for (auto& [name, m] : corpus()) {
    if (m.size > 30) continue;
    auto text = emit_monoid_text(m);
    auto back = parse_monoid_text(text, name);
    t.expect(back.table == m.table && back.identity == m.identity && back.generators == m.generators,
             name + ": table file round trip");
    t.expect(emit_monoid_text(back) == text, name + ": emit not stable");
  }
  // CLI analyze on the T2 fixture
  auto tmp = std::filesystem::temp_directory_path() / "monoidkit_t2.mon";
  save_monoid_file(t2(), tmp.string());
  {
    std::ostringstream out, err;
    int rc = run_command({"analyze", tmp.string()}, out, err);
    t.expect(rc == 0, "analyze exit code " + std::to_string(rc));
    t.expect(out.str().find("R-classes: 2, L-classes: 3, H-classes: 3") != std::string::npos,
             "analyze missing Green counts: " + out.str());
    t.expect(out.str().find("regular: yes") != std::string::npos, "analyze missing regularity");
  }
  // the negative-control suite must exit 1
  {
    std::ostringstream out, err;
    int rc = run_command({"check", "negative"}, out, err);
    t.expect(rc == 1, "negative control exited " + std::to_string(rc));
  }
  std::filesystem::remove(tmp);
  return {"roundtrip", t.failures == 0, t.detail("round trips and CLI surface"), 0, 10};
}

// deliberately failing assertions; `check negative` must exit 1
SuiteResult suite_negative() {
  Tally t;
  CmMonoid m;
  auto corrupted = cm_congruence("case2", 1);
  corrupted.corrupt_tau_shift = true;
  t.expect(verify_compat(m, corrupted, 8, 2).pass, "corrupted classifier must not pass");
  bool accepted = true;
  try {
    FiniteMonoid bad;
    bad.size = 2;
    bad.table = {1, 0, 0, 0};  // identity law broken on purpose
    bad.identity = 0;
    bad.generators = {1};
    build_monoid(std::move(bad));
  } catch (const MonoidError&) {
    accepted = false;
  }
  t.expect(accepted, "invalid table must not build");
  return {"negative", t.failures == 0, t.detail("negative controls (expected to fail)"), 0, 10};
}

using SuiteFn = SuiteResult (*)();

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> reg = {
      {"schutz-props", suite_schutz_props},
      {"tn-order", suite_tn_order},
      {"mgn", suite_mgn},
      {"sigma", suite_sigma},
      {"separation", suite_separation},
      {"letter-mapping", suite_letter_mapping},
      {"rank-growth", suite_rank_growth},
      {"tau", suite_tau},
      {"cm-compat", suite_cm_compat},
      {"derivations", suite_derivations},
      {"roundtrip", suite_roundtrip},
  };
  return reg;
}

}  // namespace

const std::vector<std::string>& acceptance_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

bool is_suite_name(const std::string& name) {
  if (name == "negative") return true;
  for (auto& [n, fn] : registry())
    if (n == name) return true;
  return false;
}

SuiteResult run_suite(const std::string& name) {
  auto timed = [](SuiteFn fn) {
    auto start = std::chrono::steady_clock::now();
    SuiteResult r = fn();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.budget_seconds > 0 && r.seconds > r.budget_seconds) {
      r.pass = false;
      r.detail += " [exceeded " + std::to_string(r.budget_seconds) + "s budget]";
    }
    return r;
  };
  if (name == "negative") return timed(suite_negative);
  for (auto& [n, fn] : registry())
    if (n == name) return timed(fn);
  raise(errc::invalid_parameter, "unknown suite '" + name + "'");
}

std::vector<SuiteResult> run_acceptance() {
  std::vector<SuiteResult> out;
  for (auto& name : acceptance_suite_names()) out.push_back(run_suite(name));
  return out;
}

}  // namespace monoidkit::suites
