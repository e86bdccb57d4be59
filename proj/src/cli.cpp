#include "monoidkit/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <sstream>

#include "monoidkit/congruence.hpp"
#include "monoidkit/constructions.hpp"
#include "monoidkit/effective.hpp"
#include "monoidkit/fixtures.hpp"
#include "monoidkit/green.hpp"
#include "monoidkit/io.hpp"
#include "monoidkit/schutzen.hpp"
#include "monoidkit/separation.hpp"
#include "monoidkit/suites.hpp"

namespace monoidkit {

namespace {

element resolve_element(const FiniteMonoid& m, const std::string& ref) {
  if (!ref.empty() && std::all_of(ref.begin(), ref.end(), [](unsigned char c) { return std::isdigit(c); })) {
    auto v = std::stoul(ref);
    if (v >= m.size) raise(errc::index_out_of_range, "element " + ref);
    return static_cast<element>(v);
  }
  for (element x = 0; x < m.size; ++x)
    if (m.name_of(x) == ref) return x;
  raise(errc::invalid_parameter, "no element named '" + ref + "'");
}

ElementSet resolve_subgroup(const FiniteMonoid& g, const std::string& spec) {
  if (spec == "trivial") return {g.identity};
  if (spec == "full") {
    ElementSet s(g.size);
    for (element x = 0; x < g.size; ++x) s[x] = x;
    return s;
  }
  ElementSet out;
  std::string token;
  std::istringstream in(spec);
  while (std::getline(in, token, ',')) out.push_back(resolve_element(g, token));
  return normalized_set(std::move(out));
}

void emit_result(const FiniteMonoid& m, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) out << emit_monoid_text(m);
  else save_monoid_file(m, out_path);
}

int cmd_analyze(const std::string& file, std::ostream& out) {
  FiniteMonoid m = load_monoid_file(file);
  auto green = green_structure(m);
  auto reg = regularity_report(m);
  out << "monoid " << file << ": order " << m.size << "\n";
  out << "R-classes: " << green.r.count << ", L-classes: " << green.l.count
      << ", H-classes: " << green.h.count << ", D-classes: " << green.d.count
      << ", J-classes: " << green.j.count << "\n";
  out << "regular: " << (reg.regular ? "yes" : "no") << "\n";
  out << "idempotents:";
  for (auto e : reg.idempotents) out << " " << m.name_of(e);
  out << "\n";
  out << "maximal subgroups:";
  for (auto& sub : maximal_subgroups(m, green))
    out << " " << m.name_of(sub.idempotent) << "(order " << sub.h_class.size() << ")";
  out << "\n";
  out << "schutzenberger orders:";
  for (auto& h : green.h.classes()) {
    auto sg = schutzenberger_group(m, green, h);
    out << " " << m.name_of(h[0]) << ":" << sg.group.order();
  }
  out << "\n";
  return 0;
}

int cmd_separate(const std::string& file, const std::string& xs, const std::string& ys,
                 bool largest_normal, std::ostream& out) {
  FiniteMonoid m = load_monoid_file(file);
  element x = resolve_element(m, xs), y = resolve_element(m, ys);
  auto w = separate(m, x, y, SeparateOptions{largest_normal});
  out << "separating " << m.name_of(x) << " and " << m.name_of(y) << ": route " << route_name(w.route) << "\n";
  if (w.route == SepRoute::same_h) {
    out << "H-class:";
    for (auto e : w.h_class) out << " " << m.name_of(e);
    out << "\nbase h = " << m.name_of(w.base_h) << ", s_x = " << m.name_of(w.s_x)
        << ", s_y = " << m.name_of(w.s_y) << ", |N| = " << w.chosen_n.size() << "\n";
    out << "blocks:";
    for (auto& blk : w.blocks) {
      out << " {";
      for (std::size_t i = 0; i < blk.size(); ++i) out << (i ? " " : "") << m.name_of(blk[i]);
      out << "}";
    }
    out << "\ndistinct Q_M(s,C_k) sets: " << w.q_set_count << "\n";
  }
  out << "witness congruence (" << side_name(w.congruence.side) << ", index " << w.congruence.index() << "):";
  for (auto& cls : w.congruence.partition.classes()) {
    out << " {";
    for (std::size_t i = 0; i < cls.size(); ++i) out << (i ? " " : "") << m.name_of(cls[i]);
    out << "}";
  }
  out << "\n";
  return 0;
}

int cmd_rank(const std::string& file, const std::string& group_name, const std::string& mod_spec,
             bool profile, std::ostream& out) {
  FiniteMonoid g = group_by_name(group_name);
  ReesSpec spec = rees_spec_from_matrix(load_matrix_file(file), g);
  std::optional<ElementSet> mod;
  if (!mod_spec.empty()) mod = resolve_subgroup(g, mod_spec);
  auto r = matrix_rank(spec, mod);
  out << "matrix " << spec.jcount << "x" << spec.icount << " over " << group_name;
  if (mod) out << " mod N(|N|=" << mod->size() << ")";
  out << "\n";
  out << "r_I = " << r.r_i << ", r_J = " << r.r_j << ", rank = " << r.rank << "\n";
  if (profile) {
    out << "golubov profile:\n";
    for (auto& [n, rk] : golubov_profile(spec)) {
      out << "  N = {";
      for (std::size_t i = 0; i < n.size(); ++i) out << (i ? " " : "") << g.name_of(n[i]);
      out << "}: rank " << rk << "\n";
    }
  }
  return 0;
}

int cmd_gallery(const std::string& name, std::uint32_t n, std::int64_t bound, bool check_compat,
                std::int64_t m_param, std::int64_t p, std::int64_t q, std::ostream& out) {
  bool ok = true;
  auto report_line = [&](bool pass, const std::string& what) {
    out << (pass ? "[ok]   " : "[FAIL] ") << what << "\n";
    ok = ok && pass;
  };

  if (name == "ab") {
    AbMonoid m;
    auto win = m.window(bound);
    out << "ab monoid: window(|i|,|j| <= " << bound << ") has " << win.size() << " elements\n";
    for (std::uint32_t k = 1; k <= n; ++k) {
      auto rep = ab_l_collapse(k);
      report_line(rep.pass, rep.name);
    }
    report_line(theta_multiplicative_on_window(theta_n(std::max(1u, n)), bound),
                "theta_n multiplicative on window");
    auto compat = verify_compat_ab_l(bound, bound);
    report_line(compat.pass, "L-partition right-compatible on window");
  } else if (name == "t_n") {
    FiniteMonoid tn = t_n(n);
    report_line(tn.size == 2 * n + 2, "|t_n(" + std::to_string(n) + ")| = " + std::to_string(tn.size) +
                                          " = 2n+2");
    report_line(theta_multiplicative_on_window(theta_n(n), bound), "theta_" + std::to_string(n) +
                                                                       " multiplicative on window");
  } else if (name == "ex13") {
    Ex13Monoid m;
    auto win = m.window(1, 2);
    bool assoc = true;
    for (auto& a : win)
      for (auto& b : win)
        for (auto& c : win)
          assoc = assoc && m.mul(m.mul(a, b), c) == m.mul(a, m.mul(b, c));
    report_line(assoc, "associativity on a " + std::to_string(win.size()) + "-element window");
    if (p > 0 && q > p) {
      auto rep = ex13_collapse(p, q);
      report_line(rep.pass, rep.name);
      for (auto& s : rep.steps) out << "    " << s.lhs << (s.holds ? "  ==  " : "  !=  ") << s.rhs << "\n";
    } else {
      for (std::int64_t pp = 1; pp <= 4; ++pp)
        for (std::int64_t qq = pp + 1; qq <= 4; ++qq) {
          auto rep = ex13_collapse(pp, qq);
          report_line(rep.pass, rep.name);
        }
    }
  } else if (name == "cm") {
    CmMonoid m;
    if (check_compat) {
      auto rel = cm_congruence("case2", m_param);
      auto rep = verify_compat(m, rel, std::int64_t(1) << (m_param + 2), std::int64_t(1) << m_param);
      std::ostringstream what;
      what << rel.name() << ": " << rep.pairs_checked << " pairs, " << rep.products_checked
           << " products, branch hits [" << rep.branch_hits[0] << "," << rep.branch_hits[1] << ","
           << rep.branch_hits[2] << "," << rep.branch_hits[3] << "]";
      report_line(rep.pass, what.str());
      for (auto& v : rep.violations) out << "    " << v << "\n";
    } else {
      for (std::int64_t i = -2; i <= 2; ++i)
        for (std::int64_t j = -2; j <= 2; ++j) {
          if (i == j) continue;
          auto rep = cm_de_collapse(i, j);
          report_line(rep.pass, rep.name);
        }
    }
  } else {
    raise(errc::invalid_parameter, "unknown gallery '" + name + "' (ab, t_n, ex13, cm)");
  }
  return ok ? 0 : 1;
}

int cmd_check(const std::string& suite, std::ostream& out) {
  std::vector<suites::SuiteResult> results;
  if (suite == "all") results = suites::run_acceptance();
  else results.push_back(suites::run_suite(suite));
  bool ok = true;
  for (auto& r : results) {
    char line[64];
    std::snprintf(line, sizeof line, " (%.2fs)", r.seconds);
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << line << ": " << r.detail << "\n";
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite monoid toolkit: Green's structure, Schutzenberger groups, separation"};
  app.name("monoidkit");
  std::uint64_t max_size = 0;
  app.add_option("--max-size", max_size, "element-count cap for constructions");

  // analyze
  std::string an_file;
  auto* analyze = app.add_subcommand("analyze", "Green's counts, regularity, maximal subgroups");
  analyze->add_option("file", an_file, "monoid table file")->required();

  // separate
  std::string sep_file, sep_x, sep_y;
  bool sep_largest = false;
  auto* sep = app.add_subcommand("separate", "separating congruence for two elements");
  sep->add_option("file", sep_file)->required();
  sep->add_option("x", sep_x, "element index or name")->required();
  sep->add_option("y", sep_y, "element index or name")->required();
  sep->add_flag("--largest-normal", sep_largest, "use the largest valid normal subgroup");

  // construct
  auto* construct = app.add_subcommand("construct", "emit a monoid table file");
  construct->require_subcommand(1);
  std::string out_path;
  construct->add_option("-o,--output", out_path, "output file (stdout when absent)");

  std::string rm_file, rm_group = "c2";
  bool rm_adjoin = false;
  auto* c_rees = construct->add_subcommand("rees-matrix", "Rees matrix semigroup from a matrix file");
  c_rees->add_option("matrix", rm_file)->required();
  c_rees->add_option("--group", rm_group, "structure group (trivial, c2..c9, klein, s3)");
  c_rees->add_flag("--adjoin-identity", rm_adjoin);

  std::string mg_group = "c2", mg_normal = "full";
  auto* c_mgn = construct->add_subcommand("mgn", "the M(G,N) monoid");
  c_mgn->add_option("--group", mg_group);
  c_mgn->add_option("--normal", mg_normal, "normal subgroup: trivial, full, or comma list");

  std::string pr_a, pr_b;
  auto* c_prod = construct->add_subcommand("product", "direct product of two table files");
  c_prod->add_option("a", pr_a)->required();
  c_prod->add_option("b", pr_b)->required();

  std::string aj_kind, aj_file;
  auto* c_adj = construct->add_subcommand("adjoin", "adjoin a fresh identity or zero");
  c_adj->add_option("kind", aj_kind, "identity or zero")->required();
  c_adj->add_option("file", aj_file)->required();

  // rank
  std::string rk_file, rk_group = "c2", rk_mod;
  bool rk_profile = false;
  auto* rank = app.add_subcommand("rank", "sandwich-matrix rank, optionally mod a normal subgroup");
  rank->add_option("matrix", rk_file)->required();
  rank->add_option("--group", rk_group);
  rank->add_option("--mod", rk_mod, "normal subgroup spec");
  rank->add_flag("--profile", rk_profile, "rank of P/N for every normal subgroup");

  // gallery
  std::string gl_name;
  std::uint32_t gl_n = 3;
  std::int64_t gl_bound = 3, gl_m = 1, gl_p = 0, gl_q = 0;
  bool gl_compat = false;
  auto* gallery = app.add_subcommand("gallery", "build and verify the stock infinite-monoid examples");
  gallery->add_option("name", gl_name, "ab, t_n, ex13, cm")->required();
  gallery->add_option("--n", gl_n);
  gallery->add_option("--bound", gl_bound);
  gallery->add_flag("--check-compat", gl_compat);
  gallery->add_option("--m", gl_m);
  gallery->add_option("--p", gl_p);
  gallery->add_option("--q", gl_q);

  // check
  std::string ck_suite;
  auto* check = app.add_subcommand("check", "run a verification suite (or 'all')");
  check->add_option("suite", ck_suite)->required();

  // export-dot
  std::string dot_file;
  auto* dot = app.add_subcommand("export-dot", "egg-box diagram as DOT text");
  dot->add_option("file", dot_file)->required();

  app.require_subcommand(1);

  std::vector<std::string> argv_store = args;
  std::vector<char*> argv;
  argv.push_back(const_cast<char*>("monoidkit"));
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  if (max_size > 0) set_element_cap(max_size);

  try {
    if (*analyze) return cmd_analyze(an_file, out);
    if (*sep) return cmd_separate(sep_file, sep_x, sep_y, sep_largest, out);
    if (*construct) {
      if (*c_rees) {
        ReesSpec spec = rees_spec_from_matrix(load_matrix_file(rm_file), group_by_name(rm_group));
        emit_result(rees_matrix(spec, rm_adjoin), out_path, out);
      } else if (*c_mgn) {
        FiniteMonoid g = group_by_name(mg_group);
        emit_result(mgn(g, resolve_subgroup(g, mg_normal)), out_path, out);
      } else if (*c_prod) {
        emit_result(direct_product(load_monoid_file(pr_a), load_monoid_file(pr_b)), out_path, out);
      } else if (*c_adj) {
        if (aj_kind != "identity" && aj_kind != "zero")
          raise(errc::invalid_parameter, "adjoin kind must be identity or zero");
        emit_result(adjoin(load_monoid_file(aj_file),
                           aj_kind == "identity" ? Adjoin::identity : Adjoin::zero),
                    out_path, out);
      }
      return 0;
    }
    if (*rank) return cmd_rank(rk_file, rk_group, rk_mod, rk_profile, out);
    if (*gallery) return cmd_gallery(gl_name, gl_n, gl_bound, gl_compat, gl_m, gl_p, gl_q, out);
    if (*check) return cmd_check(ck_suite, out);
    if (*dot) {
      out << export_eggbox_dot(load_monoid_file(dot_file));
      return 0;
    }
  } catch (const MonoidError& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == errc::parse_error || e.code() == errc::invalid_parameter ||
                   e.code() == errc::index_out_of_range
               ? 2
               : 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace monoidkit
