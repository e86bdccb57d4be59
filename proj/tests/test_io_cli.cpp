#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "monoidkit/cli.hpp"
#include "monoidkit/constructions.hpp"
#include "monoidkit/effective.hpp"
#include "monoidkit/fixtures.hpp"
#include "monoidkit/io.hpp"

using namespace monoidkit;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("monoidkit_test_" + name);
}

struct CliRun {
  int code;
  std::string out, err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("io_cli") {
  TEST_CASE("table text round trip is byte identical") {
    for (auto& m : {t2(), sym3(), mgn(cyclic_group(2), {0, 1})}) {
      auto text = emit_monoid_text(m);
      auto back = parse_monoid_text(text);
      CHECK(back.table == m.table);
      CHECK(back.identity == m.identity);
      CHECK(back.generators == m.generators);
      CHECK(emit_monoid_text(back) == text);
    }
  }

  TEST_CASE("parser tolerates comments and blank lines") {
    auto m = parse_monoid_text(
        "# cyclic group of order 2\nmonoid v1\n\nsize 2   # two elements\nidentity 0\n"
        "generators 1\ntable\n0 1\n1 0\n");
    CHECK(m.size == 2);
    CHECK(m.at(1, 1) == 0);
  }

  TEST_CASE("parser reports missing sections and bad tables") {
    CHECK_THROWS_AS((void)parse_monoid_text("monoid v1\nsize 2\ngenerators 1\ntable\n0 1\n1 0\n"),
                    MonoidError);  // identity line missing
    try {
      (void)parse_monoid_text("monoid v1\nsize 3\nidentity 0\ngenerators 1 2\ntable\n0 1 2\n1 2 2\n2 2 1\n");
      CHECK(false);
    } catch (const MonoidError& e) {
      CHECK(e.code() == errc::associativity_violation);
    }
    try {
      (void)parse_monoid_text("nonsense\n");
      CHECK(false);
    } catch (const MonoidError& e) {
      CHECK(e.code() == errc::parse_error);
    }
  }

  TEST_CASE("matrix file round trip and binding") {
    MatrixFile f;
    f.icount = 2;
    f.jcount = 2;
    f.entries = {"a", "e", "e", "e"};
    auto text = emit_matrix_text(f);
    auto back = parse_matrix_text(text);
    CHECK(back.entries == f.entries);
    auto spec = rees_spec_from_matrix(back, cyclic_group(2));
    CHECK(spec.entries == std::vector<element>{1, 0, 0, 0});
    f.entries[0] = "bogus";
    CHECK_THROWS_AS((void)rees_spec_from_matrix(f, cyclic_group(2)), MonoidError);
  }

  TEST_CASE("egg-box DOT output is deterministic and marks group H-classes") {
    auto dot = export_eggbox_dot(t2());
    CHECK(dot == export_eggbox_dot(t2()));
    CHECK(dot.find("2★") != std::string::npos);      // starred unit H-class
    CHECK(dot.find("1★") != std::string::npos);      // starred constants
    CHECK(dot.find("cluster_d1") != std::string::npos);   // two D-classes
    CHECK(dot.find("cluster_d2") == std::string::npos);

    auto group_dot = export_eggbox_dot(sym3());
    CHECK(group_dot.find("cluster_d0") != std::string::npos);
    CHECK(group_dot.find("cluster_d1") == std::string::npos);

    auto m = mgn(cyclic_group(2), {0, 1});
    auto mdot = export_eggbox_dot(m);
    CHECK(mdot.find("cluster_d4") != std::string::npos);  // five D-classes
    CHECK(mdot.find("2 Γ2") != std::string::npos);   // unstarred D with Gamma order 2
  }

  TEST_CASE("cli analyze prints the Green counts of the T2 fixture") {
    auto path = temp_file("t2.mon");
    save_monoid_file(t2(), path.string());
    auto r = cli({"analyze", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("R-classes: 2, L-classes: 3, H-classes: 3") != std::string::npos);
    CHECK(r.out.find("regular: yes") != std::string::npos);
    std::filesystem::remove(path);
  }

  TEST_CASE("cli separate reports the same-H route with blocks") {
    auto path = temp_file("t2_sep.mon");
    save_monoid_file(t2(), path.string());
    auto r = cli({"separate", path.string(), "0", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("route same-H") != std::string::npos);
    CHECK(r.out.find("blocks:") != std::string::npos);
    auto by_name = cli({"separate", path.string(), "c1", "c2"});
    CHECK(by_name.code == 0);
    CHECK(by_name.out.find("route not-L") != std::string::npos);
    std::filesystem::remove(path);
  }

  TEST_CASE("construct output reloads isomorphic to the in-memory result") {
    auto matrix_path = temp_file("diag_3.mat");
    {
      std::ofstream f(matrix_path);
      f << "rees 3 3\na e e\ne a e\ne e a\n";
    }
    auto out_path = temp_file("rees.mon");
    auto r = cli({"construct", "-o", out_path.string(), "rees-matrix", matrix_path.string(),
                  "--adjoin-identity"});
    REQUIRE(r.code == 0);
    auto reloaded = load_monoid_file(out_path.string());
    REQUIRE(monoid_iso(reloaded, rees_matrix(diagonal_matrix(3), true)).has_value());

    auto mg = cli({"construct", "mgn", "--group", "c4", "--normal", "e,a2"});
    REQUIRE(mg.code == 0);
    auto parsed = parse_monoid_text(mg.out);
    REQUIRE(monoid_iso(parsed, mgn(cyclic_group(4), {0, 2})).has_value());

    auto t2_path = temp_file("t2_prod.mon");
    save_monoid_file(t2(), t2_path.string());
    auto pr = cli({"construct", "product", t2_path.string(), t2_path.string()});
    REQUIRE(pr.code == 0);
    REQUIRE(monoid_iso(parse_monoid_text(pr.out), direct_product(t2(), t2())).has_value());

    auto aj = cli({"construct", "adjoin", "zero", t2_path.string()});
    REQUIRE(aj.code == 0);
    CHECK(parse_monoid_text(aj.out).size == 5);

    std::filesystem::remove(matrix_path);
    std::filesystem::remove(out_path);
    std::filesystem::remove(t2_path);
  }

  TEST_CASE("cli rank matches the library") {
    auto matrix_path = temp_file("rank.mat");
    {
      std::ofstream f(matrix_path);
      f << "rees 2 2\na e\ne e\n";
    }
    auto r = cli({"rank", matrix_path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("rank = 2") != std::string::npos);
    auto rm = cli({"rank", matrix_path.string(), "--mod", "full"});
    CHECK(rm.out.find("rank = 1") != std::string::npos);
    std::filesystem::remove(matrix_path);
  }

  TEST_CASE("cli gallery and check exit codes") {
    CHECK(cli({"gallery", "cm", "--check-compat", "--m", "1"}).code == 0);
    CHECK(cli({"gallery", "cm"}).code == 0);
    CHECK(cli({"gallery", "t_n", "--n", "4"}).code == 0);
    CHECK(cli({"gallery", "ab", "--n", "2", "--bound", "2"}).code == 0);
    CHECK(cli({"gallery", "ex13", "--p", "1", "--q", "3"}).code == 0);
    CHECK(cli({"gallery", "unknown"}).code == 2);
    CHECK(cli({"check", "negative"}).code == 1);
    CHECK(cli({"check", "tau"}).code == 0);
    CHECK(cli({"check", "bogus-suite"}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"analyze", "/nonexistent/file.mon"}).code == 2);
  }

  TEST_CASE("cli export-dot") {
    auto path = temp_file("t2_dot.mon");
    save_monoid_file(t2(), path.string());
    auto r = cli({"export-dot", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("digraph eggbox") != std::string::npos);
    std::filesystem::remove(path);
  }

  TEST_CASE("cli max-size cap") {
    auto path = temp_file("t3.mon");
    save_monoid_file(full_transformations(3), path.string());
    auto r = cli({"--max-size", "100", "construct", "product", path.string(), path.string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("SizeOverflow") != std::string::npos);
    set_element_cap(100000);  // restore the global default
    std::filesystem::remove(path);
  }
}
