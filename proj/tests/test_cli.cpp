// Drives the installed binary end to end: output formats, exit codes,
// determinism, file round-trips.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "octo/format.hpp"
#include "octo/octonion.hpp"
#include "octo/omatrix.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(OCTO_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("octo_cli_test_" + name);
}

}  // namespace

TEST_CASE("mul prints the product literal") {
  const RunResult r = run("mul --a 0,1,0,0,0,0,0,0 --b 0,0,1,0,0,0,0,0");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "0.0000000000000000,0.0000000000000000,0.0000000000000000,"
        "1.0000000000000000,0.0000000000000000,0.0000000000000000,"
        "0.0000000000000000,0.0000000000000000\n");

  // identity on the left returns the right factor
  const RunResult id = run("mul --a 1,0,0,0,0,0,0,0 --b 0.5,0,-1,0,2,0,0,0.25");
  CHECK(id.exit_code == 0);
  CHECK(octo::norm(octo::parse_octonion(id.out.substr(0, id.out.size() - 1)) -
                   octo::Octonion{{0.5, 0, -1, 0, 2, 0, 0, 0.25}}) == 0.0);

  CHECK(run("mul --a 0,1 --b 0,0,1,0,0,0,0,0").exit_code == 2);
  CHECK(run("mul --a 0,1,0,0,0,0,0,0").exit_code == 2);  // missing flag
}

TEST_CASE("rep prints an 8x8 matrix") {
  const RunResult r = run("rep --kind left --a 1,0,0,0,0,0,0,0");
  CHECK(r.exit_code == 0);
  std::stringstream ss(r.out);
  std::string line;
  int rows = 0;
  while (std::getline(ss, line)) {
    std::stringstream fields(line);
    std::string f;
    int cols = 0;
    while (fields >> f) {
      const double v = octo::parse_real(f);
      CHECK(v == (cols == rows ? 1.0 : 0.0));
      ++cols;
    }
    CHECK(cols == 8);
    ++rows;
  }
  CHECK(rows == 8);

  // right representation of the conjugate is the transpose of the original
  const RunResult ra = run("rep --kind right --a 0.5,1,-2,0.25,3,0,-1,0.75");
  const RunResult rc = run("rep --kind right --a 0.5,-1,2,-0.25,-3,0,1,-0.75");
  REQUIRE(ra.exit_code == 0);
  REQUIRE(rc.exit_code == 0);
  double a[8][8], c[8][8];
  {
    std::stringstream sa(ra.out), sc(rc.out);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        sa >> a[i][j];
        sc >> c[i][j];
      }
  }
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) CHECK(c[i][j] == a[j][i]);
}

TEST_CASE("solve subcommand") {
  const RunResult sim = run("solve sim --a 0,1,0,0,0,0,0,0 --b 0,0,1,0,0,0,0,0");
  CHECK(sim.exit_code == 0);
  CHECK(sim.out.find("solvable: true") != std::string::npos);
  CHECK(sim.out.find("null_basis[1]") != std::string::npos);
  CHECK(sim.out.find("null_basis[2]") == std::string::npos);

  const RunResult conj = run("solve conj --a 0,1,0,0,0,0,0,0 --b 0,0,1,0,0,0,0,0");
  CHECK(conj.exit_code == 0);
  CHECK(conj.out.find("solvable: false") != std::string::npos);

  const RunResult syl = run(
      "solve sylvester --a 0,1,0,0,0,0,0,0 --b 0,0,2,0,0,0,0,0 --c 0,0,0,0,0,0,0,0");
  CHECK(syl.exit_code == 0);
  CHECK(syl.out.find("solvable: true") != std::string::npos);
  CHECK(syl.out.find("particular: 0.0000000000000000,0.0000000000000000,"
                     "0.0000000000000000,0.0000000000000000,0.0000000000000000,"
                     "0.0000000000000000,0.0000000000000000,0.0000000000000000") !=
        std::string::npos);

  // degenerate input: real coefficient
  CHECK(run("solve commutator --a 2,0,0,0,0,0,0,0 --b 0,1,0,0,0,0,0,0").exit_code == 3);
  // parse failure
  CHECK(run("solve sim --a bogus --b 0,0,1,0,0,0,0,0").exit_code == 2);
  // missing required right-hand side
  CHECK(run("solve sylvester --a 0,1,0,0,0,0,0,0 --b 0,0,1,0,0,0,0,0").exit_code == 2);
}

TEST_CASE("matsolve round-trips through files") {
  octo::Rng rng(91);
  const octo::OctonionMatrix A = octo::random_octonion_matrix(rng, 2, 2);
  const octo::OctonionMatrix X = octo::random_octonion_matrix(rng, 2, 2);
  const octo::OctonionMatrix B = octo::mul(A, X);

  const auto a_path = temp_file("a.json"), b_path = temp_file("b.json"),
             out_path = temp_file("x.json");
  octo::write_octonion_matrix_file(a_path.string(), A);
  octo::write_octonion_matrix_file(b_path.string(), B);

  const RunResult r = run("matsolve --eq AX=B --a " + a_path.string() + " --rhs " +
                          b_path.string() + " --out " + out_path.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("residual:") != std::string::npos);
  CHECK(r.out.find("null_space_dimension: 0") != std::string::npos);
  const octo::OctonionMatrix got = octo::read_octonion_matrix_file(out_path.string());
  CHECK(octo::max_entry_dist(got, X) <= 1e-8);

  // X A = B with A = I returns B itself
  const auto i_path = temp_file("i.json");
  octo::write_octonion_matrix_file(i_path.string(), octo::OctonionMatrix::identity(2));
  const RunResult rx = run("matsolve --eq XA=B --a " + i_path.string() + " --rhs " +
                           b_path.string() + " --out " + out_path.string());
  CHECK(rx.exit_code == 0);
  CHECK(octo::max_entry_dist(octo::read_octonion_matrix_file(out_path.string()), B) <=
        1e-9);

  // unsolvable scalar commutator: exit 4
  const auto e1_path = temp_file("e1.json");
  octo::OctonionMatrix e1m(1, 1);
  e1m.at(0, 0) = octo::Octonion::unit(1);
  octo::write_octonion_matrix_file(e1_path.string(), e1m);
  const auto one_path = temp_file("one.json");
  octo::write_octonion_matrix_file(one_path.string(), octo::OctonionMatrix::identity(1));
  const RunResult bad =
      run("matsolve --eq AX-XB=C --a " + e1_path.string() + " --b " + e1_path.string() +
          " --rhs " + one_path.string() + " --out " + out_path.string());
  CHECK(bad.exit_code == 4);

  // shape mismatch: exit 3
  const auto wide_path = temp_file("wide.json");
  octo::write_octonion_matrix_file(wide_path.string(),
                                   octo::random_octonion_matrix(rng, 2, 3));
  const RunResult shape = run("matsolve --eq AX=B --a " + a_path.string() + " --rhs " +
                              wide_path.string() + " --out " + out_path.string());
  CHECK(shape.exit_code == 0);  // 2x3 rhs conforms for AX=B with 2x2 A
  const RunResult shape2 = run("matsolve --eq AX=B --a " + wide_path.string() +
                               " --rhs " + a_path.string() + " --out " +
                               out_path.string());
  CHECK(shape2.exit_code == 0);

  const auto tall_path = temp_file("tall.json");
  octo::write_octonion_matrix_file(tall_path.string(),
                                   octo::random_octonion_matrix(rng, 3, 2));
  const RunResult shape3 = run("matsolve --eq assoc --a " + a_path.string() +
                               " --rhs " + tall_path.string() + " --out " +
                               out_path.string());
  CHECK(shape3.exit_code == 3);

  // parse failure: exit 2
  const auto junk_path = temp_file("junk.json");
  std::ofstream(junk_path) << "{broken";
  const RunResult parse = run("matsolve --eq AX=B --a " + junk_path.string() +
                              " --rhs " + b_path.string() + " --out " +
                              out_path.string());
  CHECK(parse.exit_code == 2);
}

TEST_CASE("eig subcommand") {
  const auto path = temp_file("herm.json");
  octo::OctonionMatrix a(2, 2);
  a.at(0, 1) = a.at(1, 0) = octo::Octonion::scalar(1.0);
  octo::write_octonion_matrix_file(path.string(), a);

  const RunResult r = run("eig --input " + path.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("groups: 2") != std::string::npos);
  CHECK(r.out.find("(x8)") != std::string::npos);
  CHECK(r.out.find("max_residual:") != std::string::npos);

  const RunResult rj = run("eig --input " + path.string() + " --json");
  CHECK(rj.exit_code == 0);
  CHECK(rj.out.find("\"eigenvalues\"") != std::string::npos);

  const RunResult rc = run("eig --census 2 --trials 5 --seed 3 --csv");
  CHECK(rc.exit_code == 0);
  CHECK(rc.out.rfind("m,trial,groups,multiplicity_pattern,max_residual", 0) == 0);

  // non-Hermitian input: exit 3
  octo::Rng rng(93);
  octo::OctonionMatrix bad = octo::random_octonion_matrix(rng, 2, 2);
  const auto bad_path = temp_file("nonherm.json");
  octo::write_octonion_matrix_file(bad_path.string(), bad);
  CHECK(run("eig --input " + bad_path.string()).exit_code == 3);
}

TEST_CASE("verify subcommand contract") {
  const RunResult smoke = run("verify --suite octonion-laws --trials 1 --seed 0");
  CHECK(smoke.exit_code == 0);
  CHECK(smoke.out.find("failures: 0") != std::string::npos);
  CHECK(smoke.out.find("worst_residual:") != std::string::npos);

  CHECK(run("verify --suite no-such-suite --trials 1").exit_code == 2);

  // byte-identical output for identical command lines, and across threads
  const std::string cmd = "verify --suite rep-identities --trials 200 --seed 42";
  const RunResult a = run(cmd);
  const RunResult b = run(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  const RunResult serial = run(cmd + " --threads 1");
  CHECK(serial.out == a.out);
  CHECK(serial.out.find("failures: 0") != std::string::npos);

  // OCTO_SEED picks the default seed
  const RunResult env =
      run("verify --suite octonion-laws --trials 1");  // default 0
  CHECK(env.out.find("seed: 0") != std::string::npos);
}

TEST_CASE("environment seed override") {
  const std::string cmd = std::string("OCTO_SEED=7 ") + OCTO_CLI_PATH +
                          " verify --suite octonion-laws --trials 1 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  CHECK(out.find("seed: 7") != std::string::npos);
}
