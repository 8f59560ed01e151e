// Command-line surface: octonion arithmetic, representation printing,
// scalar and matrix equation solving, Hermitian eigen reports, and the
// seeded verification suites.
//
// Exit codes: 0 success, 2 parse/usage errors, 3 shape or degenerate-input
// errors, 4 unsolvable matrix equations.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "octo/format.hpp"
#include "octo/oeigen.hpp"
#include "octo/olinsolve.hpp"
#include "octo/omatrix.hpp"
#include "octo/verify.hpp"

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("OCTO_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw octo::format_error("OCTO_SEED must be an unsigned integer");
    }
  }
  return 0;
}

void print_scalar_solution(const octo::ScalarSolution& sol) {
  std::cout << "solvable: " << (sol.solvable ? "true" : "false") << "\n";
  if (sol.solvable)
    std::cout << "particular: " << octo::format_octonion(sol.particular) << "\n";
  for (size_t i = 0; i < sol.null_basis.size(); ++i)
    std::cout << "null_basis[" << i
              << "]: " << octo::format_octonion(sol.null_basis[i]) << "\n";
  std::cout << "residual: " << octo::fmt_real(sol.residual) << "\n";
  if (!sol.diagnostic.empty()) std::cerr << "diagnostic: " << sol.diagnostic << "\n";
}

int cmd_mul(const std::string& a_lit, const std::string& b_lit) {
  const octo::Octonion a = octo::parse_octonion(a_lit);
  const octo::Octonion b = octo::parse_octonion(b_lit);
  std::cout << octo::format_octonion(a * b) << "\n";
  return 0;
}

int cmd_rep(const std::string& kind, const std::string& a_lit) {
  const octo::Octonion a = octo::parse_octonion(a_lit);
  const octo::RealMatrix m =
      octo::rep(kind == "left" ? octo::RepKind::Left : octo::RepKind::Right, a);
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j)
      std::cout << (j ? " " : "") << octo::fmt_real(m(i, j));
    std::cout << "\n";
  }
  return 0;
}

int cmd_solve(const std::string& equation, const std::string& a_lit,
              const std::string& b_lit, const std::string& c_lit) {
  const octo::Octonion a = octo::parse_octonion(a_lit);
  const octo::Octonion b = octo::parse_octonion(b_lit);
  octo::ScalarSolution sol;
  if (equation == "sim") {
    sol = octo::solve_sim(a, b);
  } else if (equation == "commutator") {
    sol = octo::solve_commutator(a, b);
  } else if (equation == "conj") {
    sol = octo::solve_conj(a, b);
  } else {
    if (c_lit.empty())
      throw CLI::ValidationError("--c is required for sylvester and assoc");
    const octo::Octonion c = octo::parse_octonion(c_lit);
    sol = equation == "sylvester" ? octo::solve_sylvester(a, b, c)
                                  : octo::solve_assoc(a, b, c);
  }
  print_scalar_solution(sol);
  return 0;
}

int cmd_matsolve(const std::string& eq, const std::string& a_path,
                 const std::string& b_path, const std::string& rhs_path,
                 const std::string& out_path) {
  octo::MatrixEquation form;
  bool needs_b = false;
  if (eq == "AX=B") {
    form = octo::MatrixEquation::AX_B;
  } else if (eq == "XA=B") {
    form = octo::MatrixEquation::XA_B;
  } else if (eq == "AXB=C-left") {
    form = octo::MatrixEquation::AXB_C_left;
    needs_b = true;
  } else if (eq == "AXB=C-right") {
    form = octo::MatrixEquation::AXB_C_right;
    needs_b = true;
  } else if (eq == "AX-XB=C") {
    form = octo::MatrixEquation::AX_XB_C;
    needs_b = true;
  } else if (eq == "assoc") {
    form = octo::MatrixEquation::ABX_assoc;
  } else {
    throw CLI::ValidationError("unknown equation form: " + eq);
  }
  if (needs_b && b_path.empty())
    throw CLI::ValidationError("--b is required for " + eq);

  std::vector<octo::OctonionMatrix> coeffs;
  coeffs.push_back(octo::read_octonion_matrix_file(a_path));
  if (needs_b) coeffs.push_back(octo::read_octonion_matrix_file(b_path));
  const octo::OctonionMatrix rhs = octo::read_octonion_matrix_file(rhs_path);

  const octo::MatrixSolution sol = octo::solve_matrix_equation(form, coeffs, rhs);
  if (!sol.solvable) {
    std::cerr << "unsolvable: least-squares residual "
              << octo::fmt_real(sol.residual) << "\n";
    return 4;
  }
  octo::write_octonion_matrix_file(out_path, sol.particular);
  std::cout << "residual: " << octo::fmt_real(sol.residual) << "\n";
  std::cout << "null_space_dimension: " << sol.null_basis.size() << "\n";
  return 0;
}

int cmd_eig(const std::string& input, int census_m, int trials,
            std::uint64_t seed, int threads, double group_tol, bool as_json,
            bool as_csv) {
  if (census_m > 0) {
    const octo::CensusTable table =
        octo::multiplicity_census(census_m, trials, seed, threads);
    if (as_csv) {
      octo::write_census_csv(std::cout, table);
    } else {
      std::cout << "m: " << table.m << "\ntrials: " << table.trials
                << "\nseed: " << table.seed << "\n";
      for (const auto& [pattern, count] : table.frequency)
        std::cout << "pattern " << pattern << ": " << count << "/" << table.trials
                  << "\n";
      std::cout << "dominant: " << table.dominant << "\n";
      std::cout << "worst_residual: " << octo::fmt_real(table.worst_residual)
                << "\n";
    }
    return 0;
  }

  const octo::OctonionMatrix a = octo::read_octonion_matrix_file(input);
  const octo::EigenReport rep = octo::hermitian_eigen(a, group_tol);
  if (as_json) {
    std::cout << octo::eigen_report_json(rep) << "\n";
  } else if (as_csv) {
    std::cout << "m,groups,multiplicity_pattern,max_residual\n"
              << rep.m << ',' << rep.groups.size() << ','
              << octo::multiplicity_pattern(rep) << ','
              << octo::fmt_real(rep.max_residual) << "\n";
  } else {
    std::cout << "groups: " << rep.groups.size() << "\n";
    for (const auto& g : rep.groups)
      std::cout << "  " << octo::fmt_real(g.value) << " (x" << g.multiplicity
                << ")\n";
    std::cout << "max_residual: " << octo::fmt_real(rep.max_residual) << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite, int trials, std::uint64_t seed,
               int threads, double tol) {
  const octo::VerifySuiteResult res =
      octo::run_suite(suite, trials, seed, threads, tol);
  std::cout << "suite: " << res.suite << "\ntrials: " << res.trials
            << "\nseed: " << res.seed << "\n";
  for (const auto& c : res.checks)
    std::cout << "check " << c.name << ": failures " << c.failures << " worst "
              << octo::fmt_real(c.worst) << "\n";
  for (const auto& note : res.notes) std::cout << note << "\n";
  std::cout << "failures: " << res.failures() << "\n";
  std::cout << "worst_residual: " << octo::fmt_real(res.worst_residual()) << "\n";
  return res.failures() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pseudo real matrix representations of octonions: arithmetic, "
               "linear equation solvers, spectra, verification suites"};
  app.require_subcommand(1);

  std::string a_lit, b_lit, c_lit, kind, equation, eqform;
  std::string a_path, b_path, rhs_path, out_path, input_path, suite;
  int trials = 100, threads = 0, census_m = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;
  double tol = 0.0, group_tol = 0.0;
  bool as_json = false, as_csv = false;

  CLI::App* mul = app.add_subcommand("mul", "multiply two octonion literals");
  mul->add_option("--a", a_lit, "left factor: 8 comma-separated reals")->required();
  mul->add_option("--b", b_lit, "right factor")->required();

  CLI::App* repc = app.add_subcommand("rep", "print a matrix representation");
  repc->add_option("--kind", kind, "left or right")
      ->required()
      ->check(CLI::IsMember({"left", "right"}));
  repc->add_option("--a", a_lit, "octonion literal")->required();

  CLI::App* solve = app.add_subcommand("solve", "solve a scalar linear equation");
  solve->add_option("equation", equation, "sim|commutator|conj|sylvester|assoc")
      ->required()
      ->check(CLI::IsMember({"sim", "commutator", "conj", "sylvester", "assoc"}));
  solve->add_option("--a", a_lit, "coefficient a")->required();
  solve->add_option("--b", b_lit, "coefficient or right-hand side b")->required();
  solve->add_option("--c", c_lit, "right-hand side for sylvester/assoc");

  CLI::App* mats = app.add_subcommand("matsolve", "solve a linear matrix equation");
  mats->add_option("--eq", eqform,
                   "AX=B|XA=B|AXB=C-left|AXB=C-right|AX-XB=C|assoc")
      ->required();
  mats->add_option("--a", a_path, "coefficient matrix file")->required();
  mats->add_option("--b", b_path, "second coefficient matrix file");
  mats->add_option("--rhs", rhs_path, "right-hand side matrix file")->required();
  mats->add_option("--out", out_path, "solution output file")->required();

  CLI::App* eig = app.add_subcommand("eig", "Hermitian eigen report or census");
  eig->add_option("--input", input_path, "Hermitian octonion matrix file");
  eig->add_option("--census", census_m, "census dimension m (2..6)");
  eig->add_option("--trials", trials, "census trials");
  eig->add_option("--seed", seed, "census seed")->each([&](const std::string&) {
    seed_given = true;
  });
  eig->add_option("--threads", threads, "worker threads (0 = auto)");
  eig->add_option("--group-tol", group_tol, "eigenvalue grouping threshold");
  eig->add_flag("--json", as_json, "emit the report as JSON");
  eig->add_flag("--csv", as_csv, "emit CSV");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "suite name or 'all'")
      ->required()
      ->check(CLI::IsMember(octo::suite_names()));
  verify->add_option("--trials", trials, "number of seeded trials");
  verify->add_option("--seed", seed, "base seed")->each([&](const std::string&) {
    seed_given = true;
  });
  verify->add_option("--threads", threads, "worker threads (0 = auto, 1 = serial)");
  verify->add_option("--tol", tol, "override every check tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (!seed_given) seed = default_seed();
    if (mul->parsed()) return cmd_mul(a_lit, b_lit);
    if (repc->parsed()) return cmd_rep(kind, a_lit);
    if (solve->parsed()) return cmd_solve(equation, a_lit, b_lit, c_lit);
    if (mats->parsed()) return cmd_matsolve(eqform, a_path, b_path, rhs_path, out_path);
    if (eig->parsed()) {
      if (input_path.empty() && census_m == 0)
        throw CLI::ValidationError("eig needs --input or --census");
      return cmd_eig(input_path, census_m, trials, seed, threads, group_tol,
                     as_json, as_csv);
    }
    if (verify->parsed()) return cmd_verify(suite, trials, seed, threads, tol);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const octo::format_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
