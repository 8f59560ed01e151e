#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "octo/omatrix.hpp"

namespace octo {

struct EigenGroup {
  double value = 0.0;  // group mean
  int multiplicity = 0;
};

struct EigenReport {
  int m = 0;
  std::vector<double> eigenvalues;          // ascending, 8m of them
  std::vector<EigenGroup> groups;           // ascending representatives
  std::vector<OctonionMatrix> eigenvectors; // 8m octonion columns of length m
  double max_residual = 0.0;                // max over pairs of ||A y - lambda y||
};

// Default clustering threshold: max(1e-7, 1e-9 * (lambda_max - lambda_min)).
double default_group_tol(double lambda_min, double lambda_max);

// Real eigenvalues and octonion eigenvectors of a Hermitian matrix, computed
// from the symmetric real left adjoint. group_tol == 0 picks the default.
// Throws std::invalid_argument when the input is not Hermitian.
EigenReport hermitian_eigen(const OctonionMatrix& a, double group_tol = 0.0);

std::string multiplicity_pattern(const EigenReport& report);

struct CensusRow {
  int m = 0;
  int trial = 0;
  int groups = 0;
  std::string pattern;
  double max_residual = 0.0;
};

struct CensusTable {
  int m = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<CensusRow> rows;                 // in trial order
  std::map<std::string, int> frequency;        // pattern -> count
  std::string dominant;                        // most frequent pattern
  double worst_residual = 0.0;
};

// Random Hermitian sample: real diagonal uniform in [-1,1], strict upper
// entries uniform octonions with components in [-1,1], lower mirror
// conjugated.
OctonionMatrix random_hermitian(Rng& rng, int m);

// Tallies eigenvalue (group count, multiplicity) patterns over seeded random
// Hermitian matrices. Trials run independently (optionally in parallel) on
// per-trial substreams; the table is identical for a given seed regardless of
// the thread count.
CensusTable multiplicity_census(int m, int trials, std::uint64_t seed,
                                int threads = 0);

std::string eigen_report_json(const EigenReport& report);
void write_census_csv(std::ostream& out, const CensusTable& table);

}  // namespace octo
