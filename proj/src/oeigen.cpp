#include "octo/oeigen.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "octo/format.hpp"
#include "octo/parallel.hpp"

namespace octo {

double default_group_tol(double lambda_min, double lambda_max) {
  return std::max(1e-7, 1e-9 * (lambda_max - lambda_min));
}

EigenReport hermitian_eigen(const OctonionMatrix& a, double group_tol) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("hermitian_eigen needs a square matrix");
  const double scale = std::max(1.0, max_entry_norm(a));
  if (!is_hermitian(a, 1e-12 * scale))
    throw std::invalid_argument("matrix is not Hermitian");

  const int m = a.rows();
  const SymEigen se = sym_eigen(left_adjoint(a));

  EigenReport rep;
  rep.m = m;
  rep.eigenvalues.resize(static_cast<size_t>(8 * m));
  for (int i = 0; i < 8 * m; ++i) rep.eigenvalues[static_cast<size_t>(i)] = se.values[i];

  rep.max_residual = 0.0;
  for (int j = 0; j < 8 * m; ++j) {
    const OctonionMatrix y = unvec(se.vectors.col(j), m, 1);
    rep.eigenvectors.push_back(y);
    const OctonionMatrix lhs = mul(a, y);
    const OctonionMatrix rhs = se.values[j] * y;
    rep.max_residual = std::max(rep.max_residual, max_entry_dist(lhs, rhs));
  }

  if (group_tol <= 0.0)
    group_tol = default_group_tol(rep.eigenvalues.front(), rep.eigenvalues.back());
  double sum = rep.eigenvalues[0];
  int count = 1;
  for (size_t i = 1; i <= rep.eigenvalues.size(); ++i) {
    if (i < rep.eigenvalues.size() &&
        rep.eigenvalues[i] - rep.eigenvalues[i - 1] <= group_tol) {
      sum += rep.eigenvalues[i];
      ++count;
      continue;
    }
    rep.groups.push_back({sum / count, count});
    if (i < rep.eigenvalues.size()) {
      sum = rep.eigenvalues[i];
      count = 1;
    }
  }
  return rep;
}

std::string multiplicity_pattern(const EigenReport& report) {
  std::vector<int> mults;
  for (const auto& g : report.groups) mults.push_back(g.multiplicity);
  const bool uniform =
      std::all_of(mults.begin(), mults.end(), [&](int v) { return v == mults[0]; });
  if (uniform)
    return std::to_string(mults.size()) + "x" + std::to_string(mults[0]);
  std::sort(mults.rbegin(), mults.rend());
  std::string out;
  for (size_t i = 0; i < mults.size(); ++i) {
    if (i) out += '+';
    out += std::to_string(mults[i]);
  }
  return out;
}

OctonionMatrix random_hermitian(Rng& rng, int m) {
  OctonionMatrix a(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      if (i == j) {
        a.at(i, i) = Octonion::scalar(rng.uniform(-1, 1));
      } else {
        const Octonion x = random_octonion(rng);
        a.at(i, j) = x;
        a.at(j, i) = conj(x);
      }
    }
  }
  return a;
}

CensusTable multiplicity_census(int m, int trials, std::uint64_t seed, int threads) {
  if (m < 2 || m > 6) throw std::invalid_argument("census supports m in 2..6");
  if (trials < 1) throw std::invalid_argument("census needs at least one trial");

  CensusTable table;
  table.m = m;
  table.trials = trials;
  table.seed = seed;
  table.rows.resize(static_cast<size_t>(trials));

  for_each_trial(trials, threads, [&](int t) {
    Rng rng = substream(seed, static_cast<std::uint64_t>(t));
    const OctonionMatrix a = random_hermitian(rng, m);
    const EigenReport rep = hermitian_eigen(a);
    CensusRow& row = table.rows[static_cast<size_t>(t)];
    row.m = m;
    row.trial = t;
    row.groups = static_cast<int>(rep.groups.size());
    row.pattern = multiplicity_pattern(rep);
    row.max_residual = rep.max_residual;
  });

  for (const auto& row : table.rows) {
    ++table.frequency[row.pattern];
    table.worst_residual = std::max(table.worst_residual, row.max_residual);
  }
  int best = 0;
  for (const auto& [pattern, count] : table.frequency) {
    if (count > best) {  // map iterates patterns in ascending order, so ties
      best = count;      // resolve to the lexicographically smallest pattern
      table.dominant = pattern;
    }
  }
  return table;
}

std::string eigen_report_json(const EigenReport& report) {
  std::string out = "{\"m\": " + std::to_string(report.m) + ", \"eigenvalues\": [";
  for (size_t i = 0; i < report.eigenvalues.size(); ++i)
    out += (i ? "," : "") + fmt_real(report.eigenvalues[i]);
  out += "], \"groups\": [";
  for (size_t i = 0; i < report.groups.size(); ++i) {
    out += (i ? "," : "");
    out += "{\"value\": " + fmt_real(report.groups[i].value) +
           ", \"multiplicity\": " + std::to_string(report.groups[i].multiplicity) + "}";
  }
  out += "], \"eigenvectors\": [";
  for (size_t j = 0; j < report.eigenvectors.size(); ++j) {
    out += (j ? "," : "") + std::string("[");
    const OctonionMatrix& y = report.eigenvectors[j];
    for (int i = 0; i < y.rows(); ++i) {
      out += (i ? ",[" : "[");
      for (int k = 0; k < 8; ++k)
        out += (k ? "," : "") + fmt_real(y.at(i, 0).c[static_cast<size_t>(k)]);
      out += "]";
    }
    out += "]";
  }
  out += "], \"max_residual\": " + fmt_real(report.max_residual) + "}";
  return out;
}

void write_census_csv(std::ostream& out, const CensusTable& table) {
  out << "m,trial,groups,multiplicity_pattern,max_residual\n";
  for (const auto& row : table.rows)
    out << row.m << ',' << row.trial << ',' << row.groups << ',' << row.pattern << ','
        << fmt_real(row.max_residual) << '\n';
}

}  // namespace octo
