// Compares the serial reference path (1 thread) against the OpenMP path on
// the trial-parallel workloads, and checks that both produce identical
// results. Usage: bench_verify [trials] [census_trials]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "octo/oeigen.hpp"
#include "octo/parallel.hpp"
#include "octo/verify.hpp"

using namespace octo;

namespace {

template <class Fn>
double timed(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

bool same_results(const VerifySuiteResult& a, const VerifySuiteResult& b) {
  if (a.checks.size() != b.checks.size()) return false;
  for (size_t i = 0; i < a.checks.size(); ++i)
    if (a.checks[i].failures != b.checks[i].failures ||
        a.checks[i].worst != b.checks[i].worst)
      return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const int trials = argc > 1 ? std::atoi(argv[1]) : 20000;
  const int census_trials = argc > 2 ? std::atoi(argv[2]) : 100;
  const std::uint64_t seed = 42;
  const int threads = hardware_threads();
  bool all_match = true;

  std::printf("%-18s %10s %12s %12s %9s %7s\n", "workload", "trials", "serial_s",
              "parallel_s", "speedup", "match");

  const std::vector<std::string> suites = {"octonion-laws", "rep-identities",
                                           "vec-calculus", "scalar-solvers"};
  for (const auto& name : suites) {
    VerifySuiteResult serial_res, parallel_res;
    const double ts = timed([&] { serial_res = run_suite(name, trials, seed, 1); });
    const double tp =
        timed([&] { parallel_res = run_suite(name, trials, seed, threads); });
    const bool match = same_results(serial_res, parallel_res);
    all_match = all_match && match;
    std::printf("%-18s %10d %12.3f %12.3f %8.2fx %7s\n", name.c_str(), trials, ts,
                tp, ts / tp, match ? "yes" : "NO");
  }

  {
    CensusTable serial_t, parallel_t;
    const double ts =
        timed([&] { serial_t = multiplicity_census(4, census_trials, seed, 1); });
    const double tp = timed(
        [&] { parallel_t = multiplicity_census(4, census_trials, seed, threads); });
    bool match = serial_t.dominant == parallel_t.dominant &&
                 serial_t.rows.size() == parallel_t.rows.size();
    if (match)
      for (size_t i = 0; i < serial_t.rows.size(); ++i)
        match = match && serial_t.rows[i].pattern == parallel_t.rows[i].pattern &&
                serial_t.rows[i].max_residual == parallel_t.rows[i].max_residual;
    all_match = all_match && match;
    std::printf("%-18s %10d %12.3f %12.3f %8.2fx %7s\n", "census-4x4",
                census_trials, ts, tp, ts / tp, match ? "yes" : "NO");
  }

  std::printf("threads: %d\n", threads);
  if (!all_match) {
    std::printf("serial and parallel results differ\n");
    return 1;
  }
  return 0;
}
