#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

#include <utility>

namespace octo {

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Runs fn(t) for t in [0, trials). threads == 1 is the serial reference path;
// threads == 0 picks the OpenMP default. fn must not throw and must write only
// to per-trial state; the caller merges results in trial order afterwards, so
// output never depends on the schedule.
template <class Fn>
void for_each_trial(int trials, int threads, Fn&& fn) {
  if (threads == 0) threads = hardware_threads();
  if (threads <= 1) {
    for (int t = 0; t < trials; ++t) fn(t);
    return;
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(threads)
  for (int t = 0; t < trials; ++t) fn(t);
#else
  for (int t = 0; t < trials; ++t) fn(t);
#endif
}

}  // namespace octo
