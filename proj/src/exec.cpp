#include "cylq/exec.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cylq {

namespace {

int threads_from_env() {
  const char *env = std::getenv("CYLQ_THREADS");
  if (env == nullptr) return 0;
  try {
    int n = std::stoi(env);
    return n < 0 ? 0 : n;
  } catch (...) {
    return 0;
  }
}

std::atomic<int> &budget() {
  static std::atomic<int> n{threads_from_env()};
  return n;
}

}  // namespace

int worker_threads() {
  int n = budget().load();
  if (n > 0) return n;
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_worker_threads(int n) { budget().store(n < 0 ? 0 : n); }

}  // namespace cylq
