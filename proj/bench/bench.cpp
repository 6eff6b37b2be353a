// Serial reference kernels against their OpenMP counterparts.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include "cylq/cylinder.hpp"
#include "cylq/identities.hpp"
#include "cylq/series.hpp"

using namespace cylq;

namespace {

double seconds(const std::function<void()> &f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void row(const char *name, const std::function<void(Exec)> &f, int reps) {
  const double s = seconds([&] { f(Exec::serial); }, reps);
  const double p = seconds([&] { f(Exec::parallel); }, reps);
  std::printf("%-28s serial %9.4fs  parallel %9.4fs  speedup %5.2fx\n", name, s, p, s / p);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", worker_threads());

  // Small random coefficients keep the product far from int64 limits.
  std::mt19937 rng(7);
  Series a(200, 200);
  for (int n = 0; n <= 200; ++n)
    for (int m = 0; m <= 200; ++m) a.add_to(n, m, static_cast<Coeff>(rng() % 19) - 9);
  row("series_mul 200x200", [&](Exec e) { volatile auto r = series_mul(a, a, e).at(5, 5); (void)r; }, 3);

  row("enumerate_cylindric (2,2) 26", [](Exec e) { (void)enumerate_cylindric(Profile({2, 2}), 26, e); }, 1);
  row("enumerate_tight (1,1,1) 20", [](Exec e) { (void)enumerate_tight(Profile({1, 1, 1}), 20, e); }, 1);

  const Caps caps{30, 30};
  row("eval_S l=4 caps 30", [&](Exec e) { (void)eval_S(4, 0, VectorV(4, 0), caps, 0, e); }, 1);
  row("eval_T_multisum l=4 caps 30", [&](Exec e) { (void)eval_T_multisum(4, 2, caps, e); }, 1);
  return 0;
}
