// Times the serial reference against the OpenMP row loop for the distance
// sweep and the randomized verification trials, and checks they agree.
#include <chrono>
#include <cmath>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "flowbch/splitting.hpp"
#include "flowbch/verify.hpp"

using namespace flowbch;

namespace {

template <typename F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::high_resolution_clock::now();
  f();
  const auto t1 = std::chrono::high_resolution_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp: not enabled\n");
#endif

  const std::vector<double> gammas{0.5, 2.0, 4.0};
  const auto grid = log_tau_grid(0.01, 1.0, 400);
  std::vector<SweepRecord> serial_rows, parallel_rows;
  const double t_serial = time_ms([&] {
    serial_rows = distance_sweep(gammas, grid, all_permutations(), false);
  });
  const double t_parallel = time_ms([&] {
    parallel_rows = distance_sweep(gammas, grid, all_permutations(), true);
  });

  double worst = 0.0;
  for (std::size_t i = 0; i < serial_rows.size(); ++i) {
    const double a = serial_rows[i].distance, b = parallel_rows[i].distance;
    if (std::isnan(a) != std::isnan(b)) worst = 1.0;
    if (!std::isnan(a)) worst = std::max(worst, std::abs(a - b));
  }
  std::printf("sweep rows: %zu\n", serial_rows.size());
  std::printf("sweep serial:   %9.2f ms\n", t_serial);
  std::printf("sweep parallel: %9.2f ms  (speedup %.2fx)\n", t_parallel, t_serial / t_parallel);
  std::printf("max serial/parallel row deviation: %.3e\n", worst);

  VerifyConfig cfg;
  cfg.trials = 400;
  cfg.parallel = false;
  std::vector<SuiteReport> serial_rep, parallel_rep;
  const double v_serial = time_ms([&] { serial_rep = run_verify("bch", cfg); });
  cfg.parallel = true;
  const double v_parallel = time_ms([&] { parallel_rep = run_verify("bch", cfg); });
  const bool same = render_reports(serial_rep) == render_reports(parallel_rep);
  std::printf("verify(bch) serial:   %9.2f ms\n", v_serial);
  std::printf("verify(bch) parallel: %9.2f ms  (speedup %.2fx)\n", v_parallel,
              v_serial / v_parallel);
  std::printf("verify reports identical: %s\n", same ? "yes" : "NO");
  return (worst < 1e-15 && same) ? 0 : 1;
}
