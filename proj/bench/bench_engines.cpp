// Wall-clock comparison of the OpenMP engines against the serial reference
// implementations.  The two paths produce identical output by contract; this
// binary reports what the parallel orchestration buys on the current machine.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tsboot/bound.hpp"
#include "tsboot/harness.hpp"
#include "tsboot/reference.hpp"

using namespace tsboot;

namespace {

template <typename F>
double time_seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration_cast<std::chrono::duration<double>>(stop - start).count();
}

ArmaSpec bench_dgp() {
  ArmaSpec s;
  s.phi = {0.5, 0.2};
  s.theta = {0.3};
  return s;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads available: %d\n", omp_get_max_threads());
#else
  std::printf("compiled without OpenMP\n");
#endif

  {
    const Series series = simulate(bench_dgp(), 2000, 1000, RngStream(55, 0));
    BoundConfig cfg;
    cfg.d = 3;
    cfg.n_bootstrap = 2000;
    cfg.alpha = 0.1;

    double checksum_serial = 0.0, checksum_parallel = 0.0;
    const double t_serial = time_seconds([&] {
      checksum_serial = reference::gen_error_bound(series, cfg, RngStream(55, 1)).upper_bound;
    });
    const double t_parallel = time_seconds([&] {
      checksum_parallel = gen_error_bound(series, cfg, RngStream(55, 1)).upper_bound;
    });
    std::printf("gen_error_bound  n=2000 B=2000   serial %.3fs  parallel %.3fs  speedup %.2fx  %s\n",
                t_serial, t_parallel, t_serial / t_parallel,
                checksum_serial == checksum_parallel ? "outputs identical" : "OUTPUT MISMATCH");
  }

  {
    CoverageConfig cfg;
    cfg.dgp = bench_dgp();
    cfg.d = 3;
    cfg.sample_sizes = {400};
    cfg.n_outer = 60;
    cfg.n_bootstrap = 100;
    cfg.alpha = 0.1;
    cfg.oracle_horizon = 400;
    cfg.burnin = 500;

    double cov_serial = 0.0, cov_parallel = 0.0;
    const double t_serial = time_seconds([&] {
      cov_serial = reference::coverage_experiment(cfg, RngStream(56)).coverage[0];
    });
    const double t_parallel = time_seconds([&] {
      cov_parallel = coverage_experiment(cfg, RngStream(56)).coverage[0];
    });
    std::printf("coverage         n=400 outer=60  serial %.3fs  parallel %.3fs  speedup %.2fx  %s\n",
                t_serial, t_parallel, t_serial / t_parallel,
                cov_serial == cov_parallel ? "outputs identical" : "OUTPUT MISMATCH");
  }
  return 0;
}
