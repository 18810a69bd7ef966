// Compares the OpenMP kernels against their serial reference implementations
// on fixed workloads and checks that both sides report identical results.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "inv/bounds.hpp"
#include "inv/constructions.hpp"
#include "inv/exact.hpp"
#include "inv/fpt.hpp"

using namespace inv;
using Clock = std::chrono::steady_clock;

namespace {

int g_threads = 0;

template <class F>
double timed(F&& f, int repeats = 3) {
  double best = 1e100;
  for (int i = 0; i < repeats; ++i) {
    auto t0 = Clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(Clock::now() - t0).count());
  }
  return best;
}

void report(const std::string& name, double serial, double parallel, bool equal) {
  std::printf("%-34s %10.4fs %10.4fs %7.2fx  %s\n", name.c_str(), serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, equal ? "results match" : "RESULTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_threads = std::atoi(argv[1]);
#ifdef _OPENMP
  const int threads = g_threads > 0 ? g_threads : omp_get_max_threads();
#else
  const int threads = 1;
#endif
  std::printf("threads for the parallel side: %d\n\n", threads);
  std::printf("%-34s %11s %11s %8s\n", "kernel", "serial", "parallel", "speedup");

  {
    Digraph d = dijoin(v5(), v5());
    SolveOptions ser;
    SolveOptions par;
    par.threads = threads;
    auto a = decide_inv_le_serial(d, 3, ser);
    auto b = decide_inv_le(d, 3, par);
    double ts = timed([&] { decide_inv_le_serial(d, 3, ser); });
    double tp = timed([&] { decide_inv_le(d, 3, par); });
    report("refute inv(V5->V5) <= 3", ts, tp, a.has_value() == b.has_value());
  }
  {
    Digraph d = dijoin(c3(), counterexample_r());
    SolveOptions ser;
    SolveOptions par;
    par.threads = threads;
    auto a = decide_inv_le_serial(d, 3, ser);
    auto b = decide_inv_le(d, 3, par);
    double ts = timed([&] { decide_inv_le_serial(d, 3, ser); });
    double tp = timed([&] { decide_inv_le(d, 3, par); });
    report("witness inv(C3->R) <= 3", ts, tp, a == b);
  }
  {
    Digraph t = random_tournament(9, 99);
    auto a = fpt_inversion(t, 3, nullptr, 1);
    auto b = fpt_inversion(t, 3, nullptr, threads);
    double ts = timed([&] { fpt_inversion(t, 3, nullptr, 1); }, 2);
    double tp = timed([&] { fpt_inversion(t, 3, nullptr, threads); }, 2);
    bool equal = a.has_value() == b.has_value() &&
                 (!a || (a->family == b->family && a->order == b->order));
    report("fpt compression n=9 k=3", ts, tp, equal);
  }
  {
    auto a = random_inv_experiment(7, 1, 4000, 5, false, 1);
    auto b = random_inv_experiment(7, 1, 4000, 5, false, threads);
    double ts = timed([&] { random_inv_experiment(7, 1, 4000, 5, false, 1); }, 2);
    double tp = timed([&] { random_inv_experiment(7, 1, 4000, 5, false, threads); }, 2);
    report("random-inv experiment 4000 trials", ts, tp, a.successes == b.successes);
  }
  {
    auto a = rank_tail_experiment(28, 8, 4000, 5, false, 1);
    auto b = rank_tail_experiment(28, 8, 4000, 5, false, threads);
    double ts = timed([&] { rank_tail_experiment(28, 8, 4000, 5, false, 1); }, 2);
    double tp = timed([&] { rank_tail_experiment(28, 8, 4000, 5, false, threads); }, 2);
    report("rank-tail experiment 4000 trials", ts, tp, a.successes == b.successes);
  }
  return 0;
}
