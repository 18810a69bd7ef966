#include "doctest.h"
#include "helpers.hpp"
#include "inv/bounds.hpp"
#include "inv/constructions.hpp"
#include "inv/exact.hpp"
#include "inv/fpt.hpp"

using namespace inv;

// The OpenMP kernels must reproduce the serial reference bit for bit.

TEST_CASE("parallel solver returns the serial witness") {
  SplitMix64 g(1234);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + static_cast<int>(g.next() % 6);
    int k = 1 + static_cast<int>(g.next() % 3);
    if (k * n > 36) k = 36 / n;
    Digraph t = (trial % 3 == 0) ? testutil::random_digraph(n, g.next(), 30)
                                 : random_tournament(n, g.next());
    SolveOptions par;
    par.threads = 3;
    auto serial = decide_inv_le_serial(t, k);
    auto parallel = decide_inv_le(t, k, par);
    CHECK(serial.has_value() == parallel.has_value());
    if (serial && parallel) CHECK(*serial == *parallel);
  }
}

TEST_CASE("parallel refutation agrees") {
  SolveOptions par;
  par.threads = 4;
  CHECK_FALSE(decide_inv_le(counterexample_r(), 2, par));
  CHECK_FALSE(decide_inv_le_serial(counterexample_r(), 2));
}

TEST_CASE("parallel compress matches the sequential DP") {
  SplitMix64 g(555);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 5 + static_cast<int>(g.next() % 4);
    int k = 1 + static_cast<int>(g.next() % 2);
    Digraph t = random_tournament(n, g.next());
    auto res1 = fpt_inversion(t, k, nullptr, 1);
    auto res4 = fpt_inversion(t, k, nullptr, 4);
    CHECK(res1.has_value() == res4.has_value());
    if (res1 && res4) {
      CHECK(res1->family == res4->family);
      CHECK(res1->order == res4->order);
    }
  }
}

TEST_CASE("experiments are independent of the thread count") {
  auto a = rank_tail_experiment(8, 3, 2000, 99, false, 1);
  auto b = rank_tail_experiment(8, 3, 2000, 99, false, 4);
  CHECK(a.successes == b.successes);
  CHECK(a.empirical == b.empirical);

  auto c = random_inv_experiment(5, 1, 300, 7, false, 1);
  auto d = random_inv_experiment(5, 1, 300, 7, false, 4);
  CHECK(c.successes == d.successes);

  auto e = random_inv_experiment(4, 1, 0, 0, true, 1);
  auto f = random_inv_experiment(4, 1, 0, 0, true, 3);
  CHECK(e.successes == f.successes);
  CHECK(e.trials == f.trials);
}
