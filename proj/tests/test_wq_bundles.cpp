#include <cmath>
#include <random>

#include "doctest.h"
#include "toricqe/wq_bundles.hpp"

using namespace toricqe;

TEST_CASE("wq_normalize solves the s0 quadratic and keeps beta positive") {
  const WqTopology w = wq_normalize(3, 1, 0.7);
  CHECK(w.s0 > 0.0);
  CHECK(w.s0 * (w.s0 + 4.0) ==
        doctest::Approx((8.0 * w.A * w.p + w.q * w.q) / (4.0 * w.A * w.A)).epsilon(1e-12));
  for (double s : {0.0, 1.0, 2.5, 4.0}) CHECK(w.beta(s) > 0.0);
}

TEST_CASE("wq_normalize rejects bad topology") {
  CHECK_THROWS_AS(wq_normalize(3, 0, 1.0), InvalidTopology);   // need q != 0
  CHECK_THROWS_AS(wq_normalize(3, 3, 1.0), InvalidTopology);   // need |q| < p
  CHECK_THROWS_AS(wq_normalize(0, 1, 1.0), InvalidTopology);   // need p > 0
  CHECK_THROWS_AS(wq_normalize(3, 1, -1.0), InvalidTopology);  // need A > 0
}

TEST_CASE("chern class coefficients") {
  CHECK(chern_class_coeffs(3, 1) == std::pair<int, int>(4, 2));
  CHECK(chern_class_coeffs(5, -2) == std::pair<int, int>(3, 2));
}

TEST_CASE("kaehler class ratio equals (p-q)/(p+q)") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> up(2, 12);
  std::uniform_real_distribution<double> uA(0.05, 5.0);
  int done = 0;
  while (done < 1000) {
    const int p = up(rng);
    std::uniform_int_distribution<int> uq(-(p - 1), p - 1);
    const int q = uq(rng);
    if (q == 0) continue;
    const WqTopology w = wq_normalize(p, q, uA(rng));
    const double expected = double(p - q) / double(p + q);
    CHECK(std::abs(kaehler_class_ratio(w) - expected) < 1e-9);
    ++done;
  }
}

TEST_CASE("sigma_wq pole guard") {
  WqTopology w = wq_normalize(3, 1, 0.7);
  // at s = q/(2A) - s0 the conformal factor degenerates
  const double s_pole = w.q / (2.0 * w.A) - w.s0;
  CHECK_THROWS_AS(sigma_wq(w, s_pole), ConformalFactorPole);
  CHECK(std::isfinite(sigma_wq(w, 1.3)));
}
