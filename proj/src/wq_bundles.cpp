#include "toricqe/wq_bundles.hpp"

#include <cmath>
#include <cstdlib>

namespace toricqe {

WqTopology wq_normalize(int p, int q, double A) {
  if (q == 0 || std::abs(q) >= p)
    throw InvalidTopology("wq_normalize: require 0 < |q| < p");
  if (!(A > 0.0)) throw InvalidTopology("wq_normalize: require A > 0");

  const double rhs = (8.0 * A * p + double(q) * q) / (4.0 * A * A);
  const double s0 = -2.0 + std::sqrt(4.0 + rhs);
  WqTopology w{p, q, A, s0};
  // beta is convex in s with vertex at s = -s0 < 0, so the minimum over
  // [0, 4] sits at s = 0
  if (!(w.beta(0.0) > 0.0) || !(w.beta(4.0) > 0.0))
    throw NonPositiveBeta("wq_normalize: beta not positive on [0, 4]");
  return w;
}

double sigma_wq(const WqTopology& w, double s) {
  const double arg = 2.0 * w.A * (s + w.s0) - w.q;
  if (std::abs(arg) < 1e-14)
    throw ConformalFactorPole("sigma_wq: 2A(s+s0) = q");
  return -std::log(std::abs(arg));
}

std::pair<int, int> chern_class_coeffs(int p, int q) {
  if (q == 0 || std::abs(q) >= p)
    throw InvalidTopology("chern_class_coeffs: require 0 < |q| < p");
  return {p + q, 2};
}

double kaehler_class_ratio(const WqTopology& w) {
  const double e0 = std::exp(2.0 * sigma_wq(w, 0.0));
  const double e4 = std::exp(2.0 * sigma_wq(w, 4.0));
  return e4 * w.beta(4.0) / (e0 * w.beta(0.0));
}

}  // namespace toricqe
