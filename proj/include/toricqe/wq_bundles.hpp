#pragma once

#include <utility>

#include "toricqe/errors.hpp"

namespace toricqe {

/// CP^1-bundle data over a Fano Kaehler-Einstein base: c_1(base) = p a,
/// twist q with 0 < |q| < p, fibre-profile constants A > 0 and s0 > 0
/// tied by s0(s0+4) = (8Ap + q^2)/(4A^2), with
/// beta(s) = A(s+s0)^2 - q^2/(4A) on the coordinate range [0, 4].
struct WqTopology {
  int p;
  int q;
  double A;
  double s0;

  double beta(double s) const { return A * (s + s0) * (s + s0) - q * q / (4.0 * A); }
};

/// Compute s0 as the positive root of its defining quadratic and verify
/// beta > 0 on [0, 4].
WqTopology wq_normalize(int p, int q, double A);

/// sigma(s) = -log|2A(s+s0) - q|.
double sigma_wq(const WqTopology& w, double s);

/// Coefficients (p+q, 2) of the first Chern class in the (pullback, fibre)
/// basis.
std::pair<int, int> chern_class_coeffs(int p, int q);

/// e^{2 sigma(4)} beta(4) / (e^{2 sigma(0)} beta(0)); algebraically equal
/// to (p-q)/(p+q) on the constraint surface.
double kaehler_class_ratio(const WqTopology& w);

}  // namespace toricqe
