#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "toricqe/errors.hpp"

namespace toricqe {

/// Closed interval [lo, hi] with lo < hi, both finite.
struct Interval {
  double lo;
  double hi;
};

struct SolverConfig {
  double abs_tol = 1e-12;
  double rel_tol = 0.0;
  int max_iter = 500;
};

using ScalarFn = std::function<double(double)>;
using VectorFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

/// Adaptive Gauss(7)/Gauss(15) quadrature of f over iv.  The embedded
/// low-order rule supplies the error estimate; the worst subinterval is
/// bisected until the total estimate drops below
/// abs_tol + rel_tol*|integral|.  Deterministic: no randomized ordering.
double integrate(const ScalarFn& f, Interval iv, SolverConfig cfg = {});

/// Brent's method.  Requires f(lo)*f(hi) < 0; converges to a bracket of
/// width <= abs_tol (plus a machine-precision relative term).
double find_root_bracketed(const ScalarFn& f, Interval iv, SolverConfig cfg = {});

/// All real roots of c4 x^4 + c3 x^3 + c2 x^2 + c1 x + c0, ascending,
/// duplicates merged.  Ferrari resolvent factorization followed by a
/// Newton polish on the original quartic.
std::vector<double> real_roots_quartic(double c4, double c3, double c2, double c1, double c0);

/// Damped Newton iteration for F(x) = 0 with a forward-difference
/// Jacobian (step max(1e-7, 1e-7*|x_i|)).  Succeeds when
/// ||F(x)||_inf <= abs_tol.
Eigen::VectorXd solve_system(const VectorFn& F, Eigen::VectorXd x0, SolverConfig cfg = {});

/// O(h^2) central stencil for f' (order 1) or f'' (order 2).
double central_derivative(const ScalarFn& f, double x, int order, double h);

/// Chebyshev interpolant of a smooth function on [lo, hi].
/// Used to turn evaluators that are expensive (nested quadrature) into
/// cheap closed-form surrogates before finite differencing.
class Chebyshev {
 public:
  static Chebyshev fit(const ScalarFn& f, double lo, double hi, int n);

  double operator()(double x) const;

  /// Antiderivative vanishing at x0.
  Chebyshev antiderivative(double x0) const;

  double lo() const { return lo_; }
  double hi() const { return hi_; }

 private:
  Chebyshev(double lo, double hi, std::vector<double> coef)
      : lo_(lo), hi_(hi), coef_(std::move(coef)) {}

  double lo_;
  double hi_;
  std::vector<double> coef_;  // sum coef_[k] T_k - coef_[0]/2
};

}  // namespace toricqe
