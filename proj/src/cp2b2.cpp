#include "toricqe/cp2b2.hpp"

#include <cmath>

namespace toricqe {

namespace {

constexpr double kBoundaryGuard = 1e-8;

double n1(double a, const Eigen::Vector2d& x) {
  return a * a - a * x.y() - x.x() * x.x() - 2.0 * x.x() - 1.0;  // u11 numerator
}
double n2(double a, const Eigen::Vector2d& x) {
  return a * a - a * x.x() - x.y() * x.y() - 2.0 * x.y() - 1.0;  // u22 numerator
}

Eigen::Matrix2d hessian_unguarded(const PentagonPotential& pp, const Eigen::Vector2d& x) {
  const double a = pp.a;
  const double t = x.x() + x.y();
  const double e = a - 1.0 - t;
  Eigen::Matrix2d H;
  H(0, 0) = n1(a, x) / (2.0 * (x.x() + 1.0) * (a - 1.0 - x.x()) * e) + pp.f11(x);
  H(1, 1) = n2(a, x) / (2.0 * (x.y() + 1.0) * (a - 1.0 - x.y()) * e) + pp.f22(x);
  H(0, 1) = H(1, 0) = 1.0 / (2.0 * e) + pp.f12(x);
  return H;
}

// Expanded determinant numerator.
double det_numerator(const PentagonPotential& pp, const Eigen::Vector2d& x) {
  const double a = pp.a;
  const double x1 = x.x(), x2 = x.y();
  const double t = x1 + x2;
  const double e = a - 1.0 - t;
  const double q1 = (x1 + 1.0) * (a - 1.0 - x1);
  const double q2 = (x2 + 1.0) * (a - 1.0 - x2);
  const double f11 = pp.f11(x), f12 = pp.f12(x), f22 = pp.f22(x);
  return a * (a * a + a - (x1 * x1 + x2 * x2) - 2.0 * t - 2.0) +
         2.0 * q1 * n2(a, x) * f11 + 2.0 * q2 * n1(a, x) * f22 -
         4.0 * q1 * q2 * f12 + 4.0 * q1 * q2 * e * (f11 * f22 - f12 * f12);
}

Eigen::Matrix2d inverse_unguarded(const PentagonPotential& pp, const Eigen::Vector2d& x) {
  const double a = pp.a;
  const double x1 = x.x(), x2 = x.y();
  const double e = a - 1.0 - x1 - x2;
  const double q1 = (x1 + 1.0) * (a - 1.0 - x1);
  const double q2 = (x2 + 1.0) * (a - 1.0 - x2);
  const double D = det_numerator(pp, x);
  if (D == 0.0) throw SingularHessian("pentagon_inverse: zero determinant numerator");
  Eigen::Matrix2d inv;
  // adjugate swaps the diagonal: the 11-entry of the inverse carries the
  // 22-numerator and vice versa
  inv(0, 0) = 2.0 * q1 * (n2(a, x) + 2.0 * q2 * e * pp.f22(x)) / D;
  inv(1, 1) = 2.0 * q2 * (n1(a, x) + 2.0 * q1 * e * pp.f11(x)) / D;
  inv(0, 1) = inv(1, 0) = -2.0 * q1 * q2 * (1.0 + 2.0 * e * pp.f12(x)) / D;
  return inv;
}

void require_interior(const PentagonPotential& pp, const Eigen::Vector2d& x, const char* who) {
  if (!contains(pentagon(pp.a), x, kBoundaryGuard))
    throw BoundaryEvaluation(std::string(who) + ": point not strictly interior");
}

}  // namespace

PentagonPotential PentagonPotential::zero(double a) {
  auto z = [](const Eigen::Vector2d&) { return 0.0; };
  return PentagonPotential{a, z, z, z, z};
}

Eigen::Matrix2d pentagon_hessian(const PentagonPotential& pp, const Eigen::Vector2d& x) {
  require_interior(pp, x, "pentagon_hessian");
  return hessian_unguarded(pp, x);
}

double pentagon_det(const PentagonPotential& pp, const Eigen::Vector2d& x) {
  require_interior(pp, x, "pentagon_det");
  const double a = pp.a;
  double denom = 4.0;
  for (const auto& l : pentagon(a).functionals) denom *= l(x);
  return det_numerator(pp, x) / denom;
}

Eigen::Matrix2d pentagon_inverse(const PentagonPotential& pp, const Eigen::Vector2d& x) {
  require_interior(pp, x, "pentagon_inverse");
  return inverse_unguarded(pp, x);
}

ResidualReport vertex_boundary_report(const PentagonPotential& pp) {
  const double a = pp.a;
  const double h = 1e-5;

  // inverse entries are rational and extend to the closed pentagon away
  // from the determinant's zero set, so one-sided stencils may touch edges
  auto entry = [&](const Eigen::Vector2d& x, int i, int j) {
    return inverse_unguarded(pp, x)(i, j);
  };
  // second-order one-sided derivative along +-e_k
  auto deriv = [&](const Eigen::Vector2d& v, int k, double sign, int i, int j) {
    Eigen::Vector2d e = Eigen::Vector2d::Zero();
    e(k) = sign * h;
    return sign * (-3.0 * entry(v, i, j) + 4.0 * entry(v + e, i, j) - entry(v + 2.0 * e, i, j)) /
           (2.0 * h);
  };

  struct Check {
    double got;
    double want;
  };
  std::vector<Check> checks;
  const Eigen::Vector2d v1(-1.0, -1.0), v2(-1.0, a - 1.0), v3(0.0, a - 1.0);

  for (const auto& v : {v1, v2, v3})
    for (int i = 0; i < 2; ++i)
      for (int j = i; j < 2; ++j) checks.push_back({entry(v, i, j), 0.0});

  // inward coordinate directions: v1 -> (+,+), v2 -> (+,-), v3 -> (-,-)
  checks.push_back({deriv(v1, 0, +1, 0, 0), 2.0});
  checks.push_back({deriv(v1, 0, +1, 0, 1), 0.0});
  checks.push_back({deriv(v1, 1, +1, 0, 1), 0.0});
  checks.push_back({deriv(v1, 1, +1, 1, 1), 2.0});

  checks.push_back({deriv(v2, 0, +1, 0, 0), 2.0});
  checks.push_back({deriv(v2, 0, +1, 0, 1), 0.0});
  checks.push_back({deriv(v2, 1, -1, 0, 1), 0.0});
  checks.push_back({deriv(v2, 1, -1, 1, 1), -2.0});

  checks.push_back({deriv(v3, 0, -1, 0, 0), -2.0});
  checks.push_back({deriv(v3, 0, -1, 0, 1), 0.0});
  checks.push_back({deriv(v3, 1, -1, 0, 1), 2.0});
  checks.push_back({deriv(v3, 1, -1, 1, 1), -2.0});

  ResidualReport rep;
  rep.name = "pentagon vertex boundary values";
  rep.tolerance = 1e-4;
  for (const auto& ch : checks)
    rep.max_abs_residual = std::max(rep.max_abs_residual, std::abs(ch.got - ch.want));
  rep.notes = "u^{ij} values and one-sided derivatives at the three distinguished vertices";
  rep.finalize();
  return rep;
}

std::pair<double, double> ansatz_sigma_phi(const ConstraintState& st, double t) {
  const double v = st.b * t + st.c;
  const double w = st.d * st.b * t + st.d * st.c + 1.0;
  if (v <= 0.0 || w <= 0.0)
    throw PositivityViolation("ansatz_sigma_phi: non-positive affine expression");
  return {-std::log(v), -st.m * std::log(w / v)};
}

Eigen::Vector4d constraint_residuals(const ConstraintState& st, SolverConfig cfg) {
  const double a = st.a, m = st.m, b = st.b, c = st.c, d = st.d, mu = st.mu;

  // positivity of both affine expressions over [-2, a-1]
  for (double t : {-2.0, a - 1.0}) {
    if (b * t + c <= 0.0 || d * b * t + d * c + 1.0 <= 0.0)
      throw PositivityViolation("constraint_residuals: ansatz positivity violated");
  }

  auto vertex = [&](double t) {
    const double v = c + t * b;
    const double w = d * c + 1.0 + t * d * b;
    return std::pair{v, w};
  };
  const auto [v1, w1] = vertex(-2.0);
  const auto [v2, w2] = vertex(a - 2.0);
  const auto [v3, w3] = vertex(a - 1.0);

  Eigen::Vector4d r;
  r(0) = 4.0 * b / (v1 * w1) - (1.0 / (v1 * v1) - mu / (w1 * w1));
  r(1) = 1.0 / (v2 * v2) - mu / (w2 * w2);
  r(2) = -2.0 * b / (v3 * w3) - (1.0 / (v3 * v3) - mu / (w3 * w3));

  // integral of (e^{-phi} - mu e^{(2/m - 1) phi}) e^{4 sigma} over the
  // pentagon, reduced to t by the slice measure; split at the slice kink
  const PolytopeSpec pent = pentagon(a);
  auto integrand = [&](double t) {
    const double v = b * t + c;
    const double w = d * b * t + d * c + 1.0;
    const double ratio = w / v;
    const double val = std::exp(m * std::log(ratio)) - mu * std::exp((m - 2.0) * std::log(ratio));
    return val / (v * v * v * v) * slice_length(pent, t);
  };
  SolverConfig q{std::min(cfg.abs_tol, 1e-13), 0.0, 4000};
  r(3) = integrate(integrand, {-2.0, a - 2.0}, q) + integrate(integrand, {a - 2.0, a - 1.0}, q);
  return r;
}

FamilySolution solve_constraints(double a, double m, const Eigen::Vector4d& guess,
                                 SolverConfig cfg) {
  if (!(a > 1.0)) throw OutOfRange("solve_constraints: a must exceed 1");
  if (!(m > 1.0)) throw OutOfRange("solve_constraints: m must exceed 1");

  auto F = [&](const Eigen::VectorXd& x) -> Eigen::VectorXd {
    ConstraintState st{a, m, x(0), x(1), x(2), x(3)};
    return constraint_residuals(st, cfg);
  };
  const Eigen::VectorXd x = solve_system(F, guess, cfg);

  ConstraintState st{a, m, x(0), x(1), x(2), x(3)};
  try {
    return cp2b2_from_constants(a, m, st.b, st.c, st.d, st.mu);
  } catch (const PositivityViolation&) {
    throw InadmissibleSolution("solve_constraints: converged point violates positivity");
  }
}

ResidualReport clw_exclusion_check(double a) {
  if (std::abs(a - 2.0) > 1e-12)
    throw OutOfRange("clw_exclusion_check: only the a = 2 class is considered");
  const double b = -0.217907;
  const double c = 1.000632;
  const double mu = 1.0;

  // m -> infinity limit: phi tends to a constant, so every
  // (d c + 1 + k d b) factor is replaced by the (c + k b) scale and mu -> 1
  auto lim = [&](double t) { return c + t * b; };
  const double v1 = lim(-2.0), v2 = lim(a - 2.0), v3 = lim(a - 1.0);
  Eigen::Vector3d r;
  r(0) = 4.0 * b / (v1 * v1) - (1.0 / (v1 * v1) - mu / (v1 * v1));
  r(1) = 1.0 / (v2 * v2) - mu / (v2 * v2);
  r(2) = -2.0 * b / (v3 * v3) - (1.0 / (v3 * v3) - mu / (v3 * v3));

  ResidualReport rep;
  rep.name = "chen-lebrun-weber exclusion";
  rep.grid = {r(0), r(1), r(2)};
  rep.max_abs_residual = r.lpNorm<Eigen::Infinity>();
  rep.tolerance = 0.01;
  rep.pass = rep.max_abs_residual > rep.tolerance;  // pass means excluded
  rep.notes =
      "limiting vertex relations with (dc+1+k db) -> (c+k b) and mu -> 1; "
      "pass means the limit values fail the constraints by more than the threshold";
  return rep;
}

}  // namespace toricqe
