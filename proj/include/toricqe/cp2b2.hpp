#pragma once

#include <Eigen/Dense>
#include <functional>

#include "toricqe/families.hpp"
#include "toricqe/numerics.hpp"
#include "toricqe/polytope.hpp"
#include "toricqe/report.hpp"

namespace toricqe {

/// Symplectic potential data on the pentagon: a smooth symmetric
/// correction f with its second-derivative evaluators.
struct PentagonPotential {
  double a;
  std::function<double(const Eigen::Vector2d&)> f;
  std::function<double(const Eigen::Vector2d&)> f11;
  std::function<double(const Eigen::Vector2d&)> f12;
  std::function<double(const Eigen::Vector2d&)> f22;

  static PentagonPotential zero(double a);
};

/// Candidate constants of the quasi-Einstein ansatz on the pentagon.
struct ConstraintState {
  double a;
  double m;
  double b;
  double c;
  double d;
  double mu;
};

/// D^2 u at an interior point.
Eigen::Matrix2d pentagon_hessian(const PentagonPotential& pp, const Eigen::Vector2d& x);

/// Determinant via the expanded closed form (numerator D over the product
/// of the five functionals times 4).
double pentagon_det(const PentagonPotential& pp, const Eigen::Vector2d& x);

/// (D^2 u)^{-1} via the adjugate closed form.
Eigen::Matrix2d pentagon_inverse(const PentagonPotential& pp, const Eigen::Vector2d& x);

/// Evaluate u^{ij} and its listed one-sided derivatives at the three
/// distinguished vertices; residual against the {0, +-2} table.
ResidualReport vertex_boundary_report(const PentagonPotential& pp);

/// (sigma(t), phi(t)) of the ansatz.
std::pair<double, double> ansatz_sigma_phi(const ConstraintState& st, double t);

/// The three vertex relations plus the polytope integral, in order.
Eigen::Vector4d constraint_residuals(const ConstraintState& st, SolverConfig cfg = {});

/// Newton solve of the four constraints in (b, c, d, mu).
FamilySolution solve_constraints(double a, double m, const Eigen::Vector4d& guess,
                                 SolverConfig cfg = {});

/// Evaluate the m -> infinity limiting residuals at the Chen-LeBrun-Weber
/// values and report whether they exceed the exclusion threshold.
ResidualReport clw_exclusion_check(double a);

}  // namespace toricqe
