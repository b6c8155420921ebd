#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>

#include "toricqe/errors.hpp"
#include "toricqe/polytope.hpp"

namespace toricqe {

/// U(2)-invariant profile on the trapezium [-a, 1]: the function z(t)
/// with its analytic derivative, and the derived F = 1/z,
/// P = (F - 1)/(2 + t).  F' is computed as -z'/z^2 so no numerical
/// differentiation happens near the boundary zeros of z.
struct Profile {
  double a;
  ScalarFn z;
  ScalarFn z_prime;

  double F(double t) const;
  double P(double t) const;
  double F_prime(double t) const;
};

/// The pure Guillemin profile (f = 0): P = 1/(1-t) + 1/(a+t).
Profile guillemin_profile(double a);

/// Hessian, inverse and determinant of the symplectic potential at x.
struct MetricSample {
  Eigen::Vector2d x;
  Eigen::Matrix2d hessian;
  Eigen::Matrix2d inverse;
  double det;
};

/// Conformal factor sigma(t) = -log(b t + c) and potential phi(t).
/// LogAffine: phi = -m log((d b t + d c + 1)/(b t + c)) when d, m are set,
/// otherwise phi = 0 (the Einstein case).  SolitonLinear stores the slope
/// of phi = slope * t in the b-slot and has sigma = 0.
struct ConformalData {
  enum class Form { LogAffine, SolitonLinear };
  Form form = Form::LogAffine;
  double b = 0.0;
  double c = 1.0;
  std::optional<double> d;
  std::optional<double> m;

  double sigma(double t) const;
  double sigma_prime(double t) const;
  double sigma_prime2(double t) const;
  double phi(double t) const;
  double phi_prime(double t) const;
  double phi_prime2(double t) const;
};

/// D^2 u, its inverse and determinant from a profile, at an interior x.
MetricSample hessian_u(const Profile& p, const Eigen::Vector2d& x);

/// Ric_11 - Ric_22 for the toric metric of the profile.
double ricci_difference(const Profile& p, const Eigen::Vector2d& x);

/// Full FD assembly of the Ricci x-block from a symplectic potential
/// evaluator: Ric_ij = (1/2)(d_i d_j - u^{kl} (d_k u_ij) d_l) log det D^2 u,
/// all derivatives by nested central stencils.  The step is clamped to
/// >= 1e-2 and one Richardson refinement is applied, because the nested
/// stencils difference u to fourth order; u must be valid on a
/// 2*max(h, 1e-2) neighborhood of x.
Eigen::Matrix2d ricci_full_fd(const std::function<double(const Eigen::Vector2d&)>& u,
                              const Eigen::Vector2d& x, double h);

/// (Hess phi)_11 - (Hess phi)_22 for an invariant phi with derivative
/// phi' at t = x1 + x2.
double hessian_phi_difference(const Profile& p, double phi_prime, const Eigen::Vector2d& x);

/// Laplacian of an invariant function from its t-derivatives.
double laplacian_invariant(const Profile& p, double phi_prime, double phi_prime2, double t);

/// Conformal transformation laws, pointwise tensor algebra.
Eigen::Matrix2d conformal_ricci(const Eigen::Matrix2d& ric, const Eigen::Matrix2d& hess_sigma,
                                const Eigen::Matrix2d& dsigma_outer, double grad_sigma_sq,
                                double lap_sigma, const Eigen::Matrix2d& g);

double conformal_laplacian(double lap_phi, double grad_pairing, double sigma);

Eigen::Matrix2d conformal_hessian(const Eigen::Matrix2d& hess_phi, const Eigen::Vector2d& dsigma,
                                  const Eigen::Vector2d& dphi, const Eigen::Matrix2d& g,
                                  double grad_pairing);

/// g(grad f, grad h) for invariant functions with t-derivatives fp, hp:
/// the toric metric pairs them as 2 (2 + t) fp hp / F.
double invariant_pairing(const Profile& p, double fp, double hp, double t);

}  // namespace toricqe
