#include "toricqe/invariant_geometry.hpp"

#include <cmath>

namespace toricqe {

namespace {
constexpr double kProfileGuard = 1e-10;
constexpr double kBoundaryGuard = 1e-8;
}  // namespace

double Profile::F(double t) const {
  const double zt = z(t);
  if (zt <= kProfileGuard) throw NonPositiveProfile("Profile::F: z(t) below guard band");
  return 1.0 / zt;
}

double Profile::P(double t) const { return (F(t) - 1.0) / (2.0 + t); }

double Profile::F_prime(double t) const {
  const double zt = z(t);
  if (zt <= kProfileGuard) throw NonPositiveProfile("Profile::F_prime: z(t) below guard band");
  return -z_prime(t) / (zt * zt);
}

Profile guillemin_profile(double a) {
  Profile p;
  p.a = a;
  p.z = [a](double t) {
    const double P = 1.0 / (1.0 - t) + 1.0 / (a + t);
    return 1.0 / (1.0 + (2.0 + t) * P);
  };
  p.z_prime = [a](double t) {
    const double P = 1.0 / (1.0 - t) + 1.0 / (a + t);
    const double Pp = 1.0 / ((1.0 - t) * (1.0 - t)) - 1.0 / ((a + t) * (a + t));
    const double F = 1.0 + (2.0 + t) * P;
    const double Fp = P + (2.0 + t) * Pp;
    return -Fp / (F * F);
  };
  return p;
}

double ConformalData::sigma(double t) const {
  if (form == Form::SolitonLinear) return 0.0;
  const double arg = b * t + c;
  if (arg <= 0.0) throw PositivityViolation("ConformalData::sigma: b t + c <= 0");
  return -std::log(arg);
}

double ConformalData::sigma_prime(double t) const {
  if (form == Form::SolitonLinear) return 0.0;
  return -b / (b * t + c);
}

double ConformalData::sigma_prime2(double t) const {
  if (form == Form::SolitonLinear) return 0.0;
  const double arg = b * t + c;
  return b * b / (arg * arg);
}

double ConformalData::phi(double t) const {
  if (form == Form::SolitonLinear) return b * t;
  if (!d || !m) return 0.0;
  const double num = *d * b * t + *d * c + 1.0;
  const double den = b * t + c;
  if (num <= 0.0 || den <= 0.0) throw PositivityViolation("ConformalData::phi: non-positive base");
  return -*m * std::log(num / den);
}

double ConformalData::phi_prime(double t) const {
  if (form == Form::SolitonLinear) return b;
  if (!d || !m) return 0.0;
  return -*m * (*d * b / (*d * b * t + *d * c + 1.0) - b / (b * t + c));
}

double ConformalData::phi_prime2(double t) const {
  if (form == Form::SolitonLinear) return 0.0;
  if (!d || !m) return 0.0;
  const double u = *d * b * t + *d * c + 1.0;
  const double v = b * t + c;
  return -*m * (-(*d * b) * (*d * b) / (u * u) + b * b / (v * v));
}

MetricSample hessian_u(const Profile& p, const Eigen::Vector2d& x) {
  const PolytopeSpec spec = trapezium(p.a);
  if (!contains(spec, x, kBoundaryGuard))
    throw BoundaryEvaluation("hessian_u: point not strictly interior");
  const double t = x.x() + x.y();
  const double P = p.P(t);
  const double F = p.F(t);

  MetricSample s;
  s.x = x;
  s.hessian << 1.0 / (x.x() + 1.0) + P, P, P, 1.0 / (x.y() + 1.0) + P;
  s.hessian *= 0.5;
  const double pref = 2.0 * (x.x() + 1.0) * (x.y() + 1.0) / F;
  s.inverse << 1.0 / (x.y() + 1.0) + P, -P, -P, 1.0 / (x.x() + 1.0) + P;
  s.inverse *= pref;
  s.det = F / (4.0 * (x.x() + 1.0) * (x.y() + 1.0));
  return s;
}

double ricci_difference(const Profile& p, const Eigen::Vector2d& x) {
  const PolytopeSpec spec = trapezium(p.a);
  if (!contains(spec, x, kBoundaryGuard))
    throw BoundaryEvaluation("ricci_difference: point not strictly interior");
  const double t = x.x() + x.y();
  const double F = p.F(t);
  const double Fp = p.F_prime(t);
  const double pref = 0.5 * (x.y() - x.x()) / ((x.x() + 1.0) * (x.y() + 1.0));
  return pref * (Fp / (F * F) + 2.0 * (F - 1.0) / (F * (2.0 + t)));
}

namespace {

Eigen::Matrix2d ricci_fd_once(const std::function<double(const Eigen::Vector2d&)>& u,
                              const Eigen::Vector2d& x, double h) {
  const Eigen::Vector2d e0(1.0, 0.0), e1(0.0, 1.0);
  auto hess = [&](const Eigen::Vector2d& p) {
    Eigen::Matrix2d H;
    const double up = u(p);
    H(0, 0) = (u(p + h * e0) - 2.0 * up + u(p - h * e0)) / (h * h);
    H(1, 1) = (u(p + h * e1) - 2.0 * up + u(p - h * e1)) / (h * h);
    H(0, 1) = H(1, 0) = (u(p + h * (e0 + e1)) - u(p + h * (e0 - e1)) -
                         u(p - h * (e0 - e1)) + u(p - h * (e0 + e1))) /
                        (4.0 * h * h);
    return H;
  };
  auto logdet = [&](const Eigen::Vector2d& p) { return std::log(hess(p).determinant()); };

  Eigen::Matrix2d L2;
  const double ld0 = logdet(x);
  L2(0, 0) = (logdet(x + h * e0) - 2.0 * ld0 + logdet(x - h * e0)) / (h * h);
  L2(1, 1) = (logdet(x + h * e1) - 2.0 * ld0 + logdet(x - h * e1)) / (h * h);
  L2(0, 1) = L2(1, 0) = (logdet(x + h * (e0 + e1)) - logdet(x + h * (e0 - e1)) -
                         logdet(x - h * (e0 - e1)) + logdet(x - h * (e0 + e1))) /
                        (4.0 * h * h);

  Eigen::Vector2d grad_ld;
  grad_ld(0) = (logdet(x + h * e0) - logdet(x - h * e0)) / (2.0 * h);
  grad_ld(1) = (logdet(x + h * e1) - logdet(x - h * e1)) / (2.0 * h);

  const Eigen::Matrix2d H0 = hess(x);
  const Eigen::Matrix2d Hinv = H0.inverse();
  Eigen::Matrix2d dH[2];
  dH[0] = (hess(x + h * e0) - hess(x - h * e0)) / (2.0 * h);
  dH[1] = (hess(x + h * e1) - hess(x - h * e1)) / (2.0 * h);

  Eigen::Matrix2d ric;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      double advect = 0.0;
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) advect += Hinv(k, l) * dH[k](i, j) * grad_ld(l);
      ric(i, j) = 0.5 * (L2(i, j) - advect);
    }
  return ric;
}

}  // namespace

Eigen::Matrix2d ricci_full_fd(const std::function<double(const Eigen::Vector2d&)>& u,
                              const Eigen::Vector2d& x, double h) {
  // The assembly takes fourth differences of u, so literal steps much
  // below ~1e-2 are roundoff-dominated in double precision.  Clamp the
  // step and apply one Richardson refinement; the requested h acts as a
  // lower bound.
  const double H = std::max(h, 1e-2);
  const Eigen::Matrix2d coarse = ricci_fd_once(u, x, H);
  const Eigen::Matrix2d fine = ricci_fd_once(u, x, 0.5 * H);
  return (4.0 * fine - coarse) / 3.0;
}

double hessian_phi_difference(const Profile& p, double phi_prime, const Eigen::Vector2d& x) {
  const PolytopeSpec spec = trapezium(p.a);
  if (!contains(spec, x, kBoundaryGuard))
    throw BoundaryEvaluation("hessian_phi_difference: point not strictly interior");
  const double t = x.x() + x.y();
  return 0.5 * (x.y() - x.x()) / ((x.x() + 1.0) * (x.y() + 1.0)) * phi_prime / p.F(t);
}

double laplacian_invariant(const Profile& p, double phi_prime, double phi_prime2, double t) {
  if (!(t > -p.a && t < 1.0)) throw OutOfRange("laplacian_invariant: t outside (-a, 1)");
  const double F = p.F(t);
  const double Fp = p.F_prime(t);
  return (-2.0 * (2.0 + t) * Fp / (F * F) + 4.0 / F) * phi_prime +
         2.0 * (2.0 + t) / F * phi_prime2;
}

Eigen::Matrix2d conformal_ricci(const Eigen::Matrix2d& ric, const Eigen::Matrix2d& hess_sigma,
                                const Eigen::Matrix2d& dsigma_outer, double grad_sigma_sq,
                                double lap_sigma, const Eigen::Matrix2d& g) {
  return ric - 2.0 * (hess_sigma - dsigma_outer) - (2.0 * grad_sigma_sq + lap_sigma) * g;
}

double conformal_laplacian(double lap_phi, double grad_pairing, double sigma) {
  return std::exp(-2.0 * sigma) * (lap_phi + 2.0 * grad_pairing);
}

Eigen::Matrix2d conformal_hessian(const Eigen::Matrix2d& hess_phi, const Eigen::Vector2d& dsigma,
                                  const Eigen::Vector2d& dphi, const Eigen::Matrix2d& g,
                                  double grad_pairing) {
  // e^sigma * d(e^-sigma) = -dsigma, so the bracket collapses to
  // -(dsigma (x) dphi + dphi (x) dsigma) + g(grad sigma, grad phi) g.
  return hess_phi - (dsigma * dphi.transpose() + dphi * dsigma.transpose()) + grad_pairing * g;
}

double invariant_pairing(const Profile& p, double fp, double hp, double t) {
  return 2.0 * (2.0 + t) * fp * hp / p.F(t);
}

}  // namespace toricqe
