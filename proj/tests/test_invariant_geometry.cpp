#include <cmath>

#include "doctest.h"
#include "toricqe/invariant_geometry.hpp"

using namespace toricqe;

TEST_CASE("guillemin profile: F and P") {
  const Profile p = guillemin_profile(1.0);
  // P = 1/(1-t) + 1/(1+t), F = 1 + (2+t) P
  const double t = 0.3;
  const double P = 1.0 / 0.7 + 1.0 / 1.3;
  CHECK(p.P(t) == doctest::Approx(P).epsilon(1e-12));
  CHECK(p.F(t) == doctest::Approx(1.0 + 2.3 * P).epsilon(1e-12));
}

TEST_CASE("hessian_u: inverse and determinant identities") {
  const Profile p = guillemin_profile(1.0);
  const Eigen::Vector2d x(0.2, -0.4);
  const MetricSample ms = hessian_u(p, x);
  CHECK((ms.hessian * ms.inverse - Eigen::Matrix2d::Identity()).norm() ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(ms.hessian.determinant() == doctest::Approx(ms.det).epsilon(1e-12));
  // det D^2 u = F / (4 (x1+1)(x2+1))
  const double t = x(0) + x(1);
  CHECK(ms.det ==
        doctest::Approx(p.F(t) / (4.0 * (x(0) + 1.0) * (x(1) + 1.0))).epsilon(1e-12));
}

TEST_CASE("hessian_u matches finite differences of the potential") {
  const double a = 1.3;
  const Profile p = guillemin_profile(a);
  const PolytopeSpec trap = trapezium(a);
  auto u = [&](const Eigen::Vector2d& x) { return guillemin_term(trap, x); };
  const Eigen::Vector2d x(0.15, -0.35);
  const MetricSample ms = hessian_u(p, x);
  const double h = 1e-5;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Eigen::Vector2d ei = Eigen::Vector2d::Zero(), ej = Eigen::Vector2d::Zero();
      ei(i) = h;
      ej(j) = h;
      const double fd = (u(x + ei + ej) - u(x + ei - ej) - u(x - ei + ej) + u(x - ei - ej)) /
                        (4.0 * h * h);
      CHECK(ms.hessian(i, j) == doctest::Approx(fd).epsilon(1e-6));
    }
}

TEST_CASE("ricci_difference vanishes on the diagonal") {
  const Profile p = guillemin_profile(1.0);
  CHECK(ricci_difference(p, {0.21, 0.21}) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("conformal laws reduce to identities at sigma = 0") {
  const Profile p = guillemin_profile(1.0);
  const Eigen::Vector2d x(0.3, -0.2);
  const MetricSample ms = hessian_u(p, x);
  Eigen::Matrix2d ric;
  ric << 1.0, 0.2, 0.2, -0.5;
  const Eigen::Matrix2d out = conformal_ricci(ric, Eigen::Matrix2d::Zero(),
                                              Eigen::Matrix2d::Zero(), 0.0, 0.0, ms.hessian);
  CHECK((out - ric).norm() == doctest::Approx(0.0));
  CHECK(conformal_laplacian(3.7, 0.0, 0.0) == doctest::Approx(3.7));
  Eigen::Matrix2d hp;
  hp << 0.4, -0.1, -0.1, 0.9;
  const Eigen::Matrix2d hout = conformal_hessian(hp, Eigen::Vector2d::Zero(),
                                                 Eigen::Vector2d(1.0, 2.0), ms.hessian, 0.0);
  CHECK((hout - hp).norm() == doctest::Approx(0.0));
}

TEST_CASE("conformal data: LogAffine derivatives are consistent") {
  ConformalData cf{ConformalData::Form::LogAffine, 0.3, 1.1, -0.5, 2.0};
  const double t = 0.2, h = 1e-5;
  CHECK(cf.sigma_prime(t) ==
        doctest::Approx((cf.sigma(t + h) - cf.sigma(t - h)) / (2.0 * h)).epsilon(1e-8));
  CHECK(cf.sigma_prime2(t) ==
        doctest::Approx((cf.sigma(t + h) - 2.0 * cf.sigma(t) + cf.sigma(t - h)) / (h * h))
            .epsilon(1e-5));
  CHECK(cf.phi_prime(t) ==
        doctest::Approx((cf.phi(t + h) - cf.phi(t - h)) / (2.0 * h)).epsilon(1e-8));
  CHECK(cf.phi_prime2(t) ==
        doctest::Approx((cf.phi(t + h) - 2.0 * cf.phi(t) + cf.phi(t - h)) / (h * h))
            .epsilon(1e-5));
}

TEST_CASE("conformal data: soliton form") {
  ConformalData cf{ConformalData::Form::SolitonLinear, 0.53, 1.0, std::nullopt, std::nullopt};
  CHECK(cf.sigma(0.4) == doctest::Approx(0.0));
  CHECK(cf.phi(0.4) == doctest::Approx(0.53 * 0.4));
  CHECK(cf.phi_prime(0.4) == doctest::Approx(0.53));
  CHECK(cf.phi_prime2(0.4) == doctest::Approx(0.0));
}

TEST_CASE("laplacian_invariant of t against the direct formula") {
  const Profile p = guillemin_profile(1.0);
  const double t = -0.1;
  // Delta t = -2(2+t) F'/F^2 + 4/F  (phi' = 1, phi'' = 0)
  const double F = p.F(t), Fp = p.F_prime(t);
  CHECK(laplacian_invariant(p, 1.0, 0.0, t) ==
        doctest::Approx(-2.0 * (2.0 + t) * Fp / (F * F) + 4.0 / F).epsilon(1e-12));
}
