#include <cmath>
#include <random>

#include "doctest.h"
#include "toricqe/cp2b2.hpp"

using namespace toricqe;

namespace {

PentagonPotential bump(double a) {
  PentagonPotential pp = PentagonPotential::zero(a);
  pp.f = [](const Eigen::Vector2d& x) {
    const double t = x(0) + x(1);
    return 0.01 * t * t;
  };
  pp.f11 = [](const Eigen::Vector2d&) { return 0.02; };
  pp.f12 = [](const Eigen::Vector2d&) { return 0.02; };
  pp.f22 = [](const Eigen::Vector2d&) { return 0.02; };
  return pp;
}

std::vector<Eigen::Vector2d> interior_points(double a, int n, unsigned seed) {
  const PolytopeSpec pent = pentagon(a);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, a - 1.0);
  std::vector<Eigen::Vector2d> pts;
  while (int(pts.size()) < n) {
    const Eigen::Vector2d x(u(rng), u(rng));
    if (contains(pent, x, 1e-3)) pts.push_back(x);
  }
  return pts;
}

}  // namespace

TEST_CASE("pentagon determinant formula vs direct determinant") {
  for (const auto& pp : {PentagonPotential::zero(2.0), bump(2.0)}) {
    for (const auto& x : interior_points(2.0, 50, 11)) {
      const double direct = pentagon_hessian(pp, x).determinant();
      CHECK(pentagon_det(pp, x) == doctest::Approx(direct).epsilon(1e-10));
    }
  }
}

TEST_CASE("pentagon inverse times hessian is the identity") {
  for (const auto& pp : {PentagonPotential::zero(2.0), bump(2.0)}) {
    for (const auto& x : interior_points(2.0, 50, 12)) {
      const Eigen::Matrix2d prod = pentagon_inverse(pp, x) * pentagon_hessian(pp, x);
      CHECK((prod - Eigen::Matrix2d::Identity()).norm() < 1e-10);
    }
  }
}

TEST_CASE("vertex values and one-sided derivatives, f-independent") {
  for (const auto& pp : {PentagonPotential::zero(2.0), bump(2.0)}) {
    const ResidualReport rep = vertex_boundary_report(pp);
    CHECK(rep.pass);
    CHECK(rep.max_abs_residual < 1e-4);
  }
}

TEST_CASE("constraint residuals vanish at the published a=2, m=2 solution") {
  const ConstraintState st{2.0, 2.0, -0.0744357, 1.00482, -0.463585, 0.282617};
  const Eigen::Vector4d r = constraint_residuals(st, {1e-12, 0.0, 2000});
  CHECK(r.cwiseAbs().maxCoeff() < 1e-5);
}

TEST_CASE("constraint integral: slice reduction vs 2-D tensor quadrature") {
  const ConstraintState st{2.0, 2.0, -0.0744357, 1.00482, -0.463585, 0.282617};
  // re-evaluate constraint (iv) by brute 2-D quadrature over the pentagon
  auto integrand_2d = [&](double x1, double x2) {
    const double t = x1 + x2;
    const double v = st.b * t + st.c;
    const double w = st.d * st.b * t + st.d * st.c + 1.0;
    const double r = w / v;
    return (std::pow(r, st.m) - st.mu * std::pow(r, st.m - 2.0)) / (v * v * v * v);
  };
  const PolytopeSpec pent = pentagon(2.0);
  auto outer = [&](double x1) {
    // x2 range of the pentagon slice at fixed x1
    const double lo = -1.0, hi = std::min(1.0, 1.0 - x1);
    if (hi <= lo) return 0.0;
    return integrate([&](double x2) { return integrand_2d(x1, x2); }, {lo, hi},
                     {1e-12, 0.0, 2000});
  };
  const double direct = integrate(outer, {-1.0, 1.0}, {1e-11, 0.0, 4000});
  const Eigen::Vector4d r = constraint_residuals(st, {1e-12, 0.0, 2000});
  // residual (iv) is exactly the integral
  CHECK(std::abs(r(3) - direct) < 1e-8);
}

TEST_CASE("solve_constraints recovers the published solution") {
  const Eigen::Vector4d guess(-0.1, 1.0, -0.5, 0.3);
  const FamilySolution sol = solve_constraints(2.0, 2.0, guess, {1e-11, 0.0, 200});
  CHECK(sol.b == doctest::Approx(-0.0744357).epsilon(1e-4));
  CHECK(sol.c == doctest::Approx(1.00482).epsilon(1e-5));
  CHECK(sol.d == doctest::Approx(-0.463585).epsilon(1e-4));
  CHECK(sol.mu == doctest::Approx(0.282617).epsilon(1e-4));
}

TEST_CASE("solve_constraints rejects bad class parameters") {
  const Eigen::Vector4d guess(-0.1, 1.0, -0.5, 0.3);
  CHECK_THROWS_AS(solve_constraints(1.0, 2.0, guess), OutOfRange);
  CHECK_THROWS_AS(solve_constraints(2.0, 0.5, guess), OutOfRange);
}

TEST_CASE("limiting residuals exclude the Chen-LeBrun-Weber values") {
  const ResidualReport rep = clw_exclusion_check(2.0);
  CHECK(rep.pass);
  CHECK(rep.max_abs_residual > 0.01);
}
