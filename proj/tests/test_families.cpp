#include <cmath>

#include "doctest.h"
#include "toricqe/families.hpp"

using namespace toricqe;

TEST_CASE("lpp objective at b = 0 has the closed form (1/2)^{m-2}(2/3)") {
  for (double m : {2.0, 3.0, 5.0, 50.0}) {
    const double expected = std::pow(0.5, m - 2.0) * (2.0 / 3.0);
    CHECK(lpp_objective_I(1e-12, m) == doctest::Approx(expected).epsilon(1e-11));
    CHECK(lpp_objective_I(1.0 / std::sqrt(24.0) - 1e-12, m) < 0.0);
  }
}

TEST_CASE("lpp m=2 constants") {
  const FamilySolution sol = lpp_solve(2.0);
  CHECK(sol.b == doctest::Approx(0.076527).epsilon(1e-4));
  CHECK(sol.c == doctest::Approx(1.002924).epsilon(1e-4));
  CHECK(sol.d == doctest::Approx(-0.588325).epsilon(1e-4));
  CHECK(sol.mu == doctest::Approx(0.166036).epsilon(1e-4));
  CHECK(lpp_potential_halfspan(sol) == doctest::Approx(0.37344).epsilon(1e-3));
}

TEST_CASE("lpp m=50 constants and near-linear potential") {
  const FamilySolution sol = lpp_solve(50.0);
  CHECK(sol.b == doctest::Approx(0.005120).epsilon(1e-3));
  CHECK(sol.c == doctest::Approx(1.000013).epsilon(1e-6));
  CHECK(sol.d == doctest::Approx(-0.505167).epsilon(1e-4));
  CHECK(lpp_potential_halfspan(sol) == doctest::Approx(0.517374).epsilon(1e-4));
}

TEST_CASE("lpp profile satisfies its first-order ODE") {
  const FamilySolution sol = lpp_solve(2.0);
  for (double t : {-0.9, -0.5, 0.0, 0.4, 0.8})
    CHECK(lpp_ode_residual(sol, t) == doctest::Approx(0.0).epsilon(1e-10));
  // boundary data
  const auto [zlo, zplo] = evaluate_z(sol, -1.0);
  const auto [zhi, zphi] = evaluate_z(sol, 1.0);
  CHECK(std::abs(zlo) < 1e-14);
  CHECK(std::abs(zhi) < 1e-8);
  CHECK(zplo == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(zphi == doctest::Approx(-1.0 / 3.0).epsilon(1e-6));
}

TEST_CASE("lpp rejects m <= 1") {
  CHECK_THROWS_AS(lpp_solve(0.5), OutOfRange);
}

TEST_CASE("page closed-form solution") {
  const FamilySolution sol = page_solve();
  CHECK(sol.a == doctest::Approx(1.057769).epsilon(1e-5));
  CHECK(3.0 / (2.0 - sol.a) == doctest::Approx(3.183933).epsilon(1e-5));
  // quartic root, exactly
  const double a = sol.a;
  CHECK(3 * a * a * a * a - 8 * a * a * a - 42 * a * a + 168 * a - 125 ==
        doctest::Approx(0.0).epsilon(1e-10));
  // profile boundary derivatives from the closed form
  const auto [zlo, zplo] = evaluate_z(sol, -a);
  const auto [zhi, zphi] = evaluate_z(sol, 1.0);
  CHECK(std::abs(zlo) < 1e-14);
  CHECK(std::abs(zhi) < 1e-14);
  CHECK(zplo == doctest::Approx(1.0 / (2.0 - a)).epsilon(1e-10));
  CHECK(zphi == doctest::Approx(-1.0 / 3.0).epsilon(1e-10));
  // ODE residual on a few points
  for (double t : {-0.9, -0.3, 0.2, 0.7})
    CHECK(family_ode_residual(sol, t) == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("koiso-cao constants, ODE, boundary") {
  const FamilySolution sol = koiso_cao_solve();
  CHECK(sol.c == doctest::Approx(0.5276).epsilon(1e-3));
  CHECK(sol.d == doctest::Approx(-6.91561).epsilon(1e-4));
  const auto [zlo, zplo] = evaluate_z(sol, -1.0);
  const auto [zhi, zphi] = evaluate_z(sol, 1.0);
  CHECK(std::abs(zlo) < 1e-12);
  CHECK(std::abs(zhi) < 1e-10);
  CHECK(zplo == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(zphi == doctest::Approx(-1.0 / 3.0).epsilon(1e-9));
  for (double t : {-0.8, -0.2, 0.3, 0.9})
    CHECK(family_ode_residual(sol, t) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("z positive inside the interval for all families") {
  for (const FamilySolution& sol : {lpp_solve(2.0), page_solve(), koiso_cao_solve()}) {
    for (int i = 1; i < 100; ++i) {
      const double t = -sol.a + (1.0 + sol.a) * i / 100.0;
      CHECK(sol.profile->z(t) > 0.0);
    }
  }
}

TEST_CASE("evaluate_z rejects out-of-interval t") {
  const FamilySolution sol = koiso_cao_solve();
  CHECK_THROWS_AS(evaluate_z(sol, 1.5), OutOfRange);
  CHECK_THROWS_AS(evaluate_z(sol, -1.2), OutOfRange);
}

TEST_CASE("from-constants round trip preserves constants") {
  const FamilySolution sol = lpp_solve(2.0);
  const FamilySolution re = lpp_from_constants(sol.m, sol.b, sol.c, sol.d, sol.mu);
  CHECK(re.b == sol.b);
  CHECK(re.profile->z(0.3) == doctest::Approx(sol.profile->z(0.3)).epsilon(1e-14));
}

TEST_CASE("family name round trip") {
  for (Family f : {Family::Lpp, Family::Page, Family::KoisoCao, Family::Cp2b2})
    CHECK(family_from_name(family_name(f)) == f);
  CHECK_THROWS_AS(family_from_name("nope"), InvalidDocument);
}
