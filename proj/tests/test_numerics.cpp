#include <cmath>

#include "doctest.h"
#include "toricqe/numerics.hpp"

using namespace toricqe;

TEST_CASE("integrate: polynomials are exact and smooth integrands converge") {
  CHECK(integrate([](double x) { return 3.0 * x * x; }, {0.0, 2.0}) == doctest::Approx(8.0).epsilon(1e-13));
  CHECK(integrate([](double x) { return std::exp(x); }, {-1.0, 1.0}) ==
        doctest::Approx(std::exp(1.0) - std::exp(-1.0)).epsilon(1e-13));
  // mild endpoint behaviour handled by adaptivity
  CHECK(integrate([](double x) { return std::sqrt(x); }, {0.0, 1.0}, {1e-12, 0.0, 2000}) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("integrate: linearity property") {
  auto f = [](double x) { return std::sin(3.0 * x); };
  auto g = [](double x) { return x * x * x - x; };
  const Interval iv{-0.7, 1.3};
  const double lhs = integrate([&](double x) { return 2.0 * f(x) - 5.0 * g(x); }, iv);
  const double rhs = 2.0 * integrate(f, iv) - 5.0 * integrate(g, iv);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("find_root_bracketed") {
  const double r = find_root_bracketed([](double x) { return x * x - 2.0; }, {0.0, 2.0});
  CHECK(r == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(find_root_bracketed([](double x) { return x * x + 1.0; }, {0.0, 2.0}),
                  NoSignChange);
}

TEST_CASE("real_roots_quartic recovers well-separated roots") {
  // (x-1)(x-2)(x-3)(x-4) = x^4 - 10x^3 + 35x^2 - 50x + 24
  const auto r = real_roots_quartic(1.0, -10.0, 35.0, -50.0, 24.0);
  REQUIRE(r.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(r[i] == doctest::Approx(i + 1.0).epsilon(1e-10));
}

TEST_CASE("real_roots_quartic: scaled coefficients, same roots") {
  const auto r1 = real_roots_quartic(2.0, -3.0, -7.0, 1.0, 0.5);
  const auto r2 = real_roots_quartic(-6.0, 9.0, 21.0, -3.0, -1.5);
  REQUIRE(r1.size() == r2.size());
  for (size_t i = 0; i < r1.size(); ++i) CHECK(r1[i] == doctest::Approx(r2[i]).epsilon(1e-9));
}

TEST_CASE("real_roots_quartic rejects degenerate leading coefficient") {
  CHECK_THROWS_AS(real_roots_quartic(0.0, 1.0, 0.0, 0.0, -1.0), DegenerateLeadingCoefficient);
}

TEST_CASE("solve_system on a 2x2 nonlinear system") {
  auto F = [](const Eigen::VectorXd& x) {
    Eigen::VectorXd r(2);
    r(0) = x(0) * x(0) + x(1) * x(1) - 4.0;
    r(1) = x(0) - x(1);
    return r;
  };
  Eigen::VectorXd x0(2);
  x0 << 1.0, 0.5;
  const Eigen::VectorXd x = solve_system(F, x0);
  CHECK(x(0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
  CHECK(x(1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
}

TEST_CASE("central_derivative orders 1 and 2") {
  auto f = [](double x) { return std::sin(x); };
  CHECK(central_derivative(f, 0.5, 1, 1e-5) == doctest::Approx(std::cos(0.5)).epsilon(1e-8));
  CHECK(central_derivative(f, 0.5, 2, 1e-4) == doctest::Approx(-std::sin(0.5)).epsilon(1e-6));
}

TEST_CASE("Chebyshev fit, evaluation, antiderivative") {
  const auto ch = Chebyshev::fit([](double x) { return std::exp(x); }, -1.5, 2.0, 64);
  CHECK(ch(0.3) == doctest::Approx(std::exp(0.3)).epsilon(1e-13));
  const auto anti = ch.antiderivative(0.0);
  CHECK(anti(1.0) == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-12));
  CHECK(anti(0.0) == doctest::Approx(0.0).epsilon(1e-12));
}
