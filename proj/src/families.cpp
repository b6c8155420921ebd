#include "toricqe/families.hpp"

#include <cmath>
#include <cstdio>

namespace toricqe {

std::string family_name(Family f) {
  switch (f) {
    case Family::Lpp: return "lpp";
    case Family::Page: return "page";
    case Family::KoisoCao: return "koiso-cao";
    case Family::Cp2b2: return "cp2b2";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  if (name == "lpp") return Family::Lpp;
  if (name == "page") return Family::Page;
  if (name == "koiso-cao") return Family::KoisoCao;
  if (name == "cp2b2") return Family::Cp2b2;
  throw InvalidDocument("unknown family: " + name);
}

namespace {

struct LppConstants {
  double b, c, d, mu;
};

LppConstants lpp_constants(double b) {
  LppConstants k;
  k.b = b;
  k.c = std::sqrt(1.0 + b * b);
  k.d = 1.0 / (2.0 * (2.0 * b - k.c));
  k.mu = k.d * k.d + 4.0 * b * k.d;
  return k;
}

double lpp_integrand_k(const LppConstants& k, double m, double s) {
  const double v = k.b * s + k.c;
  const double w = k.d * k.b * s + k.d * k.c + 1.0;
  if (v <= 0.0 || w <= 0.0)
    throw PositivityViolation("lpp_integrand: non-positive power base");
  return ((2.0 + s) - 2.0 * v * v) * std::exp(-(m + 4.0) * std::log(v)) *
         std::exp((m - 2.0) * std::log(w)) * (2.0 + s);
}

// z = prefactor(t) * J(t) with J(t) the running integral from -1.
double lpp_prefactor(const LppConstants& k, double m, double t) {
  const double v = k.b * t + k.c;
  const double w = k.d * k.b * t + k.d * k.c + 1.0;
  return k.d * std::exp((m + 3.0) * std::log(v)) /
         (std::exp((m - 1.0) * std::log(w)) * (2.0 + t) * (2.0 + t));
}

double lpp_running_integral(const LppConstants& k, double m, double t) {
  if (t <= -1.0) return 0.0;
  // the running integral tends to 0 again at t = 1, so rely on the
  // absolute term; 1e-14 sits safely above the G7/G15 roundoff floor
  SolverConfig q{1e-14, 1e-12, 4000};
  return integrate([&](double s) { return lpp_integrand_k(k, m, s); }, {-1.0, t}, q);
}

Profile lpp_profile(const LppConstants& k, double m) {
  Profile p;
  p.a = 1.0;
  p.z = [k, m](double t) {
    if (t <= -1.0) return 0.0;
    return lpp_prefactor(k, m, t) * lpp_running_integral(k, m, t);
  };
  p.z_prime = [k, m](double t) {
    const double pre = lpp_prefactor(k, m, t);
    const double dlog = (m + 3.0) * k.b / (k.b * t + k.c) -
                        (m - 1.0) * k.d * k.b / (k.d * k.b * t + k.d * k.c + 1.0) -
                        2.0 / (2.0 + t);
    const double J = lpp_running_integral(k, m, t);
    return pre * dlog * J + pre * lpp_integrand_k(k, m, t);
  };
  return p;
}

void require_positivity(double a, double b, double c, std::optional<double> d) {
  // both expressions are affine in t, so endpoint checks suffice
  for (double t : {-a, 1.0}) {
    if (b * t + c <= 0.0)
      throw PositivityViolation("family solution: b t + c <= 0 on the class interval");
    if (d && *d * b * t + *d * c + 1.0 <= 0.0)
      throw PositivityViolation("family solution: d b t + d c + 1 <= 0 on the class interval");
  }
}

}  // namespace

double lpp_integrand(double b, double m, double s) {
  return lpp_integrand_k(lpp_constants(b), m, s);
}

double lpp_objective_I(double b, double m, SolverConfig cfg) {
  const LppConstants k = lpp_constants(b);
  return integrate([&](double s) { return lpp_integrand_k(k, m, s); }, {-1.0, 1.0}, cfg);
}

FamilySolution lpp_solve(double m, SolverConfig cfg) {
  if (!(m > 1.0)) throw OutOfRange("lpp_solve: m must exceed 1");
  const double bmax = 1.0 / std::sqrt(24.0);

  // scan for sign changes; take the smallest bracket
  const int n_scan = 64;
  double lo = std::numeric_limits<double>::quiet_NaN();
  double hi = std::numeric_limits<double>::quiet_NaN();
  int brackets = 0;
  double prev_b = 1e-9, prev_I = lpp_objective_I(prev_b, m);
  for (int i = 1; i <= n_scan; ++i) {
    const double bi = 1e-9 + (bmax - 2e-9) * i / n_scan;
    const double Ii = lpp_objective_I(bi, m);
    if (prev_I * Ii < 0.0) {
      ++brackets;
      if (brackets == 1) {
        lo = prev_b;
        hi = bi;
      }
    }
    prev_b = bi;
    prev_I = Ii;
  }
  if (brackets == 0) throw NoSignChange("lpp_solve: no admissible b in (0, 1/sqrt(24))");
  if (brackets > 1)
    std::fprintf(stderr, "lpp_solve: warning: %d sign changes of I(b); taking the smallest root\n",
                 brackets);

  const double b = find_root_bracketed([&](double x) { return lpp_objective_I(x, m); },
                                       {lo, hi}, cfg);
  const LppConstants k = lpp_constants(b);
  return lpp_from_constants(m, k.b, k.c, k.d, k.mu);
}

FamilySolution lpp_from_constants(double m, double b, double c, double d, double mu) {
  const LppConstants k{b, c, d, mu};
  require_positivity(1.0, k.b, k.c, k.d);
  FamilySolution sol;
  sol.family = Family::Lpp;
  sol.a = 1.0;
  sol.m = m;
  sol.b = k.b;
  sol.c = k.c;
  sol.d = k.d;
  sol.mu = k.mu;
  sol.profile = lpp_profile(k, m);
  sol.conformal = {ConformalData::Form::LogAffine, k.b, k.c, k.d, m};
  return sol;
}

double lpp_potential_halfspan(const FamilySolution& sol) {
  return 0.5 * (sol.conformal.phi(1.0) - sol.conformal.phi(-1.0));
}

double lpp_ode_residual(const FamilySolution& sol, double t) {
  const double pole = sol.b * t + 4.0 * sol.b - sol.c;
  if (std::abs(pole) < 1e-10) throw PoleEvaluation("lpp_ode_residual: b t + 4b - c near zero");
  const auto [z, zp] = evaluate_z(sol, t);
  const double v = sol.b * t + sol.c;
  const double w = sol.d * sol.b * t + sol.d * sol.c + 1.0;
  const double coeff = 2.0 / (2.0 + t) - 3.0 * sol.b / v - sol.b / pole -
                       sol.m * sol.b / (w * v);
  const double source = (2.0 * v * v - (2.0 + t)) / ((2.0 + t) * v * pole);
  return zp + coeff * z + source;
}

namespace {

double page_ode_residual(const FamilySolution& sol, double t) {
  const double pole = sol.b * t + 4.0 * sol.b - sol.c;
  if (std::abs(pole) < 1e-10) throw PoleEvaluation("page ODE: b t + 4b - c near zero");
  const auto [z, zp] = evaluate_z(sol, t);
  const double v = sol.b * t + sol.c;
  const double coeff = 2.0 / (2.0 + t) - 3.0 * sol.b / v - sol.b / pole;
  const double source = (2.0 * v * v - (2.0 + t)) / ((2.0 + t) * v * pole);
  return zp + coeff * z + source;
}

double koiso_cao_ode_residual(const FamilySolution& sol, double t) {
  const auto [z, zp] = evaluate_z(sol, t);
  return zp + (2.0 - sol.c * (2.0 + t)) / (2.0 + t) * z + t / (2.0 + t);
}

}  // namespace

double family_ode_residual(const FamilySolution& sol, double t) {
  switch (sol.family) {
    case Family::Lpp: return lpp_ode_residual(sol, t);
    case Family::Page: return page_ode_residual(sol, t);
    case Family::KoisoCao: return koiso_cao_ode_residual(sol, t);
    case Family::Cp2b2: throw Error("family_ode_residual: cp2b2 has no profile ODE");
  }
  throw Error("family_ode_residual: bad family");
}

FamilySolution page_solve(SolverConfig cfg) {
  (void)cfg;  // fully closed-form apart from the quartic polish
  const auto roots = real_roots_quartic(3.0, -8.0, -42.0, 168.0, -125.0);
  double astar = std::numeric_limits<double>::quiet_NaN();
  for (double r : roots)
    if (r > 1.0 && r < 2.0) astar = r;
  if (!std::isfinite(astar))
    throw NoAdmissibleRoot("page_solve: no quartic root in (1, 2)");

  const double den = (1.0 + astar) * (astar * astar - 16.0 * astar + 37.0);
  const double A = 2.0 * (astar - 2.0) / den;
  const double B = (astar * astar + 10.0 * astar - 33.0) / den;
  const double C = -2.0 * (2.0 * astar * astar - 18.0 * astar + 37.0) / den;

  const double r = (3.0 * astar * astar - 4.0 * astar - 13.0) / (4.0 * (astar - 2.0));
  if (!(r > 1.0)) throw NoAdmissibleRoot("page_solve: c/b ratio does not admit b > 0");
  const double b = 1.0 / std::sqrt(r * r - 1.0);
  const double c = r * b;
  return page_from_constants(astar, A, B, C, b, c);
}

FamilySolution page_from_constants(double astar, double A, double B, double C, double b,
                                   double c) {
  require_positivity(astar, b, c, std::nullopt);

  FamilySolution sol;
  sol.family = Family::Page;
  sol.a = astar;
  sol.b = b;
  sol.c = c;
  sol.A = A;
  sol.B = B;
  sol.C = C;
  Profile p;
  p.a = astar;
  p.z = [astar, A, B, C](double t) {
    return (t - 1.0) * (t + astar) * (A * t * t + B * t + C) / ((t + 2.0) * (t + 2.0));
  };
  p.z_prime = [astar, A, B, C](double t) {
    const double quad = A * t * t + B * t + C;
    const double num = (t + astar) * quad + (t - 1.0) * quad +
                       (t - 1.0) * (t + astar) * (2.0 * A * t + B);
    const double t2 = t + 2.0;
    return num / (t2 * t2) - 2.0 * (t - 1.0) * (t + astar) * quad / (t2 * t2 * t2);
  };
  sol.profile = std::move(p);
  sol.conformal = {ConformalData::Form::LogAffine, b, c, std::nullopt, std::nullopt};
  return sol;
}

FamilySolution koiso_cao_solve(SolverConfig cfg) {
  auto f = [](double c) {
    return std::exp(2.0 * c) * (c * c - 2.0) + 3.0 * c * c + 4.0 * c + 2.0;
  };
  const double c = find_root_bracketed(f, {0.1, 1.0}, cfg);
  const double d = (c * c - 2.0) / (c * c * c * std::exp(c));
  return koiso_cao_from_constants(c, d);
}

FamilySolution koiso_cao_from_constants(double c, double d) {
  FamilySolution sol;
  sol.family = Family::KoisoCao;
  sol.a = 1.0;
  sol.c = c;
  sol.d = d;
  Profile p;
  p.a = 1.0;
  p.z = [c, d](double t) {
    const double t2 = t + 2.0;
    return d * std::exp(c * t2) / (t2 * t2) +
           (c * c * t * t2 + 2.0 * c * (t + 1.0) + 2.0) / (c * c * c * t2 * t2);
  };
  p.z_prime = [c, d](double t) {
    const double t2 = t + 2.0;
    const double term1 = d * std::exp(c * t2) * (c * t2 - 2.0) / (t2 * t2 * t2);
    const double N = c * c * t * t2 + 2.0 * c * (t + 1.0) + 2.0;
    const double Np = 2.0 * c * c * t + 2.0 * c * c + 2.0 * c;
    return term1 + Np / (c * c * c * t2 * t2) - 2.0 * N / (c * c * c * t2 * t2 * t2);
  };
  sol.profile = std::move(p);
  // sigma = 0 (already Kaehler); phi = c t, slope in the b-slot
  sol.conformal = {ConformalData::Form::SolitonLinear, c, 1.0, std::nullopt, std::nullopt};
  return sol;
}

FamilySolution cp2b2_from_constants(double a, double m, double b, double c, double d,
                                    double mu) {
  // affine in t, so endpoint checks on the pentagon interval [-2, a-1] suffice
  for (double t : {-2.0, a - 1.0}) {
    if (b * t + c <= 0.0)
      throw PositivityViolation("cp2b2 solution: b t + c <= 0 on [-2, a-1]");
    if (d * b * t + d * c + 1.0 <= 0.0)
      throw PositivityViolation("cp2b2 solution: d b t + d c + 1 <= 0 on [-2, a-1]");
  }
  FamilySolution sol;
  sol.family = Family::Cp2b2;
  sol.a = a;
  sol.m = m;
  sol.b = b;
  sol.c = c;
  sol.d = d;
  sol.mu = mu;
  sol.conformal = {ConformalData::Form::LogAffine, b, c, d, m};
  return sol;
}

std::pair<double, double> evaluate_z(const FamilySolution& sol, double t) {
  if (!sol.profile) throw Error("evaluate_z: family has no profile");
  if (t < -sol.a - 1e-12 || t > 1.0 + 1e-12)
    throw OutOfRange("evaluate_z: t outside [-a, 1]");
  return {sol.profile->z(t), sol.profile->z_prime(t)};
}

}  // namespace toricqe
