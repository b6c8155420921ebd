#include "toricqe/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace toricqe {

namespace {

struct GaussRule {
  std::vector<double> node;    // on [-1, 1]
  std::vector<double> weight;
};

// Gauss-Legendre nodes by Newton iteration on P_n (three-term recurrence).
GaussRule gauss_legendre(int n) {
  GaussRule r;
  r.node.resize(n);
  r.weight.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    r.node[i] = -x;
    r.weight[i] = w;
    r.node[n - 1 - i] = x;
    r.weight[n - 1 - i] = w;
  }
  return r;
}

const GaussRule& rule7() {
  static const GaussRule r = gauss_legendre(7);
  return r;
}
const GaussRule& rule15() {
  static const GaussRule r = gauss_legendre(15);
  return r;
}

struct Panel {
  double lo, hi;
  double value;  // 15-point estimate
  double err;    // |G15 - G7|
};

Panel eval_panel(const ScalarFn& f, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double g7 = 0.0, g15 = 0.0;
  const GaussRule& r7 = rule7();
  const GaussRule& r15 = rule15();
  for (int i = 0; i < 7; ++i) g7 += r7.weight[i] * f(mid + half * r7.node[i]);
  for (int i = 0; i < 15; ++i) g15 += r15.weight[i] * f(mid + half * r15.node[i]);
  g7 *= half;
  g15 *= half;
  return {lo, hi, g15, std::abs(g15 - g7)};
}

}  // namespace

double integrate(const ScalarFn& f, Interval iv, SolverConfig cfg) {
  if (!(iv.lo < iv.hi) || !std::isfinite(iv.lo) || !std::isfinite(iv.hi))
    throw Error("integrate: interval requires finite lo < hi");

  auto worse = [](const Panel& a, const Panel& b) { return a.err < b.err; };
  std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> queue(worse);
  queue.push(eval_panel(f, iv.lo, iv.hi));
  double total = queue.top().value;
  double total_err = queue.top().err;

  for (int iter = 0; iter < cfg.max_iter; ++iter) {
    if (total_err <= cfg.abs_tol + cfg.rel_tol * std::abs(total)) return total;
    Panel p = queue.top();
    queue.pop();
    double mid = 0.5 * (p.lo + p.hi);
    if (mid <= p.lo || mid >= p.hi) return total;  // interval exhausted to ulp
    Panel a = eval_panel(f, p.lo, mid);
    Panel b = eval_panel(f, mid, p.hi);
    total += a.value + b.value - p.value;
    total_err += a.err + b.err - p.err;
    queue.push(a);
    queue.push(b);
  }
  // the running error total accumulates drift over many updates;
  // re-sum it exactly before concluding failure
  total = 0.0;
  total_err = 0.0;
  while (!queue.empty()) {
    total += queue.top().value;
    total_err += queue.top().err;
    queue.pop();
  }
  if (total_err <= cfg.abs_tol + cfg.rel_tol * std::abs(total)) return total;
  throw NonConvergence("integrate: error estimate above tolerance after max_iter refinements");
}

double find_root_bracketed(const ScalarFn& f, Interval iv, SolverConfig cfg) {
  double a = iv.lo, b = iv.hi;
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0) throw NoSignChange("find_root_bracketed: f(lo) and f(hi) have the same sign");

  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int iter = 0; iter < cfg.max_iter; ++iter) {
    if (fb * fc > 0.0) {
      c = a;
      fc = fa;
      e = d = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol1 = 2.0 * 1e-16 * std::abs(b) + 0.5 * cfg.abs_tol;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) return b;
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      // inverse quadratic / secant step
      double p, q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      const double min1 = 3.0 * xm * q - std::abs(tol1 * q);
      const double min2 = std::abs(e * q);
      if (2.0 * p < std::min(min1, min2)) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol1) ? d : (xm > 0 ? tol1 : -tol1);
    fb = f(b);
  }
  throw NonConvergence("find_root_bracketed: max_iter exceeded");
}

namespace {

// All real roots of a monic cubic x^3 + a2 x^2 + a1 x + a0.
std::vector<double> real_roots_cubic_monic(double a2, double a1, double a0) {
  const double q = (3.0 * a1 - a2 * a2) / 9.0;
  const double r = (9.0 * a2 * a1 - 27.0 * a0 - 2.0 * a2 * a2 * a2) / 54.0;
  const double disc = q * q * q + r * r;
  std::vector<double> roots;
  if (disc >= 0.0) {
    const double sq = std::sqrt(disc);
    const double s = std::cbrt(r + sq);
    const double t = std::cbrt(r - sq);
    roots.push_back(s + t - a2 / 3.0);
  } else {
    const double rho = std::sqrt(-q * q * q);
    const double theta = std::acos(std::clamp(r / rho, -1.0, 1.0));
    const double mag = 2.0 * std::sqrt(-q);
    for (int k = 0; k < 3; ++k)
      roots.push_back(mag * std::cos((theta + 2.0 * M_PI * k) / 3.0) - a2 / 3.0);
  }
  return roots;
}

void real_roots_quadratic_monic(double b, double c, std::vector<double>* out) {
  const double disc = b * b - 4.0 * c;
  if (disc < 0.0) return;
  const double sq = std::sqrt(disc);
  const double q = -0.5 * (b + (b >= 0 ? sq : -sq));
  out->push_back(q);
  if (q != 0.0)
    out->push_back(c / q);
  else
    out->push_back(-b - q);
}

}  // namespace

std::vector<double> real_roots_quartic(double c4, double c3, double c2, double c1, double c0) {
  if (c4 == 0.0)
    throw DegenerateLeadingCoefficient("real_roots_quartic: leading coefficient is zero");

  const double b = c3 / c4, c = c2 / c4, d = c1 / c4, e = c0 / c4;
  // depressed form x = y - b/4 : y^4 + p y^2 + q y + r
  const double p = c - 3.0 * b * b / 8.0;
  const double q = d - b * c / 2.0 + b * b * b / 8.0;
  const double r = e - b * d / 4.0 + b * b * c / 16.0 - 3.0 * b * b * b * b / 256.0;

  std::vector<double> ys;
  const double scale = 1.0 + std::abs(p) + std::abs(r);
  if (std::abs(q) < 1e-13 * scale) {
    // biquadratic: y^2 solves u^2 + p u + r = 0
    std::vector<double> us;
    real_roots_quadratic_monic(p, r, &us);
    for (double u : us) {
      if (u < -1e-13 * scale) continue;
      const double y = std::sqrt(std::max(u, 0.0));
      ys.push_back(y);
      ys.push_back(-y);
    }
  } else {
    // resolvent cubic z^3 - p z^2 - 4 r z + (4 p r - q^2) = 0; pick the
    // root making alpha^2 = z - p largest (most stable factorization).
    std::vector<double> zs = real_roots_cubic_monic(-p, -4.0 * r, 4.0 * p * r - q * q);
    double z0 = zs[0];
    for (double z : zs)
      if (z - p > z0 - p) z0 = z;
    const double alpha2 = std::max(z0 - p, 0.0);
    const double alpha = std::sqrt(alpha2);
    if (alpha == 0.0) return {};  // cannot occur with q != 0 except at degenerate ties
    const double beta = 0.5 * (z0 - q / alpha);
    const double gamma = 0.5 * (z0 + q / alpha);
    real_roots_quadratic_monic(alpha, beta, &ys);
    real_roots_quadratic_monic(-alpha, gamma, &ys);
  }

  auto poly = [&](double x) { return (((c4 * x + c3) * x + c2) * x + c1) * x + c0; };
  auto dpoly = [&](double x) { return ((4.0 * c4 * x + 3.0 * c3) * x + 2.0 * c2) * x + c1; };

  std::vector<double> roots;
  for (double y : ys) {
    double x = y - b / 4.0;
    for (int it = 0; it < 50; ++it) {
      const double fx = poly(x);
      const double dx = dpoly(x);
      if (dx == 0.0) break;
      const double step = fx / dx;
      x -= step;
      if (std::abs(step) < 1e-14 * (1.0 + std::abs(x))) break;
    }
    roots.push_back(x);
  }
  std::sort(roots.begin(), roots.end());
  std::vector<double> out;
  for (double x : roots) {
    if (!out.empty() && std::abs(x - out.back()) < 1e-8 * (1.0 + std::abs(x))) continue;
    out.push_back(x);
  }
  return out;
}

Eigen::VectorXd solve_system(const VectorFn& F, Eigen::VectorXd x0, SolverConfig cfg) {
  Eigen::VectorXd x = std::move(x0);
  Eigen::VectorXd fx = F(x);
  const int n = static_cast<int>(x.size());
  if (fx.size() != n) throw Error("solve_system: F output dimension mismatch");

  for (int iter = 0; iter < cfg.max_iter; ++iter) {
    if (fx.lpNorm<Eigen::Infinity>() <= cfg.abs_tol) return x;

    Eigen::MatrixXd J(n, n);
    for (int j = 0; j < n; ++j) {
      const double h = std::max(1e-7, 1e-7 * std::abs(x[j]));
      Eigen::VectorXd xh = x;
      xh[j] += h;
      J.col(j) = (F(xh) - fx) / h;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(J, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double smax = svd.singularValues()(0);
    const double smin = svd.singularValues()(n - 1);
    if (!(smin > 0.0) || smax / smin > 1e14)
      throw SingularJacobian("solve_system: Jacobian condition estimate above 1e14");
    const Eigen::VectorXd dx = svd.solve(-fx);

    double lambda = 1.0;
    Eigen::VectorXd xn, fn;
    const double f0 = fx.norm();
    while (true) {
      xn = x + lambda * dx;
      fn = F(xn);
      if (fn.norm() < f0 || fn.lpNorm<Eigen::Infinity>() <= cfg.abs_tol) break;
      lambda *= 0.5;
      if (lambda < 1e-12)
        throw NonConvergence("solve_system: line search failed");
    }
    x = xn;
    fx = fn;
  }
  if (fx.lpNorm<Eigen::Infinity>() <= cfg.abs_tol) return x;
  throw NonConvergence("solve_system: max_iter exceeded");
}

double central_derivative(const ScalarFn& f, double x, int order, double h) {
  if (order == 1) return (f(x + h) - f(x - h)) / (2.0 * h);
  if (order == 2) return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
  throw Error("central_derivative: order must be 1 or 2");
}

Chebyshev Chebyshev::fit(const ScalarFn& f, double lo, double hi, int n) {
  std::vector<double> fv(n);
  for (int k = 0; k < n; ++k) {
    const double y = std::cos(M_PI * (k + 0.5) / n);
    fv[k] = f(0.5 * (hi - lo) * y + 0.5 * (hi + lo));
  }
  std::vector<double> coef(n);
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int k = 0; k < n; ++k) s += fv[k] * std::cos(M_PI * j * (k + 0.5) / n);
    coef[j] = 2.0 * s / n;
  }
  return Chebyshev(lo, hi, std::move(coef));
}

double Chebyshev::operator()(double x) const {
  const double y = (2.0 * x - lo_ - hi_) / (hi_ - lo_);
  const double y2 = 2.0 * y;
  double d = 0.0, dd = 0.0;
  for (int j = static_cast<int>(coef_.size()) - 1; j >= 1; --j) {
    const double sv = d;
    d = y2 * d - dd + coef_[j];
    dd = sv;
  }
  return y * d - dd + 0.5 * coef_[0];
}

Chebyshev Chebyshev::antiderivative(double x0) const {
  const int n = static_cast<int>(coef_.size());
  std::vector<double> ci(n, 0.0);
  const double con = 0.25 * (hi_ - lo_);
  for (int j = 1; j < n - 1; ++j) ci[j] = con * (coef_[j - 1] - coef_[j + 1]) / j;
  if (n >= 2) ci[n - 1] = con * coef_[n - 2] / (n - 1);
  Chebyshev out(lo_, hi_, std::move(ci));
  out.coef_[0] = 0.0;
  out.coef_[0] = -2.0 * out(x0);
  return out;
}

}  // namespace toricqe
