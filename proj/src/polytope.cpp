#include "toricqe/polytope.hpp"

#include <cmath>

namespace toricqe {

PolytopeSpec trapezium(double a) {
  if (!(a > -1.0 && a < 2.0))
    throw OutOfRangeClassParameter("trapezium: a must lie in (-1, 2)");
  PolytopeSpec spec;
  spec.kind = PolytopeKind::Trapezium;
  spec.a = a;
  spec.functionals = {
      {1.0, {1.0, 0.0}},   // 1 + x1
      {1.0, {0.0, 1.0}},   // 1 + x2
      {1.0, {-1.0, -1.0}}, // 1 - x1 - x2
      {a, {1.0, 1.0}},     // a + x1 + x2
  };
  spec.vertices = {
      {-1.0, 1.0 - a},
      {1.0 - a, -1.0},
      {2.0, -1.0},
      {-1.0, 2.0},
  };
  return spec;
}

PolytopeSpec pentagon(double a) {
  if (!(a > 1.0)) throw OutOfRangeClassParameter("pentagon: a must exceed 1");
  PolytopeSpec spec;
  spec.kind = PolytopeKind::Pentagon;
  spec.a = a;
  spec.functionals = {
      {1.0, {1.0, 0.0}},          // 1 + x1
      {1.0, {0.0, 1.0}},          // 1 + x2
      {a - 1.0, {-1.0, 0.0}},     // a - 1 - x1
      {a - 1.0, {0.0, -1.0}},     // a - 1 - x2
      {a - 1.0, {-1.0, -1.0}},    // a - 1 - x1 - x2
  };
  spec.vertices = {
      {-1.0, -1.0},
      {a - 1.0, -1.0},
      {a - 1.0, 0.0},
      {0.0, a - 1.0},
      {-1.0, a - 1.0},
  };
  return spec;
}

bool contains(const PolytopeSpec& spec, const Eigen::Vector2d& x, double slack) {
  for (const auto& l : spec.functionals)
    if (!(l(x) > slack)) return false;
  return true;
}

double guillemin_term(const PolytopeSpec& spec, const Eigen::Vector2d& x) {
  double sum = 0.0;
  for (const auto& l : spec.functionals) {
    const double v = l(x);
    if (v <= 0.0) throw BoundaryEvaluation("guillemin_term: functional non-positive");
    sum += v * std::log(v);
  }
  return 0.5 * sum;
}

Interval t_range(const PolytopeSpec& spec) {
  if (spec.kind == PolytopeKind::Trapezium) return {-spec.a, 1.0};
  return {-2.0, spec.a - 1.0};
}

double slice_length(const PolytopeSpec& spec, double t) {
  const Interval r = t_range(spec);
  if (t < r.lo - 1e-12 || t > r.hi + 1e-12)
    throw OutOfRange("slice_length: t outside the polytope's t-range");
  if (spec.kind == PolytopeKind::Trapezium) return t + 2.0;
  // pentagon: linear up to the breakpoint t = a-2, then decreasing
  if (t <= spec.a - 2.0) return t + 2.0;
  return 2.0 * (spec.a - 1.0) - t;
}

double polygon_area(const PolytopeSpec& spec) {
  double sum = 0.0;
  const auto& v = spec.vertices;
  for (size_t i = 0; i < v.size(); ++i) {
    const auto& p = v[i];
    const auto& q = v[(i + 1) % v.size()];
    sum += p.x() * q.y() - q.x() * p.y();
  }
  return 0.5 * sum;
}

}  // namespace toricqe
