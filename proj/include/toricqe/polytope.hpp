#pragma once

#include <Eigen/Dense>
#include <vector>

#include "toricqe/errors.hpp"
#include "toricqe/numerics.hpp"

namespace toricqe {

/// l(x) = constant + normal . x
struct AffineFunctional {
  double constant;
  Eigen::Vector2d normal;

  double operator()(const Eigen::Vector2d& x) const { return constant + normal.dot(x); }
};

enum class PolytopeKind { Trapezium, Pentagon };

/// One of the two moment polytopes, with the class parameter a that fixes
/// the volume of the exceptional divisor(s).
struct PolytopeSpec {
  PolytopeKind kind;
  double a;
  std::vector<AffineFunctional> functionals;
  std::vector<Eigen::Vector2d> vertices;  // counterclockwise
};

/// Trapezium l1 = 1+x1, l2 = 1+x2, l3 = 1-x1-x2, l4 = a+x1+x2, a in (-1,2).
PolytopeSpec trapezium(double a);

/// Pentagon l1 = 1+x1, l2 = 1+x2, l3 = a-1-x1, l4 = a-1-x2,
/// l5 = a-1-x1-x2, a > 1.
PolytopeSpec pentagon(double a);

/// True iff every functional exceeds slack at x.
bool contains(const PolytopeSpec& spec, const Eigen::Vector2d& x, double slack = 0.0);

/// (1/2) sum l_i(x) log l_i(x); throws BoundaryEvaluation if some l_i <= 0.
double guillemin_term(const PolytopeSpec& spec, const Eigen::Vector2d& x);

/// Range of t = x1 + x2 over the polytope.
Interval t_range(const PolytopeSpec& spec);

/// Length of the slice {x in P : x1 + x2 = t} projected to x1.
double slice_length(const PolytopeSpec& spec, double t);

/// Shoelace area of the stored vertex loop.
double polygon_area(const PolytopeSpec& spec);

}  // namespace toricqe
