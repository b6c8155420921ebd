#pragma once

#include <limits>
#include <optional>
#include <string>

#include "toricqe/invariant_geometry.hpp"
#include "toricqe/numerics.hpp"

namespace toricqe {

enum class Family { Lpp, Page, KoisoCao, Cp2b2 };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// A solved metric family.  Fields not used by a family are NaN.
///   Lpp:      a = 1, m, b, c, d, mu, profile, conformal
///   Page:     a = quartic root, b, c, A, B, C, profile, conformal
///   KoisoCao: a = 1, c, d, profile, conformal (sigma = 0, phi = c t)
///   Cp2b2:    a, m, b, c, d, mu only (the constraint system gives no z)
struct FamilySolution {
  Family family;
  double a = std::numeric_limits<double>::quiet_NaN();
  double m = std::numeric_limits<double>::quiet_NaN();
  double b = std::numeric_limits<double>::quiet_NaN();
  double c = std::numeric_limits<double>::quiet_NaN();
  double d = std::numeric_limits<double>::quiet_NaN();
  double mu = std::numeric_limits<double>::quiet_NaN();
  double A = std::numeric_limits<double>::quiet_NaN();
  double B = std::numeric_limits<double>::quiet_NaN();
  double C = std::numeric_limits<double>::quiet_NaN();
  std::optional<Profile> profile;
  ConformalData conformal;
};

/// Integrand of I(b): ((2+s) - 2(bs+c)^2)/(bs+c)^{m+4} (dbs+dc+1)^{m-2} (2+s)
/// with c = sqrt(1+b^2), d = 1/(2(2b-c)).
double lpp_integrand(double b, double m, double s);

/// I(b) by adaptive quadrature over [-1, 1].
double lpp_objective_I(double b, double m, SolverConfig cfg = {1e-14, 1e-12, 2000});

/// Solve for the compatible b in (0, 1/sqrt(24)) and assemble the family.
/// If the 64-point scan finds more than one bracket, the smallest root is
/// taken and a warning is printed.
FamilySolution lpp_solve(double m, SolverConfig cfg = {});

/// (phi(1) - phi(-1))/2 for a solved family.
double lpp_potential_halfspan(const FamilySolution& sol);

/// Residual of the first-order z-ODE at t.
double lpp_ode_residual(const FamilySolution& sol, double t);

/// Residual of the family's defining z-ODE (dispatches on the family).
double family_ode_residual(const FamilySolution& sol, double t);

/// Conformally Einstein metric: quartic class parameter, factored rational z.
FamilySolution page_solve(SolverConfig cfg = {});

/// Kaehler-Ricci soliton: transcendental c, closed-form z, phi = c t.
FamilySolution koiso_cao_solve(SolverConfig cfg = {});

/// (z, z') at t from the family's closed form.
std::pair<double, double> evaluate_z(const FamilySolution& sol, double t);

/// Rebuild solutions from stored constants (no solving); used when
/// verifying serialized documents.  The constants are taken as-is.
FamilySolution lpp_from_constants(double m, double b, double c, double d, double mu);
FamilySolution page_from_constants(double astar, double A, double B, double C, double b, double c);
FamilySolution koiso_cao_from_constants(double c, double d);
FamilySolution cp2b2_from_constants(double a, double m, double b, double c, double d, double mu);

}  // namespace toricqe
