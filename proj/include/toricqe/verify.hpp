#pragma once

#include <vector>

#include "toricqe/families.hpp"
#include "toricqe/report.hpp"

namespace toricqe {

// Residual checks run against a solved family.  Each returns a finalized
// ResidualReport; none throws on a mere tolerance failure (only on
// evaluation errors), so a full sweep can be reported even when one
// check fails.

/// z and z' boundary data at t = -a and t = 1.
ResidualReport check_boundary(const FamilySolution& sol);

/// Positivity of z and of the affine conformal-factor expressions on a
/// 1001-point grid over the class interval.
ResidualReport check_positivity(const FamilySolution& sol);

/// First-integral identity for the conformally Kaehler family, assembled
/// in both the Kaehler and the conformal gauge; the two assemblies must
/// also agree with each other.
ResidualReport check_kim_kim(const FamilySolution& sol);

/// Soliton identity and potential normalization for the Ricci-soliton
/// solution.
ResidualReport check_soliton_identity(const FamilySolution& sol);

/// Off-diagonal component of the (quasi-)Einstein equation at one point,
/// assembled from the invariant curvature formulas.
double quasi_einstein_residual(const FamilySolution& sol, const Eigen::Vector2d& x);

/// quasi_einstein_residual over a fixed set of off-diagonal interior points.
ResidualReport check_quasi_einstein(const FamilySolution& sol);

/// Compares the closed-form Ricci difference against a finite-difference
/// Ricci tensor computed from a reconstructed symplectic potential.
ResidualReport check_ricci_crosscheck(const FamilySolution& sol);

struct ConvergenceRow {
  double m;
  double b;
  double sup_sigma;      // sup |sigma_m| over the class interval
  double sup_phi_error;  // sup |phi_m - c_soliton * t|
};

/// Degeneration of the conformally Kaehler family onto the soliton as
/// m grows.
std::vector<ConvergenceRow> convergence_study(const std::vector<double>& m_list);

/// All checks applicable to the given family.
std::vector<ResidualReport> run_all_checks(const FamilySolution& sol);

}  // namespace toricqe
