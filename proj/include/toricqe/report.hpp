#pragma once

#include <string>
#include <vector>

namespace toricqe {

/// Named residual maximum over a grid, judged against a tolerance.
struct ResidualReport {
  std::string name;
  std::vector<double> grid;
  double max_abs_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string notes;

  void finalize() { pass = max_abs_residual <= tolerance; }
};

}  // namespace toricqe
