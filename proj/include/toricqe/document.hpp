#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toricqe/families.hpp"
#include "toricqe/report.hpp"

namespace toricqe {

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kBuildIdentifier = "toricqe 0.1.0";

/// Self-describing record of a solved family: enough constants to
/// reconstruct the solution without re-solving, plus the residual table
/// of the checks that were run when it was produced.
struct SolutionDocument {
  std::string schema_version = kSchemaVersion;
  std::string family;
  double a = 0.0;
  std::optional<double> m;
  std::map<std::string, double> constants;

  struct ResidualLine {
    std::string check;
    double max_abs;
    double tolerance;
    bool pass;
  };
  std::vector<ResidualLine> residual_summary;

  struct Provenance {
    double abs_tol = 0.0;
    double rel_tol = 0.0;
    int max_iter = 0;
    std::string build = kBuildIdentifier;
  };
  Provenance provenance;
};

SolutionDocument document_from_solution(const FamilySolution& sol,
                                        const std::vector<ResidualReport>& reports,
                                        const SolverConfig& cfg);

/// Rebuild the family from the stored constants, exactly as given.
FamilySolution solution_from_document(const SolutionDocument& doc);

std::string to_json_text(const SolutionDocument& doc);
SolutionDocument document_from_json_text(const std::string& text);

/// Write-then-rename so readers never observe a partial file.
void write_text_atomic(const std::string& path, const std::string& text);

/// CSV profile grid, header exactly `t,z,F,phi,sigma,ode_residual`,
/// 17-significant-digit reals, LF line endings, `samples` uniform t
/// values over the class interval (endpoints included).
std::string profile_csv_text(const FamilySolution& sol, int samples);

/// gnuplot script plotting z, phi, sigma from the named CSV.
std::string plot_script_text(const std::string& csv_path);

}  // namespace toricqe
