// Command-line front end: solve the families, verify stored documents,
// and emit profile grids plus plot scripts.
//
// Exit codes: 0 success, 1 solver non-convergence, 2 invalid input,
// 3 verification failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "toricqe/cp2b2.hpp"
#include "toricqe/document.hpp"
#include "toricqe/verify.hpp"

namespace {

using namespace toricqe;

constexpr int kExitOk = 0;
constexpr int kExitSolver = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitVerify = 3;

void print_constants(const SolutionDocument& doc) {
  std::printf("family: %s   a = %.17g", doc.family.c_str(), doc.a);
  if (doc.m) std::printf("   m = %.17g", *doc.m);
  std::printf("\n");
  for (const auto& [k, v] : doc.constants) std::printf("  %-6s = %.17g\n", k.c_str(), v);
}

void print_reports(const std::vector<ResidualReport>& reports) {
  for (const auto& r : reports) {
    std::printf("  %-48s max %.3e  tol %.1e  %s\n", r.name.c_str(), r.max_abs_residual,
                r.tolerance, r.pass ? "pass" : "FAIL");
    if (!r.notes.empty()) std::printf("      %s\n", r.notes.c_str());
  }
}

std::string csv_path_for(const std::string& json_path) {
  const auto dot = json_path.rfind(".json");
  if (dot != std::string::npos && dot == json_path.size() - 5)
    return json_path.substr(0, dot) + ".csv";
  return json_path + ".csv";
}

// Solve-command epilogue: checks, document, optional files and stdout dump.
int emit(const FamilySolution& sol, const SolverConfig& cfg, const std::string& out,
         const std::string& json_to) {
  const auto reports = run_all_checks(sol);
  const SolutionDocument doc = document_from_solution(sol, reports, cfg);
  print_constants(doc);
  print_reports(reports);

  const std::string text = to_json_text(doc);
  if (json_to == "-") {
    std::fputs(text.c_str(), stdout);
  } else if (!json_to.empty()) {
    write_text_atomic(json_to, text);
  }
  if (!out.empty()) {
    write_text_atomic(out, text);
    if (sol.profile) write_text_atomic(csv_path_for(out), profile_csv_text(sol, 101));
  }
  return kExitOk;
}

int run(int argc, char** argv) {
  CLI::App app{"toric quasi-Einstein metrics on the one- and two-point blow-ups of CP^2"};
  app.require_subcommand(1);

  SolverConfig cfg;
  app.add_option("--abs-tol", cfg.abs_tol, "absolute tolerance")->capture_default_str();
  app.add_option("--rel-tol", cfg.rel_tol, "relative tolerance")->capture_default_str();
  app.add_option("--max-iter", cfg.max_iter, "iteration cap")->capture_default_str();

  std::string out, json_to;
  double m_lpp = 2.0;
  auto* lpp = app.add_subcommand("lpp", "conformally Kaehler quasi-Einstein family");
  lpp->add_option("--m", m_lpp, "quasi-Einstein parameter")->required();
  lpp->add_option("--out", out, "document path (CSV written alongside)");
  lpp->add_option("--json", json_to, "write document JSON here ('-' for stdout)");

  auto* page = app.add_subcommand("page", "Page Einstein metric");
  page->add_option("--out", out, "document path (CSV written alongside)");
  page->add_option("--json", json_to, "write document JSON here ('-' for stdout)");

  auto* kc = app.add_subcommand("koiso-cao", "Koiso-Cao Ricci soliton");
  kc->add_option("--out", out, "document path (CSV written alongside)");
  kc->add_option("--json", json_to, "write document JSON here ('-' for stdout)");

  double a_pent = 2.0, m_pent = 2.0;
  std::vector<double> guess = {-0.1, 1.0, -0.5, 0.3};
  auto* pent = app.add_subcommand("cp2b2", "pentagon constraint system");
  pent->add_option("--a", a_pent, "class parameter")->capture_default_str();
  pent->add_option("--m", m_pent, "quasi-Einstein parameter")->capture_default_str();
  pent->add_option("--guess", guess, "initial (b, c, d, mu)")->expected(4);
  pent->add_option("--out", out, "document path");
  pent->add_option("--json", json_to, "write document JSON here ('-' for stdout)");

  std::string doc_path;
  auto* verify = app.add_subcommand("verify", "re-check a stored document");
  verify->add_option("document", doc_path, "solution document path")->required();

  int samples = 101;
  std::string prof_out = "profile.csv";
  auto* profile = app.add_subcommand("profile", "emit a CSV grid and plot script");
  profile->add_option("document", doc_path, "solution document path")->required();
  profile->add_option("--samples", samples, "grid size")->capture_default_str();
  profile->add_option("--out", prof_out, "CSV path")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  if (lpp->parsed()) {
    if (!(m_lpp > 1.0)) {
      std::fprintf(stderr, "m must exceed 1\n");
      return kExitInvalid;
    }
    return emit(lpp_solve(m_lpp, cfg), cfg, out, json_to);
  }
  if (page->parsed()) return emit(page_solve(cfg), cfg, out, json_to);
  if (kc->parsed()) return emit(koiso_cao_solve(cfg), cfg, out, json_to);
  if (pent->parsed()) {
    if (!(a_pent > 1.0)) {
      std::fprintf(stderr, "a must exceed 1\n");
      return kExitInvalid;
    }
    if (!(m_pent > 1.0)) {
      std::fprintf(stderr, "m must exceed 1\n");
      return kExitInvalid;
    }
    const Eigen::Vector4d g(guess[0], guess[1], guess[2], guess[3]);
    return emit(solve_constraints(a_pent, m_pent, g, cfg), cfg, out, json_to);
  }

  // document-consuming subcommands
  std::ifstream in(doc_path, std::ios::binary);
  if (!in) {
    std::fprintf(stderr, "cannot read %s\n", doc_path.c_str());
    return kExitInvalid;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  const SolutionDocument doc = document_from_json_text(ss.str());
  const FamilySolution sol = solution_from_document(doc);

  if (verify->parsed()) {
    const auto reports = run_all_checks(sol);
    print_reports(reports);
    for (const auto& r : reports)
      if (!r.pass) return kExitVerify;
    return kExitOk;
  }

  // profile
  if (samples < 2) {
    std::fprintf(stderr, "samples must be at least 2\n");
    return kExitInvalid;
  }
  write_text_atomic(prof_out, profile_csv_text(sol, samples));
  const std::string script = prof_out + ".gp";
  write_text_atomic(script, plot_script_text(prof_out));
  std::printf("wrote %s and %s\n", prof_out.c_str(), script.c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const toricqe::OutOfRange& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInvalid;
  } catch (const toricqe::OutOfRangeClassParameter& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInvalid;
  } catch (const toricqe::InvalidDocument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInvalid;
  } catch (const toricqe::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitSolver;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitSolver;
  }
}
