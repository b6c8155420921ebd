#include "toricqe/document.hpp"

#include <cstdio>
#include <fstream>

#include "json.hpp"

namespace toricqe {

namespace {

using nlohmann::json;

double need(const std::map<std::string, double>& m, const std::string& key) {
  auto it = m.find(key);
  if (it == m.end()) throw InvalidDocument("document missing constant: " + key);
  return it->second;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

}  // namespace

SolutionDocument document_from_solution(const FamilySolution& sol,
                                        const std::vector<ResidualReport>& reports,
                                        const SolverConfig& cfg) {
  SolutionDocument doc;
  doc.family = family_name(sol.family);
  doc.a = sol.a;
  switch (sol.family) {
    case Family::Lpp:
      doc.m = sol.m;
      doc.constants = {{"b", sol.b}, {"c", sol.c}, {"d", sol.d}, {"mu", sol.mu}};
      break;
    case Family::Page:
      // volume of the exceptional divisor over that of the disjoint line
      doc.constants = {{"A", sol.A}, {"B", sol.B}, {"C", sol.C},
                       {"b", sol.b}, {"c", sol.c}, {"ratio", 3.0 / (2.0 - sol.a)}};
      break;
    case Family::KoisoCao:
      doc.constants = {{"c", sol.c}, {"d", sol.d}};
      break;
    case Family::Cp2b2:
      doc.m = sol.m;
      doc.constants = {{"b", sol.b}, {"c", sol.c}, {"d", sol.d}, {"mu", sol.mu}};
      break;
  }
  for (const auto& r : reports)
    doc.residual_summary.push_back({r.name, r.max_abs_residual, r.tolerance, r.pass});
  doc.provenance = {cfg.abs_tol, cfg.rel_tol, cfg.max_iter, kBuildIdentifier};
  return doc;
}

FamilySolution solution_from_document(const SolutionDocument& doc) {
  const Family fam = family_from_name(doc.family);
  const auto& k = doc.constants;
  switch (fam) {
    case Family::Lpp:
      if (!doc.m) throw InvalidDocument("lpp document lacks m");
      return lpp_from_constants(*doc.m, need(k, "b"), need(k, "c"), need(k, "d"),
                                need(k, "mu"));
    case Family::Page:
      return page_from_constants(doc.a, need(k, "A"), need(k, "B"), need(k, "C"),
                                 need(k, "b"), need(k, "c"));
    case Family::KoisoCao:
      return koiso_cao_from_constants(need(k, "c"), need(k, "d"));
    case Family::Cp2b2:
      if (!doc.m) throw InvalidDocument("cp2b2 document lacks m");
      return cp2b2_from_constants(doc.a, *doc.m, need(k, "b"), need(k, "c"), need(k, "d"),
                                  need(k, "mu"));
  }
  throw InvalidDocument("unknown family in document");
}

std::string to_json_text(const SolutionDocument& doc) {
  json j;
  j["schema_version"] = doc.schema_version;
  j["family"] = doc.family;
  j["a"] = doc.a;
  if (doc.m) j["m"] = *doc.m;
  j["constants"] = doc.constants;
  j["residual_summary"] = json::array();
  for (const auto& r : doc.residual_summary)
    j["residual_summary"].push_back({{"check", r.check},
                                     {"max_abs", r.max_abs},
                                     {"tolerance", r.tolerance},
                                     {"pass", r.pass}});
  j["provenance"] = {{"abs_tol", doc.provenance.abs_tol},
                     {"rel_tol", doc.provenance.rel_tol},
                     {"max_iter", doc.provenance.max_iter},
                     {"build", doc.provenance.build}};
  return j.dump(2) + "\n";
}

SolutionDocument document_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidDocument(std::string("document parse error: ") + e.what());
  }
  try {
    SolutionDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    if (doc.schema_version != kSchemaVersion)
      throw InvalidDocument("unsupported schema_version: " + doc.schema_version);
    doc.family = j.at("family").get<std::string>();
    doc.a = j.at("a").get<double>();
    if (j.contains("m")) doc.m = j.at("m").get<double>();
    doc.constants = j.at("constants").get<std::map<std::string, double>>();
    if (j.contains("residual_summary"))
      for (const auto& r : j.at("residual_summary"))
        doc.residual_summary.push_back({r.at("check").get<std::string>(),
                                        r.at("max_abs").get<double>(),
                                        r.at("tolerance").get<double>(),
                                        r.at("pass").get<bool>()});
    if (j.contains("provenance")) {
      const auto& p = j.at("provenance");
      doc.provenance = {p.at("abs_tol").get<double>(), p.at("rel_tol").get<double>(),
                        p.at("max_iter").get<int>(), p.at("build").get<std::string>()};
    }
    return doc;
  } catch (const json::exception& e) {
    throw InvalidDocument(std::string("document field error: ") + e.what());
  }
}

void write_text_atomic(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open for writing: " + tmp);
    out << text;
    if (!out.flush()) throw Error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw Error("rename failed: " + tmp + " -> " + path);
}

std::string profile_csv_text(const FamilySolution& sol, int samples) {
  if (!sol.profile) throw InvalidDocument("profile grid: family has no profile");
  if (samples < 2) throw OutOfRange("profile grid: samples must be at least 2");
  std::string out = "t,z,F,phi,sigma,ode_residual\n";
  for (int i = 0; i < samples; ++i) {
    const double t = -sol.a + (1.0 + sol.a) * i / (samples - 1);
    const auto [z, zp] = evaluate_z(sol, t);
    (void)zp;
    const double F = 1.0 / z;  // unguarded: endpoints print inf by design
    const double phi = sol.conformal.phi(t);
    const double sigma = sol.conformal.sigma(t);
    const double res = family_ode_residual(sol, t);
    out += fmt17(t) + "," + fmt17(z) + "," + fmt17(F) + "," + fmt17(phi) + "," +
           fmt17(sigma) + "," + fmt17(res) + "\n";
  }
  return out;
}

std::string plot_script_text(const std::string& csv_path) {
  std::string s;
  s += "set datafile separator ','\n";
  s += "set key autotitle columnhead\n";
  s += "set xlabel 't'\n";
  s += "set grid\n";
  s += "set terminal pngcairo size 900,600\n";
  s += "set output 'profile.png'\n";
  s += "plot '" + csv_path + "' using 1:2 with lines, \\\n";
  s += "     '' using 1:4 with lines, \\\n";
  s += "     '' using 1:5 with lines\n";
  return s;
}

}  // namespace toricqe
