#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(TORICQE_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cli: invalid inputs exit with code 2") {
  CHECK(run_cli("lpp --m 0.5") == 2);
  CHECK(run_cli("cp2b2 --a 1 --m 2") == 2);
  CHECK(run_cli("verify no_such_file.json") == 2);
  CHECK(run_cli("nonsense") == 2);
}

TEST_CASE("cli: solve, serialize, verify round trip") {
  const std::string doc = "cli_kc.json";
  CHECK(run_cli("koiso-cao --out " + doc) == 0);
  CHECK(run_cli("verify " + doc) == 0);
  // CSV grid written alongside
  const std::string csv = slurp("cli_kc.csv");
  CHECK(csv.rfind("t,z,F,phi,sigma,ode_residual\n", 0) == 0);

  // identical command lines give byte-identical files
  const std::string first = slurp(doc);
  CHECK(run_cli("koiso-cao --out " + doc) == 0);
  CHECK(slurp(doc) == first);

  // perturbing a constant must fail verification with exit 3
  std::string broken = first;
  const auto pos = broken.find("\"c\":");
  REQUIRE(pos != std::string::npos);
  broken.replace(pos, 4, "\"c\": 0.6, \"c_\":");
  std::ofstream(doc + ".bad") << broken;
  CHECK(run_cli("verify " + doc + ".bad") == 3);

  // malformed document
  std::ofstream(doc + ".junk") << "{]";
  CHECK(run_cli("verify " + doc + ".junk") == 2);

  CHECK(run_cli("profile " + doc + " --samples 7 --out cli_kc_prof.csv") == 0);
  const std::string prof = slurp("cli_kc_prof.csv");
  CHECK(prof.rfind("t,z,F,phi,sigma,ode_residual\n", 0) == 0);
  CHECK(slurp("cli_kc_prof.csv.gp").find("cli_kc_prof.csv") != std::string::npos);

  for (const char* f : {"cli_kc.json", "cli_kc.csv", "cli_kc.json.bad", "cli_kc.json.junk",
                        "cli_kc_prof.csv", "cli_kc_prof.csv.gp"})
    std::remove(f);
}

TEST_CASE("cli: json to stdout") {
  const std::string cmd = std::string(TORICQE_CLI_PATH) + " page --json - 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  CHECK(WEXITSTATUS(pclose(pipe)) == 0);
  CHECK(out.find("\"family\": \"page\"") != std::string::npos);
  CHECK(out.find("\"ratio\"") != std::string::npos);
}
