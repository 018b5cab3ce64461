// End-to-end checks of the command-line harness. The binary path comes in
// through QSWITCH_CLI (set by ctest); the suite is skipped without it.
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

const char* cli_path() { return std::getenv("QSWITCH_CLI"); }

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(cli_path()) + " " + args + " 2>/dev/null";
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    res.output.append(buf.data(), n);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

TEST_CASE("cli: default activate passes with the expected verdicts") {
  if (!cli_path()) return;  // not running under ctest
  const RunResult res = run("activate --stable-output");
  CHECK(res.exit_code == 0);
  const auto j = nlohmann::json::parse(res.output);
  CHECK(j["experiment"] == "activate");
  CHECK(j["pass"] == true);
  CHECK(j["results"]["entanglement_breaking"]["status"] == "entanglement_breaking");
  CHECK(j["results"]["knill_laflamme"]["satisfied"] == true);
  CHECK(j["results"]["recovery_choi_distance"].get<double>() <= 1e-8);
  CHECK(j["results"]["coherent_info_before"]["value"].get<double>() <= 1e-6);
  CHECK(j["results"]["coherent_info_after"]["value"].get<double>() >= 1.0 - 1e-6);
}

TEST_CASE("cli: XYZ channel reports the 1/3 assisted bound, KL fails") {
  if (!cli_path()) return;
  const RunResult res = run("activate --p 0,1/3,1/3,1/3 --stable-output");
  CHECK(res.exit_code == 0);
  const auto j = nlohmann::json::parse(res.output);
  CHECK(j["results"]["knill_laflamme"]["satisfied"] == false);
  CHECK(j["results"]["two_way_lower_bound"]["value"].get<double>() ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(j["results"]["two_way_lower_bound"]["exact"] == "1/3");
}

TEST_CASE("cli: definite order fails the KL check") {
  if (!cli_path()) return;
  const RunResult res = run("activate --omega 0 --stable-output");
  const auto j = nlohmann::json::parse(res.output);
  CHECK(j["results"]["knill_laflamme"]["satisfied"] == false);
}

TEST_CASE("cli: paths presets") {
  if (!cli_path()) return;
  const RunResult xy2 = run("paths --preset xy2 --stable-output");
  CHECK(xy2.exit_code == 0);
  const auto j = nlohmann::json::parse(xy2.output);
  CHECK(j["results"]["kraus_rank"].get<int>() >= 3);
  CHECK(j["results"]["packing_bound_correctable"] == false);
  CHECK(j["results"]["witness_rank"].get<int>() == 3);

  const RunResult uni = run("paths --preset unitary --stable-output");
  CHECK(uni.exit_code == 0);
  const auto ju = nlohmann::json::parse(uni.output);
  CHECK(ju["results"]["packing_bound_correctable"] == true);

  const RunResult xy3 = run("paths --preset xy3 --stable-output");
  const auto j3 = nlohmann::json::parse(xy3.output);
  CHECK(j3["results"]["witness_rank"].get<int>() == 4);

  CHECK(run("paths --preset nope").exit_code == 2);
}

TEST_CASE("cli: nogo certifies a small batch") {
  if (!cli_path()) return;
  const RunResult res = run("nogo --trials 6 --d 2 --d 3 --stable-output");
  CHECK(res.exit_code == 0);
  const auto j = nlohmann::json::parse(res.output);
  CHECK(j["results"]["certified"] == 6);
  CHECK(j["pass"] == true);
}

TEST_CASE("cli: classify presets") {
  if (!cli_path()) return;
  const RunResult exy = run("classify --channel exy --stable-output");
  CHECK(exy.exit_code == 0);
  const auto j = nlohmann::json::parse(exy.output);
  CHECK(j["results"]["activation"] == "maximal_activation");

  const RunResult hxy = run("classify --channel hxy --stable-output");
  const auto jh = nlohmann::json::parse(hxy.output);
  CHECK(jh["results"]["activation"] == "maximal_activation");
  CHECK(jh["results"]["classification"]["kind"] == "self_adjoint_pair");

  const RunResult depol = run("classify --channel depol --stable-output");
  const auto jd = nlohmann::json::parse(depol.output);
  CHECK(jd["results"]["activation"] == "no_activation");
}

TEST_CASE("cli: sweep emits the lattice CSV with anchor rows") {
  if (!cli_path()) return;
  const std::string csv = "/tmp/qswitch_test_sweep.csv";
  const RunResult res = run("sweep --grid 2 --out " + csv + " --stable-output");
  CHECK(res.exit_code == 0);
  const auto j = nlohmann::json::parse(res.output);
  CHECK(j["results"]["rows"] == 10);  // compositions of 2 into 4 parts

  std::ifstream in(csv);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header ==
        "p0,p1,p2,p3,q_plus,q_minus,eb,kl_switched,ic_formula,ic_clamped,"
        "q2way_lower");
  int rows = 0;
  bool found_xy = false, found_ident = false;
  std::string line;
  while (std::getline(in, line)) {
    ++rows;
    if (line.rfind("0,0.5,0.5,0,", 0) == 0) {
      found_xy = true;
      // eb=1, kl=1, ic_clamped=1 at the XY anchor point.
      CHECK(line.find(",1,1,1,1,1") != std::string::npos);
    }
    if (line.rfind("1,0,0,0,", 0) == 0) {
      found_ident = true;
      CHECK(line.find(",0,1,1,1,1") != std::string::npos);  // eb=0, ic=1
    }
  }
  CHECK(rows == 10);
  CHECK(found_xy);
  CHECK(found_ident);
  std::remove(csv.c_str());
}

TEST_CASE("cli: deterministic reports given a seed") {
  if (!cli_path()) return;
  const RunResult a = run("nogo --trials 4 --seed 7 --stable-output");
  const RunResult b = run("nogo --trials 4 --seed 7 --stable-output");
  CHECK(a.output == b.output);
  const RunResult c = run("nogo --trials 4 --seed 8 --stable-output");
  CHECK(a.output != c.output);
}

TEST_CASE("cli: usage errors exit with code 2") {
  if (!cli_path()) return;
  CHECK(run("activate --p 1,2").exit_code == 2);
  CHECK(run("activate --omega bogus").exit_code == 2);
  CHECK(run("classify --channel '{\"bad\": 1}'").exit_code == 2);
  CHECK(run("sweep --grid 2").exit_code == 2);  // missing --out
  CHECK(run("bogus-subcommand").exit_code == 2);
  CHECK(run("activate --tolerance-profile never-heard-of-it").exit_code == 2);
}

TEST_CASE("cli: tolerance profiles are echoed into the report") {
  if (!cli_path()) return;
  const RunResult strict = run("activate --tolerance-profile strict --stable-output");
  CHECK(strict.exit_code == 0);
  const auto j = nlohmann::json::parse(strict.output);
  CHECK(j["tolerances"]["profile"] == "strict");
  CHECK(j["tolerances"]["value_match"].get<double>() == doctest::Approx(1e-7));
}
