// Golden tests: drive the CLI binary end to end and pin its stdout and exit
// codes.  The binary path and the spec directory come from the environment
// (set by CTest).
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string cli_path() {
  const char* p = std::getenv("NICHOLS_CLI");
  REQUIRE_MESSAGE(p != nullptr, "NICHOLS_CLI must point at the CLI binary");
  return p;
}

std::string golden_dir() {
  const char* p = std::getenv("NICHOLS_GOLDEN_DIR");
  REQUIRE_MESSAGE(p != nullptr, "NICHOLS_GOLDEN_DIR must point at the spec files");
  return p;
}

RunResult run_cli(const std::string& args) {
  const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("lyndon counts") {
  const RunResult r = run_cli("lyndon 3 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("ell=5") != std::string::npos);
  CHECK(r.out.find("N(m)=6") != std::string::npos);

  const RunResult single = run_cli("lyndon 1 1 --json");
  CHECK(single.exit_code == 0);
  const auto j = nlohmann::json::parse(single.out);
  CHECK(j[0]["lyndon_count"] == 1);

  const RunResult sweep = run_cli("lyndon --n 2 --all-upto 3 --json");
  CHECK(sweep.exit_code == 0);
  const auto rows = nlohmann::json::parse(sweep.out);
  CHECK(rows.size() == 9);  // every nonzero degree with |m| <= 3
  for (const auto& row : rows)
    if (row["m"] == nlohmann::json({1, 2})) CHECK(row["N"] == 2);

  CHECK(run_cli("lyndon 0 0").exit_code == 1);
}

TEST_CASE("poly serialization") {
  const RunResult pm = run_cli("poly 1 2 --pm");
  CHECK(pm.exit_code == 0);
  CHECK(pm.out == "1 - p[1][2]*p[2][1]*p[2][2]\n");

  const RunResult qm = run_cli("poly 3 4 --qm");
  CHECK(qm.exit_code == 0);
  CHECK(qm.out == "p[1][1]*p[1][2]^2*p[2][1]^2*p[2][2]^2\n");

  const RunResult pm_json = run_cli("poly 1 2 --pm --json");
  CHECK(pm_json.exit_code == 0);
  const auto terms = nlohmann::json::parse(pm_json.out);
  REQUIRE(terms.size() == 2);
  CHECK(terms[0] == nlohmann::json({{"coeff", 1}, {"exps", nlohmann::json::array()}}));
  CHECK(terms[1] == nlohmann::json({{"coeff", -1}, {"exps", {{1, 2, 1}, {2, 1, 1}, {2, 2, 1}}}}));

  const RunResult factors = run_cli("poly 3 4 --factors");
  CHECK(factors.exit_code == 0);
  CHECK(factors.out.find("case = (3,4)") != std::string::npos);
  CHECK(factors.out.find("P = -Phi_1(Q) * Phi_2(Q) * Phi_3(Q)") != std::string::npos);
  CHECK(factors.out.find("A = Phi_1(Q)^2 * Phi_2(Q) * Phi_3(Q)") != std::string::npos);

  CHECK(run_cli("poly 1 0 --pm").exit_code == 1);
}

TEST_CASE("free: worked example is not free with witnesses at grade 5 and 7") {
  const RunResult r = run_cli("free " + golden_dir() + "/zeta5.json --maxdeg 7 --verify");
  CHECK(r.exit_code == 2);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "not-free");
  const auto witnesses = j["witnesses"];
  REQUIRE(witnesses.size() == 4);
  CHECK(witnesses[2] == nlohmann::json({3, 4}));
  bool found = false;
  for (const auto& entry : j["witness_kernels"])
    if (entry["m"] == nlohmann::json({3, 4})) {
      CHECK(entry["relation_dim"] == 2);
      found = true;
    }
  CHECK(found);
}

TEST_CASE("free: the a=2, b=1 family is free up to the bound") {
  const RunResult r = run_cli("free " + golden_dir() + "/t_a2_b1.json --maxdeg 10");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "free-up-to-D");
  CHECK(j["degree_bound"] == 10);
  CHECK(j["witnesses"].empty());
}

TEST_CASE("free: zero entries are rejected") {
  CHECK(run_cli("free " + golden_dir() + "/zero_entry.json --maxdeg 3").exit_code == 1);
}

TEST_CASE("kernel report at the worked example") {
  const RunResult r = run_cli("kernel " + golden_dir() + "/zeta5.json 3 4 --brute");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["d"] == 1);
  CHECK(j["d_prime"] == 6);
  CHECK(j["n1"] == 7);
  CHECK(j["n2"] == 5);
  CHECK(j["kernel_dim_formula"] == 2);
  CHECK(j["kernel_dim_bruteforce"] == 2);
  CHECK(j["relation_dim"] == 2);
}

TEST_CASE("kernel report for q11 = -1 at (2,0)") {
  const RunResult r = run_cli("kernel " + golden_dir() + "/q11_minus_one.json 2 0");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["kernel_dim_formula"] == 1);
}

TEST_CASE("kernel --dump-shuffle emits the matrix with its basis header") {
  const RunResult r =
      run_cli("kernel " + golden_dir() + "/q11_minus_one.json 2 0 --dump-shuffle");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  const auto& dump = j["shuffle_matrix"];
  CHECK(dump["basis"] == nlohmann::json({"11"}));
  REQUIRE(dump["rows"].size() == 1);
  // S_{1,1} on V_(2,0) is (2)_{q11} = 0 at q11 = -1
  CHECK(dump["rows"][0][0]["kind"] == "cyclotomic");
  CHECK(dump["rows"][0][0]["coeffs"] == nlohmann::json({"0"}));
}

TEST_CASE("kernel guard names the violated degree") {
  const std::string cmd =
      cli_path() + " kernel " + golden_dir() + "/unit_pair.json 2 2 2>&1 >/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string err;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) err.append(buf.data(), n);
  const int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 1);
  CHECK(err.find("(1,1)") != std::string::npos);
}

TEST_CASE("lyndon word listing") {
  const RunResult r = run_cli("lyndon 1 2 --words");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("122") != std::string::npos);
}

TEST_CASE("poly --am on a single letter prints the factor quotient") {
  const RunResult r = run_cli("poly 0 3 --am");
  CHECK(r.exit_code == 0);
  // (3)_p / (2)_p = Phi_3 / Phi_2
  CHECK(r.out == "Phi_2(Q)^-1 * Phi_3(Q)\n");
}

TEST_CASE("explicit specs accept rational strings and zeta coefficients") {
  // q11 = 3/2, q12 = zeta_4, q21 = -zeta_4, q22 = 2: q12 q21 = -i^2 = 1,
  // so (1,1) is the first witness
  const RunResult r = run_cli("free " + golden_dir() + "/rational_explicit.json --maxdeg 3");
  CHECK(r.exit_code == 2);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["witnesses"] == nlohmann::json({{1, 1}}));
}

TEST_CASE("dioph searches") {
  const RunResult empty = run_cli("dioph " + golden_dir() + "/t_a2_b1.json --box 50");
  CHECK(empty.exit_code == 0);
  CHECK(nlohmann::json::parse(empty.out)["solutions"].empty());

  const RunResult sols = run_cli("dioph " + golden_dir() + "/t_a1_b1.json --box 10");
  CHECK(sols.exit_code == 2);
  const auto j = nlohmann::json::parse(sols.out);
  CHECK(j["solutions"] == nlohmann::json({{1, 2}, {2, 1}}));

  CHECK(run_cli("dioph " + golden_dir() + "/zeta5.json --box 10").exit_code == 1);
}

TEST_CASE("selftest is deterministic and passes") {
  const RunResult r = run_cli("selftest --seed 7");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("seed = 0x7") != std::string::npos);
  const RunResult again = run_cli("selftest --seed 7");
  CHECK(again.out == r.out);
}

TEST_SUITE_END();
