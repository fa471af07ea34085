#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

// End-to-end checks against the installed command-line binary: output text,
// JSON schemas, exit codes, and the braiding-file plumbing.

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  std::string command = env_prefix + " \"" + QSHUFFLE_CLI_PATH + "\" " + args +
                        " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    output.append(buffer.data(), got);
  }
  int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::string config(const char* name) {
  return std::string(QSHUFFLE_CONFIG_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("factorize") {
  auto r = run_cli("factorize 18,19,4,8,5,7");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "(18) (19,4,8,5,7)\n");
  CHECK(run_cli("factorize 7").output == "(7)\n");
  CHECK(run_cli("factorize 2,1,2,1").output == "(2,1)^2\n");

  auto json = run_cli("factorize 2,1,2,1 --format json");
  auto parsed = nlohmann::json::parse(json.output);
  CHECK(parsed.at(0).at("prime") == nlohmann::json::array({2, 1}));
  CHECK(parsed.at(0).at("multiplicity") == 2);
}

TEST_CASE("malformed input exits 2") {
  CHECK(run_cli("factorize 1,,2").exit_code == 2);
  CHECK(run_cli("factorize abc").exit_code == 2);
  CHECK(run_cli("factorize 0").exit_code == 2);
  CHECK(run_cli("shuffle 1 --braiding symbolic").exit_code == 2);  // missing arg
  CHECK(run_cli("rootcheck 1:2 1 --braiding cartan:" + config("a2.toml")).exit_code ==
        2);
  CHECK(run_cli("serre 1 1 --braiding cartan:" + config("a2.toml")).exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("shuffle output") {
  CHECK(run_cli("shuffle 1 2 --braiding symbolic").output ==
        "e(1,2) + q[1,2] e(2,1)\n");
  CHECK(run_cli("shuffle 1,1 2 --braiding symbolic").output ==
        "e(1,1,2) + q[1,2] e(1,2,1) + q[1,2]^2 e(2,1,1)\n");
  CHECK(run_cli("shuffle 1 2 --braiding classical").output == "e(1,2) + e(2,1)\n");

  auto json = run_cli("shuffle 1 2 --braiding symbolic --format json");
  auto parsed = nlohmann::json::parse(json.output);
  REQUIRE(parsed.size() == 2);
  CHECK(parsed.at(0).at("word") == nlohmann::json::array({1, 2}));

  auto latex = run_cli("shuffle 1 2 --braiding symbolic --format latex");
  CHECK(latex.output == "v_{1}\\otimes v_{2} + q_{1,2} v_{2}\\otimes v_{1}\n");
}

TEST_CASE("braiding problems exit 3") {
  CHECK(run_cli("shuffle 1 2").exit_code == 3);  // no braiding at all
  CHECK(run_cli("shuffle 1 2 --braiding cartan:/nonexistent.toml").exit_code == 3);
  // Table file covers only letters 1 and 2.
  CHECK(run_cli("shuffle 1 3 --braiding table:" + config("neg-table.toml")).exit_code ==
        3);
  // Letter 3 has no Cartan row in rank 2; (1,3) factors as (1)(3) so the
  // expansion must cross letter 3 over letter 1.
  CHECK(run_cli("xa 1,3 --braiding cartan:" + config("a2.toml")).exit_code == 3);
  CHECK(run_cli("serre 1 2 --braiding symbolic").exit_code == 3);
  CHECK(run_cli("express 1,2 --braiding symbolic").exit_code == 3);
}

TEST_CASE("alpha and xa") {
  CHECK(run_cli("alpha 18,19,4,8,5,7 --braiding symbolic").output == "1\n");
  CHECK(run_cli("alpha 1,1 --braiding symbolic").output == "1 + q[1,1]\n");
  CHECK(run_cli("alpha 1,1,1 --braiding classical").output == "6\n");
  auto xa = run_cli("xa 18,19,4,8,5,7 --braiding symbolic --format json");
  auto parsed = nlohmann::json::parse(xa.output);
  CHECK(parsed.size() == 6);
}

TEST_CASE("serre and rootcheck") {
  CHECK(run_cli("serre 1 2 --braiding cartan:" + config("a2.toml")).output == "0\n");
  CHECK(run_cli("serre 2 1 --braiding cartan:" + config("b2.toml")).output == "0\n");
  auto rc = run_cli("rootcheck 1:2 4 --braiding cartan:" + config("a2.toml"));
  CHECK(rc.output == "(1,1): DEGENERATE\n");
  auto rc3 = run_cli("rootcheck 1:2 3 --braiding cartan:" + config("a2.toml"));
  CHECK(rc3.output == "(1,1): regular\n");
}

TEST_CASE("express") {
  auto r = run_cli("express 1,2 --braiding cartan:" + config("a2.toml"));
  CHECK(r.output == "v(1,2) = X(1,2) - q^-1 X(2,1)\n");
  CHECK(run_cli("express 1,1 --braiding cartan:" + config("a2.toml")).output ==
        "v(1,1) = 1/(1 + q^2) X(1,1)\n");
  CHECK(run_cli("express 2,1 --braiding numeric:2:" + config("a2.toml")).output ==
        "v(2,1) = X(2,1)\n");

  // Degenerate at q_{1,1} = -1: exit 4 naming the word on stderr.
  auto degenerate = run_cli("express 1,1 --braiding table:" + config("neg-table.toml"));
  CHECK(degenerate.exit_code == 4);
  auto with_stderr = run_cli(
      "express 1,1 --braiding table:" + config("neg-table.toml") + " 2>&1 1>/dev/null; :");
  CHECK(with_stderr.output.find("(1,1)") != std::string::npos);
}

TEST_CASE("environment default braiding") {
  auto r = run_cli("shuffle 1 2", "QSHUFFLE_BRAIDING=symbolic");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "e(1,2) + q[1,2] e(2,1)\n");
  // An explicit flag wins over the environment.
  auto flag = run_cli("shuffle 1 2 --braiding classical", "QSHUFFLE_BRAIDING=symbolic");
  CHECK(flag.output == "e(1,2) + e(2,1)\n");
}

TEST_CASE("deterministic under parallelism") {
  std::string base = "xa 1,1,2,2,3 --braiding symbolic --format json";
  auto serial = run_cli(base + " --parallelism 1");
  auto threaded = run_cli(base + " --parallelism 4");
  auto automatic = run_cli(base + " --parallelism 0");
  CHECK(serial.exit_code == 0);
  CHECK(serial.output == threaded.output);
  CHECK(serial.output == automatic.output);
}

TEST_CASE("term budget exits 5") {
  auto r = run_cli("xa 1,2,1,2 --braiding symbolic --max-terms 3");
  CHECK(r.exit_code == 5);
}

TEST_CASE("primes and words listings") {
  auto primes = run_cli("primes 2 3");
  CHECK(primes.output == "1: (1) (2)\n2: (2,1)\n3: (2,1,1) (2,2,1)\n");
  auto words = run_cli("words 1:2,2:1");
  CHECK(words.output == "(2,1,1) (1,2,1) (1,1,2)\n");
  auto json = run_cli("primes 2 2 --format json");
  auto parsed = nlohmann::json::parse(json.output);
  CHECK(parsed.at(1).at("primes") ==
        nlohmann::json::array({nlohmann::json::array({2, 1})}));
}

TEST_CASE("basis output") {
  auto r = run_cli("basis 1:1,2:1 --braiding symbolic");
  CHECK(r.output == "words: (2,1) (1,2)\nX(2,1): 1 0\nX(1,2): q[1,2] 1\n");
  auto json = run_cli("basis 1:2 --braiding symbolic --format json");
  auto parsed = nlohmann::json::parse(json.output);
  CHECK(parsed.at("words").size() == 1);
  CHECK(parsed.at("rows").at(0).size() == 1);
}
