#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const char* bin = std::getenv("VERIFY_BIN");
  REQUIRE(bin != nullptr);
  std::string cmd = std::string(bin) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t k = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), k);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

}  // namespace

TEST_CASE("suite list") {
  auto r = run("--list");
  CHECK(r.code == 0);
  CHECK(r.out.find("clifford") != std::string::npos);
}

TEST_CASE("passing suite exits 0 and writes JSON") {
  auto path = std::filesystem::temp_directory_path() / "verify_grassmann.json";
  auto r = run("--suite grassmann --n 3 --json " + path.string());
  CHECK(r.code == 0);
  std::ifstream is(path);
  auto j = nlohmann::json::parse(is);
  CHECK(j["failures"] == 0);
  CHECK(j["checks"].size() >= 5);
  CHECK(j["checks"][0].contains("anchor"));
}

TEST_CASE("conflicts are reported without failing") {
  auto r = run("--suite clifford --json -");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["conflicts"].get<int>() >= 1);
}

TEST_CASE("configuration errors exit 2") {
  CHECK(run("--n -1").code == 2);
  CHECK(run("--grid 10").code == 2);
  CHECK(run("--suite nosuch").code == 2);
  CHECK(run("--alpha -1").code == 2);
  CHECK(run("--tol-struct 0").code == 2);
  CHECK(run("--frobnicate").code == 2);
}

TEST_CASE("a failing check exits 1") {
  // a tolerance far below the attainable floor turns the floating Darboux check into a failure
  auto r = run("--suite symplectic --tol-struct 1e-30");
  CHECK(r.code == 1);
  CHECK(r.out.find("[fail]") != std::string::npos);
}

TEST_CASE("config file") {
  auto path = std::filesystem::temp_directory_path() / "verify_cfg.ini";
  std::ofstream(path) << "suite = star\nn = 1\nexact = true\n";
  auto r = run("--config " + path.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("star/lambda_crosscheck") != std::string::npos);
}

TEST_CASE("dump_tables") {
  auto dir = std::filesystem::temp_directory_path() / "verify_tables";
  std::filesystem::remove_all(dir);
  auto r = run("dump_tables --n 1 --out " + dir.string());
  CHECK(r.code == 0);
  std::ifstream is(dir / "lambda_n1.json");
  auto j = nlohmann::json::parse(is);
  CHECK(j["n"] == 1);
  CHECK(j["entries"].size() == 4);
  auto r0 = run("dump_tables --n 0 --out " + dir.string());
  CHECK(r0.code == 0);
  std::ifstream i0(dir / "lambda_n0.json");
  CHECK(nlohmann::json::parse(i0)["entries"].size() == 1);
}
