#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "oracles.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CYCLIC_BOUNDS_EXE) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::string tmp_path(const std::string& name) {
  const char* dir = std::getenv("TMPDIR");
  return std::string(dir ? dir : "/tmp") + "/" + name;
}

}  // namespace

TEST_CASE("bounds subcommand") {
  auto r = run("bounds --k-max 7 --format csv");
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 8);
  CHECK(rows[0] == std::vector<std::string>{"k", "lower", "upper", "gap"});
  const double table[] = {0.82843, 0.77976, 0.75683, 0.74349, 0.73477, 0.72863};
  for (int i = 0; i < 6; ++i) CHECK(std::fabs(std::stod(rows[i + 1][1]) - table[i]) <= 5e-6);
  CHECK(rows[7][0] == "inf");
  CHECK(r.out.find('\r') == std::string::npos);

  r = run("bounds --k-max 4 --format json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  const double upper[] = {0.98913, 0.97793, 0.96994};
  for (int i = 0; i < 3; ++i) CHECK(std::fabs(j[i]["upper"].get<double>() - upper[i]) <= 5e-6);
  CHECK(j[3]["k"] == "inf");

  r = run("bounds --k-max 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("0.828427") != std::string::npos);

  CHECK(run("bounds --k-max 1").code == 2);
  CHECK(run("bounds").code == 2);
  CHECK(run("bounds --k-max 3 --format xml").code == 2);
  CHECK(run("bounds --k-max 3 --tol 0.5").code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("tangent subcommand") {
  auto r = run("tangent --k 2 --format json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(std::fabs(j["gamma"].get<double>() - 0.989133) <= 1e-6);
  CHECK(j["residuals"].size() == 4);

  r = run("tangent --k inf");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("gamma    0.930498") != std::string::npos);

  r = run("tangent --k 3 --tol 1e-12 --format json");
  REQUIRE(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(std::fabs(j["gamma"].get<double>() - 0.977927798177398) <= 1e-14);

  CHECK(run("tangent --k 1").code == 2);
  CHECK(run("tangent --k abc").code == 2);
}

TEST_CASE("witness subcommand streams a certified vector") {
  const std::string path = tmp_path("cyclic_cli_witness.txt");
  auto r = run("witness --k 2 --eps 0.01 --format json --out " + path);
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["certified"] == true);
  const int n = j["spec"]["n"].get<int>();

  std::ifstream in(path);
  std::vector<double> x;
  for (double v; in >> v;) x.push_back(v);
  REQUIRE(int(x.size()) == n);
  const double value = 2.0 / n * double(oracle::diananda(x, 2));
  CHECK(value < 0.99913);
  CHECK(oracle::rel(value, j["value"].get<double>()) <= 1e-12);

  r = run("witness --k 3 --eps 0.1");
  CHECK(r.code == 0);
  CHECK(r.out.find("value") != std::string::npos);

  CHECK(run("witness --k 2 --eps 1e-9").code == 1);
  CHECK(run("witness --k 1 --eps 0.1").code == 2);
  CHECK(run("witness --k 2 --eps -1").code == 2);
}

TEST_CASE("minimize subcommand") {
  auto a = run("minimize --n 3 --k 2 --seed 7");
  REQUIRE(a.code == 0);
  auto j = nlohmann::json::parse(a.out);
  CHECK(std::fabs(j["value"].get<double>() - 1.0) <= 1e-6);
  CHECK(j.contains("certified_floor"));
  CHECK(run("minimize --n 3 --k 2 --seed 7").out == a.out);

  a = run("minimize --n 5 --k 1");
  REQUIRE(a.code == 0);
  CHECK(std::fabs(nlohmann::json::parse(a.out)["value"].get<double>() - 1.0) <= 1e-6);

  a = run("minimize --n 12 --k 2 --restarts 50");
  REQUIRE(a.code == 0);
  CHECK(std::fabs(nlohmann::json::parse(a.out)["value"].get<double>() - 1.0) <= 1e-4);

  CHECK(run("minimize --n 2 --k 3").code == 2);
  CHECK(run("minimize --n 4 --k 2 --restarts -1").code == 2);
}

TEST_CASE("verify subcommand is deterministic") {
  const auto a = run("verify --suite fast --seed 3");
  REQUIRE(a.code == 0);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["passed"] == true);
  CHECK(j["suite"] == "fast");
  CHECK(run("verify --suite fast --seed 3").out == a.out);
  CHECK(run("verify --suite nope").code == 2);
}
