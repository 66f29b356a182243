#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "cyclic/errors.hpp"
#include "cyclic/io.hpp"

using namespace cyclic;

TEST_CASE("number formatting") {
  CHECK(io::format_sig(0.1) == "0.10000000000000001");
  CHECK(io::format_sig(0.98913363444699309, 12) == "0.989133634447");
  CHECK(io::format_sig(2.0, 6) == "2");
  CHECK(io::json_number(NAN) == "null");
}

TEST_CASE("property: vectors survive both text formats bit-exactly") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-300.0, 300.0);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<double> v(1 + rng() % 30);
    for (double& e : v) e = rng() % 7 == 0 ? 0.0 : std::pow(10.0, u(rng));
    const CyclicVector x(v);
    CHECK(io::parse_vector_json(io::vector_json(x.entries())) == x);
    std::stringstream lines;
    io::write_vector_lines(lines, x.entries());
    CHECK(io::read_vector_lines(lines) == x);
  }
}

TEST_CASE("vector parsing errors") {
  CHECK_THROWS_AS(io::parse_vector_json("{\"a\":1}"), io::ParseError);
  CHECK_THROWS_AS(io::parse_vector_json("[1, \"x\"]"), io::ParseError);
  CHECK_THROWS_AS(io::parse_vector_json("[1, 2"), io::ParseError);
  CHECK_THROWS_AS(io::parse_vector_json("[1, -2]"), DomainError);
  std::istringstream bad("1\n2 3\n");
  CHECK_THROWS_AS(io::read_vector_lines(bad), io::ParseError);
  std::istringstream commented("# header\n1\n\n2.5\n");
  CHECK(io::read_vector_lines(commented) == CyclicVector({1.0, 2.5}));
}

TEST_CASE("load_vector detects the format") {
  const std::string dir = std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp";
  const std::string json_path = dir + "/cyclic_io_test.json", text_path = dir + "/cyclic_io_test.txt";
  { std::ofstream(json_path) << "  [1, 2, 3]"; }
  { std::ofstream(text_path) << "1\n2\n3\n"; }
  CHECK(io::load_vector(json_path) == CyclicVector({1, 2, 3}));
  CHECK(io::load_vector(text_path) == CyclicVector({1, 2, 3}));
  CHECK_THROWS_AS(io::load_vector(dir + "/does-not-exist.txt"), io::ParseError);
}

TEST_CASE("gamma table serialisation") {
  const auto rows = gamma_table({FamilyIndex::finite(2), FamilyIndex::infinity()});
  const std::string csv = io::gamma_table_csv(rows);
  CHECK(csv.rfind("k,a,b,gamma,lambda,mu\n2,", 0) == 0);
  CHECK(csv.find(",0.989133634447,") != std::string::npos);
  CHECK(csv.find("\ninf,") != std::string::npos);
  const auto j = nlohmann::json::parse(io::gamma_table_json(rows));
  CHECK(j.size() == 2);
  CHECK(j[1]["k"] == "inf");
  CHECK(j[0]["gamma"].get<double>() == doctest::Approx(0.989133634447).epsilon(1e-12));
}

TEST_CASE("witness plan, result and bounds serialisation") {
  const auto sol = solve_tangent(FamilyIndex::finite(2));
  const auto spec = plan_witness(2, 0.1, sol);
  const auto w = nlohmann::json::parse(io::witness_spec_json(spec));
  for (const char* key : {"k", "n", "m", "a_star", "b_star", "eps", "delta"}) CHECK(w.contains(key));
  CHECK(w["n"].get<std::int64_t>() == spec.n);
  CHECK(w["a_star"].get<double>() == spec.a_star);

  MinimizationResult r;
  r.n = 3;
  r.k = 2;
  r.value = 1.0;
  r.x_best = CyclicVector({1, 1, 1});
  const auto m = nlohmann::json::parse(io::minimization_json(r));
  for (const char* key : {"n", "k", "value", "certified_floor", "converged", "restarts_used", "gradient_norm", "x_best"}) {
    CHECK(m.contains(key));
  }
  CHECK(m["x_best"].size() == 3);

  const auto rows = bounds_table(3);
  CHECK(io::bounds_csv(rows).rfind("k,lower,upper,gap\n2,", 0) == 0);
  const auto b = nlohmann::json::parse(io::bounds_json(rows));
  CHECK(b.back()["k"] == "inf");
  CHECK(b[0]["k"] == 2);
}
