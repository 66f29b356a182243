// Command-line front end: bounds tables, tangent solutions, witness vectors,
// numerical minimization and the invariant suites.
//
// Exit codes: 0 success, 1 computational failure, 2 usage error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "cyclic/bounds.hpp"
#include "cyclic/errors.hpp"
#include "cyclic/funcs.hpp"
#include "cyclic/io.hpp"
#include "cyclic/optimize.hpp"
#include "cyclic/sums.hpp"
#include "cyclic/tangent.hpp"
#include "cyclic/verify.hpp"
#include "cyclic/witness.hpp"

namespace {

using namespace cyclic;

enum class Format { text, csv, json };

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string human(double v) { return io::format_sig(v, 6); }

int cmd_bounds(int k_max, Format fmt, double tol) {
  if (k_max < 2) throw UsageError("--k-max must be >= 2 (k=1 is degenerate for gamma)");
  const auto rows = bounds_table(k_max, tol);
  switch (fmt) {
    case Format::csv:
      std::cout << io::bounds_csv(rows);
      break;
    case Format::json:
      std::cout << io::bounds_json(rows) << '\n';
      break;
    case Format::text:
      std::cout << "k\tlower\tupper\tgap\n";
      for (const auto& r : rows) {
        std::cout << r.label() << '\t' << human(r.lower) << '\t' << human(r.upper) << '\t'
                  << human(r.gap) << '\n';
      }
      break;
  }
  if (auto err = check_table(rows)) {
    std::cerr << "bounds table inconsistent: " << *err << '\n';
    return kExitFailure;
  }
  return 0;
}

FamilyIndex parse_family(const std::string& k) {
  if (k == "inf") return FamilyIndex::infinity();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(k, &used);
  } catch (const std::exception&) {
    throw UsageError("--k must be a number >= 2 or 'inf', got '" + k + "'");
  }
  if (used != k.size() || !(v >= 2.0) || !std::isfinite(v)) {
    throw UsageError("--k must be a number >= 2 or 'inf', got '" + k + "'");
  }
  return FamilyIndex::finite(v);
}

int cmd_tangent(const std::string& k, Format fmt, double tol) {
  const TangentSolution s = solve_tangent(parse_family(k), tol);
  switch (fmt) {
    case Format::json:
      std::cout << io::tangent_json(s) << '\n';
      break;
    case Format::csv:
      std::cout << io::gamma_table_csv({s});
      break;
    case Format::text:
      std::cout << "k        " << s.idx.label() << '\n'
                << "a        " << human(s.a) << '\n'
                << "b        " << human(s.b) << '\n'
                << "gamma    " << human(s.gamma) << '\n'
                << "lambda   " << human(s.lambda) << '\n'
                << "mu       " << human(s.mu) << '\n'
                << "residual " << human(std::max(s.max_residual(), s.root_residual)) << '\n';
      break;
  }
  return 0;
}

int cmd_witness(int k, double eps, const std::string& out, std::int64_t cap, Format fmt, double tol) {
  if (k < 2) throw UsageError("--k must be >= 2");
  if (!(eps > 0.0)) throw UsageError("--eps must be positive");
  const TangentSolution sol = solve_tangent(FamilyIndex::finite(k), tol);
  const WitnessSpec spec = plan_witness(k, eps, sol, cap);
  const CyclicVector x = build_witness(spec);
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw Error("cannot open " + out + " for writing");
    io::write_vector_lines(f, x.entries());
  }
  const WitnessReport rep = witness_value_and_bound(spec, x);
  const bool certified = rep.value <= rep.analytic_bound && rep.analytic_bound < rep.gamma_plus_eps;
  if (fmt == Format::json) {
    std::cout << "{\"spec\":" << io::witness_spec_json(spec)
              << ",\"value\":" << io::json_number(rep.value)
              << ",\"analytic_bound\":" << io::json_number(rep.analytic_bound)
              << ",\"gamma_plus_eps\":" << io::json_number(rep.gamma_plus_eps)
              << ",\"certified\":" << (certified ? "true" : "false") << "}\n";
  } else {
    const int d = fmt == Format::csv ? 17 : 6;
    std::cout << "k=" << spec.k << " n=" << spec.n << " m=" << spec.m
              << " delta=" << io::format_sig(spec.delta, d) << '\n'
              << "value          " << io::format_sig(rep.value, d) << '\n'
              << "analytic_bound " << io::format_sig(rep.analytic_bound, d) << '\n'
              << "gamma+eps      " << io::format_sig(rep.gamma_plus_eps, d) << '\n';
  }
  if (!certified) {
    std::cerr << "witness failed certification: value " << io::format_sig(rep.value)
              << ", bound " << io::format_sig(rep.analytic_bound) << '\n';
    return kExitFailure;
  }
  return 0;
}

int cmd_minimize(int n, int k, const MinimizeConfig& config) {
  if (k < 1 || n < k) throw UsageError("need --n >= --k >= 1");
  const MinimizationResult r = minimize(static_cast<std::size_t>(n), static_cast<std::size_t>(k), config);
  std::cout << io::minimization_json(r) << '\n';
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed) {
  const VerifyReport r = run_verify(suite == "fast" ? Suite::fast : Suite::all, seed);
  std::cout << r.to_json() << '\n';
  for (const auto& g : r.groups) {
    if (!g.passed()) std::cerr << g.name << ": " << g.first_failure << '\n';
  }
  return r.passed() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclic Diananda sums: bounds, tangents, witnesses and minimization"};
  app.require_subcommand(1);

  Format fmt = Format::text;
  double tol = kDefaultTangentTol;
  std::uint64_t seed = 1;
  const std::map<std::string, Format> formats{
      {"text", Format::text}, {"csv", Format::csv}, {"json", Format::json}};
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", fmt, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--tol", tol, "Residual tolerance")->check(CLI::Range(1e-300, 1e-3));
  };

  int k_max = 7;
  auto* bounds = app.add_subcommand("bounds", "Lower/upper bound table for B(k)");
  bounds->add_option("--k-max", k_max, "Largest k")->required();
  add_common(bounds);

  std::string tangent_k;
  auto* tangent = app.add_subcommand("tangent", "Common tangent of g_k and e^{-x}");
  tangent->add_option("--k", tangent_k, "k >= 2 or 'inf'")->required();
  add_common(tangent);

  int witness_k = 2;
  double eps = 0.01;
  std::string out;
  std::int64_t cap = kDefaultWitnessCap;
  auto* witness = app.add_subcommand("witness", "Build and certify a near-optimal vector");
  witness->add_option("--k", witness_k, "Window length k >= 2")->required();
  witness->add_option("--eps", eps, "Target slack above gamma_k")->required();
  witness->add_option("--out", out, "Write the vector, one value per line");
  witness->add_option("--n-cap", cap, "Largest admissible n");
  add_common(witness);

  int n = 0, k = 0;
  MinimizeConfig config;
  auto* minimize_cmd = app.add_subcommand("minimize", "Minimize (k/n) S_{n,k} numerically");
  minimize_cmd->add_option("--n", n, "Vector length")->required();
  minimize_cmd->add_option("--k", k, "Window length")->required();
  minimize_cmd->add_option("--restarts", config.restarts, "Random restarts")->check(CLI::NonNegativeNumber);
  minimize_cmd->add_option("--seed", seed, "Random seed");
  minimize_cmd->add_option("--max-iters", config.max_iters, "Iterations per start")->check(CLI::PositiveNumber);

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run the randomized invariant suites");
  verify->add_option("--suite", suite, "all or fast")->check(CLI::IsMember({"all", "fast"}));
  verify->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*bounds) return cmd_bounds(k_max, fmt, tol);
    if (*tangent) return cmd_tangent(tangent_k, fmt, tol);
    if (*witness) return cmd_witness(witness_k, eps, out, cap, fmt, tol);
    if (*minimize_cmd) {
      config.seed = seed;
      return cmd_minimize(n, k, config);
    }
    if (*verify) return cmd_verify(suite, seed);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << " (required " << io::format_sig(e.required(), 6)
              << ")\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
