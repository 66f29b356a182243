#include "cyclic/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace cyclic::io {

std::string format_sig(double v, int digits) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string json_number(double v, int digits) {
  if (!std::isfinite(v)) return "null";
  return format_sig(v, digits);
}

CyclicVector parse_vector_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("vector JSON: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("vector JSON must be an array of numbers");
  std::vector<double> v;
  v.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number()) throw ParseError("vector JSON must contain only numbers");
    v.push_back(e.get<double>());
  }
  return CyclicVector(std::move(v));
}

CyclicVector read_vector_lines(std::istream& in) {
  std::vector<double> v;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    double value = 0.0;
    std::string rest;
    if (!(ls >> value) || (ls >> rest)) {
      throw ParseError("line " + std::to_string(lineno) + ": expected one number");
    }
    v.push_back(value);
  }
  return CyclicVector(std::move(v));
}

CyclicVector load_vector(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') return parse_vector_json(text);
  std::istringstream lines(text);
  return read_vector_lines(lines);
}

void write_vector_lines(std::ostream& out, std::span<const double> values) {
  for (double v : values) out << format_sig(v) << '\n';
}

std::string vector_json(std::span<const double> values) {
  std::string s = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += json_number(values[i]);
  }
  return s + "]";
}

namespace {

std::string k_label_json(const FamilyIndex& idx) {
  return idx.is_infinite() ? "\"inf\"" : idx.label();
}

}  // namespace

std::string gamma_table_csv(const std::vector<TangentSolution>& rows) {
  std::string s = "k,a,b,gamma,lambda,mu\n";
  for (const auto& r : rows) {
    s += r.idx.label() + ',' + format_sig(r.a) + ',' + format_sig(r.b) + ',' +
         format_sig(r.gamma, 12) + ',' + format_sig(r.lambda) + ',' + format_sig(r.mu) + '\n';
  }
  return s;
}

std::string gamma_table_json(const std::vector<TangentSolution>& rows) {
  std::string s = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (i) s += ',';
    s += "{\"k\":" + k_label_json(r.idx) + ",\"a\":" + json_number(r.a) +
         ",\"b\":" + json_number(r.b) + ",\"gamma\":" + json_number(r.gamma, 12) +
         ",\"lambda\":" + json_number(r.lambda) + ",\"mu\":" + json_number(r.mu) + "}";
  }
  return s + "]";
}

std::string tangent_json(const TangentSolution& r) {
  std::string s = "{\"k\":" + k_label_json(r.idx) + ",\"a\":" + json_number(r.a) +
                  ",\"b\":" + json_number(r.b) + ",\"gamma\":" + json_number(r.gamma) +
                  ",\"lambda\":" + json_number(r.lambda) + ",\"mu\":" + json_number(r.mu) +
                  ",\"residuals\":" + vector_json(r.residuals) +
                  ",\"root_residual\":" + json_number(r.root_residual) + "}";
  return s;
}

std::string witness_spec_json(const WitnessSpec& w) {
  return "{\"k\":" + std::to_string(w.k) + ",\"n\":" + std::to_string(w.n) +
         ",\"m\":" + std::to_string(w.m) + ",\"a_star\":" + json_number(w.a_star) +
         ",\"b_star\":" + json_number(w.b_star) + ",\"eps\":" + json_number(w.eps) +
         ",\"delta\":" + json_number(w.delta) + "}";
}

std::string minimization_json(const MinimizationResult& r) {
  return "{\"n\":" + std::to_string(r.n) + ",\"k\":" + std::to_string(r.k) +
         ",\"value\":" + json_number(r.value) +
         ",\"certified_floor\":" + json_number(r.certified_floor) +
         ",\"converged\":" + (r.converged ? "true" : "false") +
         ",\"restarts_used\":" + std::to_string(r.restarts_used) +
         ",\"gradient_norm\":" + json_number(r.gradient_norm) +
         ",\"x_best\":" + vector_json(r.x_best.entries()) + "}";
}

std::string bounds_csv(const std::vector<BoundsRow>& rows) {
  std::string s = "k,lower,upper,gap\n";
  for (const auto& r : rows) {
    s += r.label() + ',' + format_sig(r.lower) + ',' + format_sig(r.upper) + ',' +
         format_sig(r.gap) + '\n';
  }
  return s;
}

std::string bounds_json(const std::vector<BoundsRow>& rows) {
  std::string s = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (i) s += ',';
    s += "{\"k\":" + (r.k ? std::to_string(*r.k) : std::string("\"inf\"")) +
         ",\"lower\":" + json_number(r.lower) + ",\"upper\":" + json_number(r.upper) +
         ",\"gap\":" + json_number(r.gap) + "}";
  }
  return s + "]";
}

}  // namespace cyclic::io
