#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cyclic/bounds.hpp"
#include "cyclic/cyclic_vector.hpp"
#include "cyclic/optimize.hpp"
#include "cyclic/tangent.hpp"
#include "cyclic/witness.hpp"

namespace cyclic::io {

/// %.{digits}g; non-finite values become "nan", "inf" or "-inf".
std::string format_sig(double v, int digits = 17);

/// JSON number with 17 significant digits; non-finite values become null.
std::string json_number(double v, int digits = 17);

/// Parses a JSON array of numbers. Throws io::ParseError or DomainError.
CyclicVector parse_vector_json(std::string_view text);

/// One value per line; blank lines and lines starting with '#' are skipped.
CyclicVector read_vector_lines(std::istream& in);

/// Reads a vector file, JSON when its first non-space byte is '['.
CyclicVector load_vector(const std::string& path);

void write_vector_lines(std::ostream& out, std::span<const double> values);
std::string vector_json(std::span<const double> values);

/// Header `k,a,b,gamma,lambda,mu`; gamma carries 12 significant digits.
std::string gamma_table_csv(const std::vector<TangentSolution>& rows);
std::string gamma_table_json(const std::vector<TangentSolution>& rows);

std::string tangent_json(const TangentSolution& sol);

/// Fields k, n, m, a_star, b_star, eps, delta.
std::string witness_spec_json(const WitnessSpec& spec);

/// {n,k,value,certified_floor,converged,restarts_used,gradient_norm,x_best}
std::string minimization_json(const MinimizationResult& r);

/// Header `k,lower,upper,gap`; the limit row uses k = inf.
std::string bounds_csv(const std::vector<BoundsRow>& rows);
std::string bounds_json(const std::vector<BoundsRow>& rows);

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cyclic::io
