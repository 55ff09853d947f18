#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "toric/divisor.hpp"
#include "toric/intmat.hpp"

/// JSON interchange. Integers are written as decimal strings and read from
/// either strings or JSON integers; matrices are arrays of rows.
namespace toric::json_io {

using Json = nlohmann::ordered_json;

/// Thrown for malformed documents; the CLI maps it to exit status 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Int parse_int(const Json& j, const std::string& where);
IntVec parse_vector(const Json& j, const std::string& where);
/// Rows of equal length. `cols` is required when the array may be empty.
IntMat parse_matrix(const Json& j, const std::string& where,
                    std::optional<std::size_t> cols = std::nullopt);
divisor::AbGroup parse_group(const Json& j, const std::string& where);
std::uint64_t parse_count(const std::string& text, const std::string& where);

/// Member `key` of an object, or ParseError.
const Json& require(const Json& j, const std::string& key);

Json to_json(const Int& x);
Json to_json(const IntVec& v);
Json to_json(const IntMat& m);
Json to_json(const divisor::AbGroup& g);

/// Two-space indentation with arrays of scalars kept on one line.
std::string pretty(const Json& j);

/// {"A", "primes", "classes", "H_S", "H_X", "rho", "V"}; the profile is
/// recomputed from A on reading.
Json problem_to_json(const divisor::ExtensionProblem& problem);
divisor::ExtensionProblem problem_from_json(const Json& j);

/// Same fields, profile excluded.
bool same_problem(const divisor::ExtensionProblem& a, const divisor::ExtensionProblem& b);

}  // namespace toric::json_io
