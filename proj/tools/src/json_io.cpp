#include "toric/json_io.hpp"

#include <algorithm>
#include <charconv>

#include "toric/toric.hpp"

namespace toric::json_io {

const Json& require(const Json& j, const std::string& key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError("missing field \"" + key + "\"");
  return *it;
}

Int parse_int(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Int(std::to_string(j.get<std::uint64_t>()))
                                  : Int(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start ||
        !std::all_of(s.begin() + start, s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw ParseError(where + ": \"" + s + "\" is not a decimal integer");
    }
    return Int(s[0] == '+' ? s.substr(1) : s);
  }
  throw ParseError(where + ": expected an integer or a decimal string");
}

IntVec parse_vector(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  IntVec out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(parse_int(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

IntMat parse_matrix(const Json& j, const std::string& where, std::optional<std::size_t> cols) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of rows");
  if (j.empty()) return IntMat(0, cols.value_or(0));
  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < j.size(); ++i)
    rows.push_back(parse_vector(j[i], where + "[" + std::to_string(i) + "]"));
  const std::size_t width = cols.value_or(rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].size() != width) {
      throw ParseError(where + ": row " + std::to_string(i) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " + std::to_string(width));
    }
  return IntMat::from_rows(rows, width);
}

divisor::AbGroup parse_group(const Json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected {\"free_rank\", \"torsion\"}");
  const Int rank = parse_int(require(j, "free_rank"), where + ".free_rank");
  if (rank < 0 || rank > 1024) throw ParseError(where + ".free_rank out of range");
  std::vector<Int> torsion;
  if (auto it = j.find("torsion"); it != j.end()) torsion = parse_vector(*it, where + ".torsion");
  for (const auto& t : torsion)
    if (t < 2) throw ParseError(where + ".torsion: orders must be >= 2");
  return divisor::AbGroup(rank.get_ui(), std::move(torsion));
}

std::uint64_t parse_count(const std::string& text, const std::string& where) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || text.empty()) {
    throw ParseError(where + ": \"" + text + "\" is not a nonnegative integer");
  }
  return value;
}

Json to_json(const Int& x) { return x.get_str(); }

Json to_json(const IntVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const IntMat& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Json to_json(const divisor::AbGroup& g) {
  Json out = Json::object();
  out["free_rank"] = g.free_rank();
  out["torsion"] = to_json(g.torsion_orders());
  return out;
}

namespace {

bool is_flat(const Json& j) {
  return j.is_array() && std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
}

void pretty_into(std::string& out, const Json& j, std::size_t depth) {
  const std::string pad(2 * (depth + 1), ' '), close(2 * depth, ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : j.items()) {
      out += pad + Json(key).dump() + ": ";
      pretty_into(out, value, depth + 1);
      out += ++i < j.size() ? ",\n" : "\n";
    }
    out += close + "}";
  } else if (j.is_array() && !j.empty() && !is_flat(j)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      pretty_into(out, j[i], depth + 1);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += close + "]";
  } else if (j.is_array()) {
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
    out += "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string pretty(const Json& j) {
  std::string out;
  pretty_into(out, j, 0);
  return out;
}

Json problem_to_json(const divisor::ExtensionProblem& problem) {
  const auto& env = problem.env;
  Json out = Json::object();
  out["A"] = to_json(env.profile.presentation);
  out["primes"] = env.primes;
  out["classes"] = to_json(env.classes);
  out["H_S"] = to_json(env.h_s);
  out["H_X"] = to_json(env.h_x);
  out["rho"] = to_json(env.rho.matrix);
  out["V"] = to_json(problem.divisor);
  return out;
}

divisor::ExtensionProblem problem_from_json(const Json& j) {
  const IntMat a = parse_matrix(require(j, "A"), "A");
  divisor::DivisorEnvironment env;
  const auto& primes = require(j, "primes");
  if (!primes.is_array()) throw ParseError("primes: expected an array of names");
  for (const auto& p : primes) {
    if (!p.is_string()) throw ParseError("primes: names must be strings");
    env.primes.push_back(p.get<std::string>());
  }
  env.h_s = parse_group(require(j, "H_S"), "H_S");
  env.h_x = parse_group(require(j, "H_X"), "H_X");
  env.classes = parse_matrix(require(j, "classes"), "classes", env.h_s.dim());
  if (env.classes.rows() != env.primes.size()) {
    throw ParseError("classes: expected one row per prime");
  }
  const IntMat rho = parse_matrix(require(j, "rho"), "rho", env.h_x.dim());
  if (rho.rows() != env.h_s.dim()) throw ParseError("rho: expected dim(H_S) rows");
  env.rho = divisor::GroupHom::make(env.h_x, env.h_s, rho);
  const IntMat v = parse_matrix(require(j, "V"), "V", env.primes.size());
  env.profile = classify(LatticePresentation(a));
  return divisor::build_extension_problem(std::move(env), v);
}

bool same_problem(const divisor::ExtensionProblem& a, const divisor::ExtensionProblem& b) {
  return a.env.profile.presentation == b.env.profile.presentation && a.env.primes == b.env.primes &&
         a.env.classes == b.env.classes && a.env.h_s == b.env.h_s && a.env.h_x == b.env.h_x &&
         a.env.rho == b.env.rho && a.divisor == b.divisor;
}

}  // namespace toric::json_io
