#include "toric/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "toric/cones.hpp"
#include "toric/divisor.hpp"
#include "toric/error.hpp"
#include "toric/hilbert.hpp"
#include "toric/intlin.hpp"
#include "toric/json_io.hpp"
#include "toric/toric.hpp"

namespace toric::cli {
namespace {

using json_io::Json;
using json_io::ParseError;

constexpr std::string_view kOk = "ok";
constexpr std::string_view kFailed = "FAILED";

std::string_view verdict(bool ok) { return ok ? kOk : kFailed; }

// Ordered (label, status) pairs rendered as "label: status".
using Checks = std::vector<std::pair<std::string, std::string>>;

struct Report {
  Json json = Json::object();
  std::ostringstream text;
  Checks checks;

  void check(std::string label, bool ok) { checks.emplace_back(std::move(label), std::string(verdict(ok))); }
  void skip(std::string label) { checks.emplace_back(std::move(label), "n/a"); }
  bool all_ok() const {
    return std::none_of(checks.begin(), checks.end(), [](const auto& c) { return c.second == kFailed; });
  }

  std::string render(Format format) {
    if (format == Format::kJson) {
      if (!checks.empty()) {
        Json c = Json::object();
        for (const auto& [label, status] : checks) c[label] = status;
        json["checks"] = c;
      }
      return json_io::pretty(json) + "\n";
    }
    if (!checks.empty()) {
      text << "checks:\n";
      for (const auto& [label, status] : checks) text << "  " << label << ": " << status << "\n";
    }
    return text.str();
  }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void write_matrix(std::ostream& os, const std::string& title, const IntMat& m) {
  os << title << " (" << m.rows() << " x " << m.cols() << "):\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
    os << "]\n";
  }
}

void write_columns(std::ostream& os, const std::string& title, const IntMat& m) {
  os << title << " (" << m.rows() << " x " << m.cols() << "), columns:";
  if (m.cols() == 0) os << " none";
  os << "\n";
  for (std::size_t j = 0; j < m.cols(); ++j) os << "  " << to_string(m.col(j)) << "\n";
}

std::string status_name(LocalIrreducibility s) {
  switch (s) {
    case LocalIrreducibility::kIrreducible: return "Irreducible";
    case LocalIrreducibility::kNotIrreducible: return "NotIrreducible";
    case LocalIrreducibility::kNotComputed: return "NotComputed";
  }
  return "NotComputed";
}

Json read_document(const JobSpec& spec, std::istream& stdin_stream) {
  std::string content;
  if (spec.input_path == "-") {
    content.assign(std::istreambuf_iterator<char>(stdin_stream), {});
  } else {
    std::ifstream in(spec.input_path, std::ios::binary);
    if (!in) throw ParseError("cannot open input file '" + spec.input_path + "'");
    content.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(content);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

LatticePresentation presentation_of(const Json& doc) {
  return LatticePresentation(json_io::parse_matrix(json_io::require(doc, "A"), "A"));
}

void profile_checks(Report& r, const ToricProfile& p) {
  const IntMat& a = p.presentation;
  const IntMat& b = p.basis.basis;
  r.check("A*B = 0", (a * b).is_zero());
  r.check("B*E = 0", (b * p.kernel).is_zero());
  const std::size_t d = a.cols() - intlin::rank(a);
  if (p.contains_origin) {
    r.check("d = n - rank(A) = m - ell", p.dimension == d && d == p.m() - p.ell());
  } else {
    r.check("d = n - rank(A)", p.dimension == d);
  }
  if (p.is_prime && p.contains_origin) {
    const auto f = intlin::smith_normal_form(b).invariant_factors;
    r.check("SNF(B) invariant factors all 1",
            std::all_of(f.begin(), f.end(), [](const Int& x) { return x == 1; }));
  } else {
    r.skip("SNF(B) invariant factors all 1");
  }
}

Report classify_report(const Json& doc) {
  const auto pres = presentation_of(doc);
  const auto p = classify(pres);
  Report r;
  auto& j = r.json;
  j["A"] = json_io::to_json(p.presentation);
  j["n"] = p.presentation.cols();
  j["k"] = p.presentation.rows();
  Json bins = Json::array();
  for (const auto& bp : binomials(pres)) {
    Json e = Json::object();
    e["plus"] = json_io::to_json(bp.plus);
    e["minus"] = json_io::to_json(bp.minus);
    bins.push_back(e);
  }
  j["binomials"] = bins;
  j["is_prime"] = p.is_prime;
  j["contains_origin"] = p.contains_origin;
  j["positive_vector"] = p.positive_vector ? json_io::to_json(*p.positive_vector) : Json(nullptr);
  j["dimension"] = p.dimension;
  j["m"] = p.m();
  j["ell"] = p.ell();
  j["B"] = json_io::to_json(p.basis.basis);
  j["E"] = json_io::to_json(p.kernel);
  j["normalization_is_affine_space"] = p.normalization_is_affine_space;
  Json li = Json::object();
  li["status"] = status_name(p.local_irreducibility.status);
  if (p.local_irreducibility.status != LocalIrreducibility::kNotComputed) {
    li["column_gcds"] = json_io::to_json(p.local_irreducibility.column_gcds);
  }
  j["local_irreducibility"] = li;

  auto& t = r.text;
  write_matrix(t, "A", p.presentation);
  t << "binomials:\n";
  for (const auto& bp : binomials(pres)) t << "  x^" << to_string(bp.plus) << " - x^" << to_string(bp.minus) << "\n";
  t << "prime: " << yes_no(p.is_prime) << "\n";
  t << "contains origin: " << yes_no(p.contains_origin);
  if (p.positive_vector) t << " (positive vector " << to_string(*p.positive_vector) << ")";
  t << "\n";
  t << "dimension: " << p.dimension << "\n";
  write_columns(t, "Hilbert basis B", p.basis.basis);
  write_columns(t, "kernel E", p.kernel);
  t << "normalization is affine space: " << yes_no(p.normalization_is_affine_space) << "\n";
  t << "local irreducibility: " << status_name(p.local_irreducibility.status);
  if (p.local_irreducibility.status == LocalIrreducibility::kNotIrreducible) {
    t << " (columns";
    for (auto c : p.local_irreducibility.offending_columns())
      t << " " << c << ": gcd " << p.local_irreducibility.column_gcds[c - 1].get_str();
    t << ")";
  }
  t << "\n";
  profile_checks(r, p);
  return r;
}

Report hilbert_report(const Json& doc) {
  const auto pres = presentation_of(doc);
  const auto hb = hilbert::hilbert_basis(pres.matrix());
  Report r;
  r.json["A"] = json_io::to_json(pres.matrix());
  r.json["m"] = hb.m();
  r.json["B"] = json_io::to_json(hb.basis);
  write_matrix(r.text, "A", pres.matrix());
  write_columns(r.text, "Hilbert basis B", hb.basis);
  r.check("A*B = 0", (pres.matrix() * hb.basis).is_zero());
  r.check("B nonnegative", hb.basis.is_nonnegative());
  return r;
}

Report saturate_report(const Json& doc) {
  cones::SemigroupPresentation s;
  if (doc.is_object() && doc.contains("generators")) {
    const auto& g = doc["generators"];
    std::optional<std::size_t> dim;
    if (doc.contains("dim")) dim = json_io::parse_int(doc["dim"], "dim").get_ui();
    if (!dim && g.is_array() && !g.empty() && g[0].is_array()) dim = g[0].size();
    if (!dim) throw ParseError("generators: cannot infer the ambient dimension; supply \"dim\"");
    const IntMat m = json_io::parse_matrix(g, "generators", dim);
    s = cones::SemigroupPresentation{*dim, m.row_list()};
  } else if (doc.is_object() && doc.contains("A")) {
    const auto hb = hilbert::hilbert_basis(presentation_of(doc).matrix());
    if (hb.m() == 0) throw Error(ErrorKind::kInvalidInput, "ker A meets N^n only in 0; B has no rows to saturate");
    s = cones::SemigroupPresentation{hb.m(), hb.basis.row_list()};
  } else {
    throw ParseError("expected field \"generators\" or \"A\"");
  }
  const auto sat = cones::saturate_semigroup(s);
  const bool normal = cones::is_normal(s);
  Report r;
  r.json["dim"] = s.ambient_dim;
  r.json["generators"] = json_io::to_json(IntMat::from_rows(s.generators, s.ambient_dim));
  r.json["saturation"] = json_io::to_json(IntMat::from_rows(sat.generators, s.ambient_dim));
  r.json["is_normal"] = normal;
  r.text << "semigroup generators in Z^" << s.ambient_dim << ":\n";
  for (const auto& g : s.generators) r.text << "  " << to_string(g) << "\n";
  r.text << "saturation generators:\n";
  for (const auto& g : sat.generators) r.text << "  " << to_string(g) << "\n";
  r.text << "normal: " << yes_no(normal) << "\n";
  const auto cone = cones::RationalCone::from_generators(s.ambient_dim, s.generators);
  r.check("saturation inside cone",
          std::all_of(sat.generators.begin(), sat.generators.end(), [&](const IntVec& g) { return cone.contains(g); }));
  r.check("generators in saturation", std::all_of(s.generators.begin(), s.generators.end(), [&](const IntVec& g) {
            return cones::semigroup_contains(sat, g);
          }));
  return r;
}

Report obstruction_report(const Json& doc) {
  hilbert::HilbertBasisMat hb;
  if (doc.is_object() && doc.contains("B")) {
    hb = hilbert::from_matrix(json_io::parse_matrix(doc["B"], "B"));
  } else {
    hb = hilbert::hilbert_basis(presentation_of(doc).matrix());
  }
  const auto wit = hilbert::minimal_obstruction(hb);
  if (!wit) throw Error(ErrorKind::kKerBTrivial, "ker B trivial: no two monoid representations coincide");
  Report r;
  r.json["B"] = json_io::to_json(hb.basis);
  for (const auto& [name, vec] : std::initializer_list<std::pair<const char*, const IntVec*>>{
           {"v", &wit->v}, {"w", &wit->w}, {"z", &wit->z}, {"w1", &wit->w1},
           {"w2", &wit->w2}, {"z1", &wit->z1}, {"z2", &wit->z2}}) {
    r.json[name] = json_io::to_json(*vec);
  }
  write_columns(r.text, "Hilbert basis B", hb.basis);
  r.text << "v = " << to_string(wit->v) << "\n";
  r.text << "w = " << to_string(wit->w) << " = " << to_string(wit->w1) << " + " << to_string(wit->w2) << "\n";
  r.text << "z = " << to_string(wit->z) << " = " << to_string(wit->z1) << " + " << to_string(wit->z2) << "\n";
  const IntMat& b = hb.basis;
  r.check("B*w = v", b * wit->w == wit->v);
  r.check("B*z = v", b * wit->z == wit->v);
  bool disjoint = true;
  for (std::size_t i = 0; i < hb.m(); ++i) disjoint = disjoint && (sgn(wit->w[i]) == 0 || sgn(wit->z[i]) == 0);
  r.check("supp(w) and supp(z) disjoint", disjoint);
  r.check("w = w1 + w2, z = z1 + z2", add(wit->w1, wit->w2) == wit->w && add(wit->z1, wit->z2) == wit->z);
  return r;
}

void write_problem_text(std::ostream& t, const divisor::ExtensionProblem& problem) {
  const auto& env = problem.env;
  write_matrix(t, "A", env.profile.presentation);
  t << "H_S: Z^" << env.h_s.free_rank();
  for (const auto& o : env.h_s.torsion_orders()) t << " + Z/" << o.get_str();
  t << "\nH_X: Z^" << env.h_x.free_rank();
  for (const auto& o : env.h_x.torsion_orders()) t << " + Z/" << o.get_str();
  t << "\n";
  write_matrix(t, "rho", env.rho.matrix);
  t << "primes (divisor column, class):\n";
  for (std::size_t g = 0; g < env.primes.size(); ++g)
    t << "  " << env.primes[g] << ": " << to_string(problem.divisor.col(g)) << ", "
      << to_string(env.classes.row(g)) << "\n";
}

Report counterexample_report(const Json& doc, Format format) {
  auto labeling = divisor::Labeling::kExampleCone;
  if (doc.is_object() && doc.contains("labeling")) {
    const auto& l = doc["labeling"];
    if (l == "symmetric") {
      labeling = divisor::Labeling::kSymmetric;
    } else if (l != "example") {
      throw ParseError("labeling: expected \"example\" or \"symmetric\"");
    }
  }
  const auto problem = divisor::generate_counterexample(classify(presentation_of(doc)), labeling);
  Report r;
  r.json = json_io::problem_to_json(problem);
  if (format == Format::kText) {
    write_problem_text(r.text, problem);
    r.check("A*V = 0", (problem.env.profile.presentation * problem.divisor).is_zero());
    r.check("V*classes = 0",
            problem.env.h_s.reduce_rows(problem.divisor * problem.env.classes).is_zero());
  }
  return r;
}

Report decide_report(const Json& doc, std::uint64_t budget) {
  const auto problem = json_io::problem_from_json(doc);
  const auto d = divisor::decide_extension(problem, budget);
  Report r;
  const bool ok = d.verdict == divisor::Verdict::kExtendable;
  r.json["verdict"] = ok ? "Extendable" : "NotExtendable";
  r.json["selections_examined"] = d.selections_examined;
  r.json["selections_total"] = d.selections_total;
  r.text << "verdict: " << (ok ? "Extendable" : "NotExtendable") << "\n";
  r.text << "selections examined: " << d.selections_examined << " of " << d.selections_total << "\n";
  if (d.certificate) {
    Json c = Json::object();
    c["U"] = json_io::to_json(d.certificate->selection);
    c["eta"] = json_io::to_json(d.certificate->eta);
    r.json["certificate"] = c;
    write_matrix(r.text, "certificate U", d.certificate->selection);
    write_matrix(r.text, "certificate eta", d.certificate->eta);
    const auto& prof = problem.env.profile;
    r.check("B*U = V", prof.basis.basis * d.certificate->selection == problem.divisor);
    r.check("class(U) = rho(E*eta)", divisor::divisor_class(problem.env, d.certificate->selection) ==
                                         problem.env.rho.apply_rows(prof.kernel * d.certificate->eta));
  } else {
    r.json["certificate"] = nullptr;
    r.check("all selections examined", d.selections_examined == d.selections_total);
  }
  return r;
}

std::uint64_t effective_budget(const JobSpec& spec, const std::optional<std::string>& env) {
  if (spec.budget) return *spec.budget;
  if (env && !env->empty()) return json_io::parse_count(*env, "TORIC_BUDGET");
  return divisor::kDefaultBudget;
}

}  // namespace

std::string_view command_name(Command c) {
  switch (c) {
    case Command::kClassify: return "classify";
    case Command::kHilbertBasis: return "hilbert-basis";
    case Command::kSaturate: return "saturate";
    case Command::kObstruction: return "obstruction";
    case Command::kCounterexample: return "counterexample";
    case Command::kDecideExtension: return "decide-extension";
  }
  return "classify";
}

std::optional<Command> parse_command(std::string_view name) {
  for (auto c : {Command::kClassify, Command::kHilbertBasis, Command::kSaturate, Command::kObstruction,
                 Command::kCounterexample, Command::kDecideExtension}) {
    if (command_name(c) == name) return c;
  }
  return std::nullopt;
}

std::string_view command_summary(Command c) {
  switch (c) {
    case Command::kClassify: return "Profile of {\"A\"}: binomials, Hilbert basis, kernel and flags";
    case Command::kHilbertBasis: return "Hilbert basis of ker A in N^n for {\"A\"}";
    case Command::kSaturate: return "Saturation of {\"generators\"} or of the rows of B for {\"A\"}";
    case Command::kObstruction: return "Minimal obstruction witness for {\"A\"} or {\"B\"}";
    case Command::kCounterexample: return "Non-extendable divisor problem for {\"A\"}";
    case Command::kDecideExtension: return "Decide an extension problem document";
  }
  return "";
}

RunResult run(const JobSpec& spec, std::istream& stdin_stream, const std::optional<std::string>& budget_env) {
  RunResult result;
  const std::string prefix = std::string(command_name(spec.command)) + ": ";
  try {
    const std::uint64_t budget = effective_budget(spec, budget_env);
    const Json doc = read_document(spec, stdin_stream);
    Report report;
    switch (spec.command) {
      case Command::kClassify: report = classify_report(doc); break;
      case Command::kHilbertBasis: report = hilbert_report(doc); break;
      case Command::kSaturate: report = saturate_report(doc); break;
      case Command::kObstruction: report = obstruction_report(doc); break;
      case Command::kCounterexample: report = counterexample_report(doc, spec.format); break;
      case Command::kDecideExtension: report = decide_report(doc, budget); break;
    }
    const bool ok = report.all_ok();
    result.report = report.render(spec.format);
    if (!ok) {
      result.status = kExitInternal;
      result.diagnostic = prefix + "a verifying identity failed\n";
    }
  } catch (const ParseError& e) {
    result.status = kExitParse;
    result.diagnostic = prefix + "parse error: " + e.what() + "\n";
  } catch (const nlohmann::json::exception& e) {
    result.status = kExitParse;
    result.diagnostic = prefix + "parse error: " + e.what() + "\n";
  } catch (const Error& e) {
    result.status = e.kind() == ErrorKind::kInvalidInput ? kExitParse : kExitDomain;
    result.diagnostic = prefix + std::string(to_string(e.kind())) + ": " + e.what() + "\n";
  } catch (const std::exception& e) {
    result.status = kExitInternal;
    result.diagnostic = prefix + "internal error: " + e.what() + "\n";
  }
  return result;
}

int main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err,
         const std::optional<std::string>& budget_env) {
  CLI::App app{"Affine toric varieties from lattice data: classification and extension decisions"};
  app.require_subcommand(1);
  JobSpec spec;
  std::string format = "text";
  std::optional<std::uint64_t> budget;
  for (auto c : {Command::kClassify, Command::kHilbertBasis, Command::kSaturate, Command::kObstruction,
                 Command::kCounterexample, Command::kDecideExtension}) {
    auto* sub = app.add_subcommand(std::string(command_name(c)), std::string(command_summary(c)));
    sub->add_option("--input,-i", spec.input_path, "Input JSON document, '-' for stdin")->required();
    sub->add_option("--format,-f", format, "Report format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--budget", budget, "Cap on fiber selections examined (overrides TORIC_BUDGET)");
    sub->callback([&spec, c] { spec.command = c; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitParse;
  }
  spec.format = format == "json" ? Format::kJson : Format::kText;
  spec.budget = budget;
  const auto result = run(spec, in, budget_env);
  out << result.report;
  err << result.diagnostic;
  return result.status;
}

}  // namespace toric::cli
