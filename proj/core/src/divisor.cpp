#include "toric/divisor.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "toric/error.hpp"
#include "toric/hilbert.hpp"
#include "toric/intlin.hpp"

namespace toric::divisor {
namespace {

void require_prime_with_origin(const ToricProfile& profile) {
  if (!profile.is_prime) {
    throw Error(ErrorKind::kNotPrime, "lattice ideal is not prime (Z^n / lattice has torsion)");
  }
  if (!profile.contains_origin) {
    throw Error(ErrorKind::kNoOrigin, "variety does not contain the origin");
  }
}

// Columns t_k e_{free + k}, one per torsion coordinate.
IntMat relation_matrix(const AbGroup& g) {
  IntMat r(g.dim(), g.torsion_orders().size());
  for (std::size_t k = 0; k < g.torsion_orders().size(); ++k)
    r(g.free_rank() + k, k) = g.torsion_orders()[k];
  return r;
}

}  // namespace

AbGroup::AbGroup(std::size_t free_rank, std::vector<Int> torsion_orders)
    : free_rank_(free_rank), torsion_(std::move(torsion_orders)) {
  for (const auto& t : torsion_)
    if (t < 2) throw Error(ErrorKind::kInvalidInput, "torsion orders must be >= 2");
}

Int AbGroup::order(std::size_t i) const {
  return i < free_rank_ ? Int(0) : torsion_[i - free_rank_];
}

IntVec AbGroup::reduce(const IntVec& x) const {
  if (x.size() != dim()) {
    throw Error(ErrorKind::kInvalidInput, "group element has the wrong number of coordinates");
  }
  IntVec out = x;
  for (std::size_t k = 0; k < torsion_.size(); ++k) {
    Int& c = out[free_rank_ + k];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), torsion_[k].get_mpz_t());
  }
  return out;
}

IntMat AbGroup::reduce_rows(const IntMat& xs) const {
  IntMat out(xs.rows(), xs.cols());
  for (std::size_t i = 0; i < xs.rows(); ++i) {
    const IntVec r = reduce(xs.row(i));
    for (std::size_t j = 0; j < xs.cols(); ++j) out(i, j) = r[j];
  }
  return out;
}

bool AbGroup::is_zero(const IntVec& x) const { return toric::is_zero(reduce(x)); }

GroupHom GroupHom::make(AbGroup source, AbGroup target, IntMat matrix) {
  if (matrix.rows() != target.dim() || matrix.cols() != source.dim()) {
    throw Error(ErrorKind::kInvalidInput, "homomorphism matrix must be dim(target) x dim(source)");
  }
  for (std::size_t k = 0; k < source.torsion_orders().size(); ++k) {
    const std::size_t s = source.free_rank() + k;
    if (!target.is_zero(scale(matrix.col(s), source.torsion_orders()[k]))) {
      throw Error(ErrorKind::kInvalidInput,
                  "homomorphism is not well defined on torsion coordinate " + std::to_string(s + 1));
    }
  }
  return GroupHom{std::move(source), std::move(target), std::move(matrix)};
}

IntVec GroupHom::apply(const IntVec& x) const { return target.reduce(matrix * x); }

IntMat GroupHom::apply_rows(const IntMat& xs) const {
  return target.reduce_rows((matrix * xs.transpose()).transpose());
}

bool GroupHom::is_surjective() const {
  const IntMat span = hstack(matrix, relation_matrix(target));
  return intlin::solve_integer(span, IntMat::identity(target.dim())).has_value();
}

void DivisorEnvironment::validate() const {
  if (classes.rows() != primes.size() || classes.cols() != h_s.dim()) {
    throw Error(ErrorKind::kInvalidInput, "classes must be |primes| x dim(H_S)");
  }
  if (!(rho.source == h_x) || !(rho.target == h_s)) {
    throw Error(ErrorKind::kInvalidInput, "rho must map H_X to H_S");
  }
  std::set<std::string> seen;
  for (const auto& p : primes)
    if (!seen.insert(p).second) {
      throw Error(ErrorKind::kInvalidInput, "duplicate prime divisor name '" + p + "'");
    }
  if (profile.basis.n() != profile.presentation.cols()) {
    throw Error(ErrorKind::kInvalidInput, "profile basis does not match its presentation");
  }
}

ExtensionProblem build_extension_problem(DivisorEnvironment env, IntMat divisor) {
  env.validate();
  const auto& prof = env.profile;
  if (divisor.rows() != prof.n() || divisor.cols() != env.primes.size()) {
    throw Error(ErrorKind::kInvalidInput, "V must be n x |primes|");
  }
  if (!divisor.is_nonnegative()) {
    throw Error(ErrorKind::kInvalidInput, "V must be nonnegative");
  }
  for (std::size_t g = 0; g < divisor.cols(); ++g) {
    const IntVec v = divisor.col(g);
    if (!is_zero(prof.presentation * v)) {
      throw Error(ErrorKind::kColumnNotInKernel,
                  "column for " + env.primes[g] + " " + to_string(v) + " is not in ker A");
    }
    if (hilbert::fiber(prof.basis, v).empty()) {
      throw Error(ErrorKind::kEmptyFiber,
                  "column for " + env.primes[g] + " " + to_string(v) + " is not in B(N^m)");
    }
  }
  // (f_j) is principal for every j.
  const IntMat classes_of_f = env.h_s.reduce_rows(divisor * env.classes);
  if (!classes_of_f.is_zero()) {
    throw Error(ErrorKind::kNonPrincipalDivisor,
                "the divisor of f has nonzero first Chern class in H_S^n");
  }
  return ExtensionProblem{std::move(env), std::move(divisor)};
}

IntMat divisor_class(const DivisorEnvironment& env, const IntMat& selection) {
  return env.h_s.reduce_rows(selection * env.classes);
}

std::optional<IntMat> class_membership(const DivisorEnvironment& env, const IntMat& c) {
  const IntMat& e = env.profile.kernel;
  const std::size_t m = e.rows(), ell = e.cols();
  const std::size_t ds = env.h_s.dim(), dx = env.h_x.dim();
  if (c.rows() != m || c.cols() != ds) {
    throw Error(ErrorKind::kInvalidInput, "class must be m x dim(H_S)");
  }
  const std::size_t ts = env.h_s.torsion_orders().size();

  // Unknowns: eta (ell * dx) then relation multipliers (m * ts).
  // Equation (i, s): sum E(i,l) rho(s,x) eta(l,x) + t_s y(i,s) = c(i,s).
  IntMat system(m * ds, ell * dx + m * ts);
  IntMat rhs(m * ds, 1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t s = 0; s < ds; ++s) {
      const std::size_t eq = i * ds + s;
      rhs(eq, 0) = c(i, s);
      for (std::size_t l = 0; l < ell; ++l)
        for (std::size_t x = 0; x < dx; ++x)
          system(eq, l * dx + x) = e(i, l) * env.rho.matrix(s, x);
      if (s >= env.h_s.free_rank()) {
        const std::size_t k = s - env.h_s.free_rank();
        system(eq, ell * dx + i * ts + k) = env.h_s.order(s);
      }
    }
  const auto sol = intlin::solve_integer(system, rhs);
  if (!sol) return std::nullopt;
  IntMat eta(ell, dx);
  for (std::size_t l = 0; l < ell; ++l)
    for (std::size_t x = 0; x < dx; ++x) eta(l, x) = (*sol)(l * dx + x, 0);
  return env.h_x.reduce_rows(eta);
}

bool verify_certificate(const ExtensionProblem& problem, const Certificate& cert) {
  const auto& env = problem.env;
  const auto& prof = env.profile;
  if (cert.selection.rows() != prof.m() || cert.selection.cols() != env.primes.size()) return false;
  if (cert.eta.rows() != prof.ell() || cert.eta.cols() != env.h_x.dim()) return false;
  if (!cert.selection.is_nonnegative()) return false;
  if (!(prof.basis.basis * cert.selection == problem.divisor)) return false;
  const IntMat lhs = divisor_class(env, cert.selection);
  const IntMat rhs = env.rho.apply_rows(prof.kernel * cert.eta);
  return lhs == rhs;
}

ExtensionDecision decide_extension(const ExtensionProblem& problem, std::uint64_t budget) {
  const auto& env = problem.env;
  const auto& prof = env.profile;
  require_prime_with_origin(prof);

  const std::size_t primes = env.primes.size();
  std::vector<std::vector<IntVec>> fibers;
  fibers.reserve(primes);
  std::uint64_t total = 1;
  for (std::size_t g = 0; g < primes; ++g) {
    fibers.push_back(hilbert::fiber(prof.basis, problem.divisor.col(g)));
    if (fibers.back().empty()) {
      throw Error(ErrorKind::kEmptyFiber, "no preimage under B for prime " + env.primes[g]);
    }
    const std::uint64_t size = fibers.back().size();
    total = total > std::numeric_limits<std::uint64_t>::max() / size
                ? std::numeric_limits<std::uint64_t>::max()
                : total * size;
  }

  ExtensionDecision decision;
  decision.selections_total = total;
  std::vector<std::size_t> index(primes, 0);
  auto selection = [&] {
    IntMat u(prof.m(), primes);
    for (std::size_t g = 0; g < primes; ++g) u.set_col(g, fibers[g][index[g]]);
    return u;
  };
  auto accept = [&](Certificate cert) {
    if (!verify_certificate(problem, cert)) {
      throw std::logic_error("extension certificate failed verification");
    }
    decision.verdict = Verdict::kExtendable;
    decision.certificate = std::move(cert);
  };

  if (prof.ell() == 0) {
    // B is injective: the selection is unique and the normalisation C^d
    // lifts every nondegenerate map.
    decision.selections_examined = 1;
    accept(Certificate{selection(), IntMat(0, env.h_x.dim())});
    return decision;
  }

  // Odometer over fiber indices, last prime fastest.
  auto advance = [&] {
    for (std::size_t g = primes; g-- > 0;) {
      if (++index[g] < fibers[g].size()) return true;
      index[g] = 0;
    }
    return false;
  };
  do {
    if (decision.selections_examined >= budget) {
      throw Error(ErrorKind::kSearchBudgetExceeded,
                  "fiber selection search exceeded budget of " + std::to_string(budget) +
                      " (total " + std::to_string(total) + ")");
    }
    ++decision.selections_examined;
    IntMat u = selection();
    if (auto eta = class_membership(env, divisor_class(env, u))) {
      accept(Certificate{std::move(u), std::move(*eta)});
      return decision;
    }
  } while (advance());
  decision.verdict = Verdict::kNotExtendable;
  return decision;
}

ExtensionProblem generate_counterexample(const ToricProfile& profile, Labeling labeling) {
  require_prime_with_origin(profile);
  if (profile.ell() == 0) {
    throw Error(ErrorKind::kKerBTrivial,
                "ker B trivial: the normalisation is affine space, so no counterexample exists");
  }
  const auto witness = hilbert::minimal_obstruction(profile.basis);
  if (!witness) throw std::logic_error("ker B nontrivial but no obstruction witness");

  DivisorEnvironment env;
  env.primes = {"Z1", "Z2", "W1", "W2"};
  env.h_s = AbGroup(1, {});
  env.h_x = AbGroup(0, {});
  env.rho = GroupHom::make(env.h_x, env.h_s, IntMat(1, 0));
  env.classes = IntMat{{-1}, {-1}, {1}, {1}};
  env.profile = profile;

  const IntMat& b = profile.basis.basis;
  std::vector<IntVec> cols;
  if (labeling == Labeling::kExampleCone) {
    cols = {b * witness->w1, b * witness->w2, b * witness->z1, b * witness->z2};
  } else {
    cols = {b * witness->z1, b * witness->z2, b * witness->w1, b * witness->w2};
  }
  return build_extension_problem(std::move(env), IntMat::from_columns(cols, profile.n()));
}

}  // namespace toric::divisor
