#include "toric/toric.hpp"

#include "toric/error.hpp"
#include "toric/intlin.hpp"

namespace toric {

LatticePresentation::LatticePresentation(IntMat a) : a_(std::move(a)) {
  if (a_.cols() == 0) {
    throw Error(ErrorKind::kInvalidInput, "presentation needs n >= 1 columns");
  }
  if (a_.rows() == 0 || a_.is_zero()) {
    throw Error(ErrorKind::kInvalidInput, "presentation matrix A must be nonzero");
  }
}

std::vector<std::size_t> LocalIrreducibilityResult::offending_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < column_gcds.size(); ++i)
    if (column_gcds[i] != 1) out.push_back(i + 1);
  return out;
}

std::vector<BinomialPair> binomials(const LatticePresentation& p) {
  std::vector<BinomialPair> out;
  for (const auto& row : p.matrix().row_list())
    out.push_back({positive_part(row), negative_part(row)});
  return out;
}

ToricProfile classify(const LatticePresentation& p) {
  ToricProfile prof;
  const IntMat& a = p.matrix();
  prof.presentation = a;
  prof.is_prime = intlin::is_torsion_free_quotient(a);
  prof.dimension = p.n() - intlin::rank(a);
  prof.basis = hilbert::hilbert_basis(a);
  prof.positive_vector = hilbert::positive_kernel_vector(prof.basis);
  prof.contains_origin = prof.positive_vector.has_value();
  prof.kernel = intlin::kernel_basis(prof.basis.basis);
  prof.normalization_is_affine_space = prof.ell() == 0;
  if (prof.ell() == 0 && prof.is_prime && prof.contains_origin) {
    prof.local_irreducibility = is_locally_irreducible(prof.basis);
  }
  return prof;
}

LocalIrreducibilityResult is_locally_irreducible(const hilbert::HilbertBasisMat& b) {
  const IntMat& mat = b.basis;
  LocalIrreducibilityResult res;
  res.column_gcds.assign(mat.cols(), Int(0));
  for (std::size_t j = 0; j < mat.rows(); ++j) {
    const IntVec row = mat.row(j);
    if (support_size(row) != 1) continue;
    for (std::size_t i = 0; i < mat.cols(); ++i)
      if (sgn(row[i]) != 0) res.column_gcds[i] = gcd(res.column_gcds[i], row[i]);
  }
  bool irreducible = true;
  for (std::size_t i = 0; i < mat.cols(); ++i) {
    if (sgn(res.column_gcds[i]) == 0) {
      throw Error(ErrorKind::kMissingDiagonalRow,
                  "no row of B is supported only at column " + std::to_string(i + 1));
    }
    if (res.column_gcds[i] != 1) irreducible = false;
  }
  res.status = irreducible ? LocalIrreducibility::kIrreducible
                           : LocalIrreducibility::kNotIrreducible;
  return res;
}

std::vector<Rational> evaluate_monomial_map(const hilbert::HilbertBasisMat& b,
                                            const std::vector<Rational>& t) {
  const IntMat& mat = b.basis;
  if (t.size() != mat.cols()) {
    throw Error(ErrorKind::kInvalidInput, "point has the wrong number of coordinates");
  }
  std::vector<Rational> out(mat.rows(), Rational(1));
  for (std::size_t j = 0; j < mat.rows(); ++j)
    for (std::size_t i = 0; i < mat.cols(); ++i) {
      const Int& e = mat(j, i);
      if (sgn(e) == 0) continue;  // 0^0 = 1
      Rational pw;
      mpz_pow_ui(pw.get_num_mpz_t(), t[i].get_num_mpz_t(), e.get_ui());
      mpz_pow_ui(pw.get_den_mpz_t(), t[i].get_den_mpz_t(), e.get_ui());
      pw.canonicalize();
      out[j] *= pw;
    }
  return out;
}

}  // namespace toric
