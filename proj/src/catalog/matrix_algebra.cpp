#include "geostruct/catalog.hpp"

namespace geostruct {

const RationalVector& LabeledAlgebra::element(const std::string& name) const {
  auto it = named_elements.find(name);
  if (it == named_elements.end()) throw std::out_of_range("no named element " + name);
  return it->second;
}

const Subspace& LabeledAlgebra::subspace(const std::string& name) const {
  auto it = named_subspaces.find(name);
  if (it == named_subspaces.end()) throw std::out_of_range("no named subspace " + name);
  return it->second;
}

RationalVector LabeledAlgebra::coordinates_of(const RationalMatrix& m) const {
  if (basis_matrices.empty()) throw std::logic_error("algebra has no matrix realization");
  const std::size_t d = basis_matrices.size();
  RationalVector rhs(d);
  for (std::size_t r = 0; r < d; ++r) rhs[r] = m.entries()[coordinate_positions[r]];
  RationalVector x = coordinate_solver.apply(rhs);
  if (!(matrix_of(x) == m)) throw std::domain_error("matrix is outside the algebra");
  return x;
}

RationalMatrix LabeledAlgebra::matrix_of(const RationalVector& x) const {
  if (basis_matrices.empty()) throw std::logic_error("algebra has no matrix realization");
  RationalMatrix m(basis_matrices[0].rows(), basis_matrices[0].cols());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) m += basis_matrices[i] * x[i];
  return m;
}

LabeledAlgebra algebra_from_matrices(std::vector<std::string> labels, std::vector<RationalMatrix> basis) {
  const std::size_t d = basis.size();
  if (labels.size() != d) throw std::invalid_argument("label count does not match the basis");
  if (d == 0) throw std::invalid_argument("empty basis");
  std::vector<RationalVector> flat;
  for (const auto& b : basis) flat.push_back(flatten(b));
  auto r = rref(RationalMatrix::from_rows(flat, flat[0].size()));
  if (r.pivots.size() != d) throw std::invalid_argument("basis matrices are linearly dependent");

  LabeledAlgebra out;
  out.coordinate_positions = r.pivots;
  RationalMatrix s(d, d);
  for (std::size_t row = 0; row < d; ++row)
    for (std::size_t i = 0; i < d; ++i) s(row, i) = flat[i][r.pivots[row]];
  out.coordinate_solver = inverse(s);
  out.basis_matrices = std::move(basis);

  std::vector<Rational> c(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      RationalVector x;
      try {
        x = out.coordinates_of(commutator(out.basis_matrices[i], out.basis_matrices[j]));
      } catch (const std::domain_error&) {
        throw std::invalid_argument("span is not closed: [" + labels[i] + ", " + labels[j] + "]");
      }
      for (std::size_t k = 0; k < d; ++k) {
        c[(i * d + j) * d + k] = x[k];
        c[(j * d + i) * d + k] = -x[k];
      }
    }
  out.algebra = LieAlgebra(std::move(labels), std::move(c));
  return out;
}

}  // namespace geostruct
