#include "geostruct/liealg.hpp"

#include <algorithm>

namespace geostruct {

LieAlgebra::LieAlgebra(std::vector<std::string> labels, std::vector<Rational> constants)
    : dim_(labels.size()), labels_(std::move(labels)), c_(std::move(constants)) {
  if (c_.size() != dim_ * dim_ * dim_) throw std::invalid_argument("structure constant array has the wrong size");
  for (std::size_t a = 0; a < labels_.size(); ++a)
    for (std::size_t b = a + 1; b < labels_.size(); ++b)
      if (labels_[a] == labels_[b]) throw std::invalid_argument("duplicate basis label " + labels_[a]);
  sparse_.resize(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        Rational& x = c_[(i * dim_ + j) * dim_ + k];
        x.canonicalize();
        if (sgn(x) != 0) sparse_[i * dim_ + j].emplace_back(k, x);
      }
}

std::size_t LieAlgebra::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::out_of_range("no basis element labeled " + label);
  return static_cast<std::size_t>(it - labels_.begin());
}

RationalVector LieAlgebra::bracket(const RationalVector& x, const RationalVector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("bracket argument has the wrong dimension");
  RationalVector out(dim_);
  Rational s;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      const auto& row = sparse_[i * dim_ + j];
      if (row.empty()) continue;
      s = x[i] * y[j];
      for (const auto& [k, v] : row) out[k] += s * v;
    }
  }
  return out;
}

std::optional<Violation> validate(const LieAlgebra& g) {
  const std::size_t d = g.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (g.c(i, j, k) != -g.c(j, i, k))
          return Violation{Violation::Kind::Antisymmetry, i, j, k,
                           "[" + g.label(i) + "," + g.label(j) + "] is not antisymmetric in component " + g.label(k)};

  RationalVector acc(d);
  std::vector<std::size_t> touched;
  auto add_nested = [&](std::size_t a, std::size_t b, std::size_t c) {
    for (const auto& [l, x] : g.basis_bracket(b, c))
      for (const auto& [m, y] : g.basis_bracket(a, l)) {
        if (sgn(acc[m]) == 0) touched.push_back(m);
        acc[m] += x * y;
      }
  };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        add_nested(i, j, k);
        add_nested(j, k, i);
        add_nested(k, i, j);
        bool ok = true;
        for (auto m : touched) {
          if (sgn(acc[m]) != 0) ok = false;
          acc[m] = 0;
        }
        touched.clear();
        if (!ok)
          return Violation{Violation::Kind::Jacobi, i, j, k,
                           "Jacobi identity fails on (" + g.label(i) + ", " + g.label(j) + ", " + g.label(k) + ")"};
      }
  return std::nullopt;
}

RationalMatrix adjoint_basis(const LieAlgebra& g, std::size_t i) {
  RationalMatrix a(g.dim(), g.dim());
  for (std::size_t j = 0; j < g.dim(); ++j)
    for (const auto& [k, v] : g.basis_bracket(i, j)) a(k, j) = v;
  return a;
}

RationalMatrix adjoint(const LieAlgebra& g, const RationalVector& x) {
  if (x.size() != g.dim()) throw std::invalid_argument("adjoint argument has the wrong dimension");
  RationalMatrix a(g.dim(), g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < g.dim(); ++j)
      for (const auto& [k, v] : g.basis_bracket(i, j)) a(k, j) += x[i] * v;
  }
  return a;
}

RationalMatrix killing(const LieAlgebra& g) {
  // B_ij = sum_{k,l} c_{i l}^k c_{j k}^l
  const std::size_t d = g.dim();
  RationalMatrix b(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Rational s = 0;
      for (std::size_t l = 0; l < d; ++l)
        for (const auto& [k, v] : g.basis_bracket(i, l))
          if (sgn(g.c(j, k, l)) != 0) s += v * g.c(j, k, l);
      b(i, j) = s;
      b(j, i) = s;
    }
  return b;
}

Subspace::Subspace(std::size_t ambient_dim, std::vector<RationalVector> basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
  for (const auto& v : basis_)
    if (v.size() != ambient_dim_) throw std::invalid_argument("subspace vector has the wrong dimension");
  if (span_rank(basis_) != basis_.size()) throw std::invalid_argument("subspace basis is linearly dependent");
}

Subspace Subspace::whole(std::size_t ambient_dim) {
  std::vector<RationalVector> b;
  for (std::size_t i = 0; i < ambient_dim; ++i) b.push_back(unit_vector(ambient_dim, i));
  return Subspace(ambient_dim, std::move(b));
}

bool Subspace::contains(const RationalVector& v) const {
  if (is_zero(v)) return true;
  RationalVector c;
  return solve_in_span(basis_, v, c);
}

RationalVector Subspace::coordinates(const RationalVector& v) const {
  RationalVector c;
  if (is_zero(v)) return RationalVector(dim());
  if (!solve_in_span(basis_, v, c)) throw std::domain_error("vector is outside the subspace");
  return c;
}

RationalVector Subspace::from_coordinates(const RationalVector& c) const {
  RationalVector v(ambient_dim_);
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (sgn(c[i]) != 0)
      for (std::size_t k = 0; k < ambient_dim_; ++k) v[k] += c[i] * basis_[i][k];
  return v;
}

Subspace centralizer(const LieAlgebra& g, const Subspace& s) {
  // x = sum x_i b_i with [x, s] = 0 for every basis vector s of S
  const std::size_t d = g.dim();
  LinearSystem sys(d);
  for (const auto& v : s.basis()) {
    const RationalMatrix ad = adjoint(g, v);
    for (std::size_t k = 0; k < d; ++k) {
      LinearSystem::Row row;
      for (std::size_t i = 0; i < d; ++i)
        if (sgn(ad(k, i)) != 0) row.emplace_back(i, ad(k, i));
      sys.add_row(std::move(row));
    }
  }
  return Subspace(d, kernel_basis(sys));
}

Subspace center(const LieAlgebra& g) { return centralizer(g, Subspace::whole(g.dim())); }

Subspace orthogonal_complement(const RationalMatrix& form, const Subspace& s) {
  const std::size_t d = form.rows();
  LinearSystem sys(d);
  for (const auto& v : s.basis()) {
    // row: sum_j v_j form(i, j) against unknown x_i
    RationalVector row(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (sgn(v[j]) != 0) row[i] += form(i, j) * v[j];
    sys.add_dense_row(row);
  }
  return Subspace(d, kernel_basis(sys));
}

bool subalgebra_closure_check(const LieAlgebra& g, const Subspace& s) {
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = a + 1; b < s.dim(); ++b)
      if (!s.contains(g.bracket(s[a], s[b]))) return false;
  return true;
}

LieAlgebra restrict_to(const LieAlgebra& g, const Subspace& s, std::vector<std::string> labels) {
  const std::size_t d = s.dim();
  if (labels.empty())
    for (std::size_t i = 0; i < d; ++i) labels.push_back("s" + std::to_string(i));
  if (labels.size() != d) throw std::invalid_argument("label count does not match the subspace");
  std::vector<Rational> c(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const auto coords = s.coordinates(g.bracket(s[i], s[j]));
      for (std::size_t k = 0; k < d; ++k) {
        c[(i * d + j) * d + k] = coords[k];
        c[(j * d + i) * d + k] = -coords[k];
      }
    }
  return LieAlgebra(std::move(labels), std::move(c));
}

}  // namespace geostruct
