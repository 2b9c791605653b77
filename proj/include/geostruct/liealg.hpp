#pragma once

// Finite-dimensional real Lie algebras given by exact structure constants.

#include "geostruct/exactnum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace geostruct {

class LieAlgebra {
public:
  LieAlgebra() = default;
  /// constants[(i*d + j)*d + k] is the coefficient of b_k in [b_i, b_j].
  LieAlgebra(std::vector<std::string> labels, std::vector<Rational> constants);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  /// Index of a basis label; throws std::out_of_range when absent.
  std::size_t index_of(const std::string& label) const;

  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }

  /// Nonzero (k, c_ijk) of [b_i, b_j].
  const std::vector<std::pair<std::size_t, Rational>>& basis_bracket(std::size_t i, std::size_t j) const {
    return sparse_[i * dim_ + j];
  }

  RationalVector bracket(const RationalVector& x, const RationalVector& y) const;
  RationalVector basis_vector(std::size_t i) const { return unit_vector(dim_, i); }

private:
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Rational> c_;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> sparse_;
};

struct Violation {
  enum class Kind { Antisymmetry, Jacobi };
  Kind kind;
  std::size_t i, j, k;
  std::string message;
};

/// Exact antisymmetry and Jacobi check; returns the first failing triple.
std::optional<Violation> validate(const LieAlgebra& g);

/// Matrix of y -> [x, y] in the basis of g.
RationalMatrix adjoint(const LieAlgebra& g, const RationalVector& x);
RationalMatrix adjoint_basis(const LieAlgebra& g, std::size_t i);

/// B(x, y) = tr(ad x ad y), unnormalized.
RationalMatrix killing(const LieAlgebra& g);

/// A linear subspace of some algebra, held by an independent basis in the
/// ambient coordinates.  The basis is kept exactly as given.
class Subspace {
public:
  Subspace() = default;
  /// Throws std::invalid_argument if the vectors are dependent or of the wrong length.
  Subspace(std::size_t ambient_dim, std::vector<RationalVector> basis);

  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim, {}); }
  static Subspace whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RationalVector>& basis() const { return basis_; }
  const RationalVector& operator[](std::size_t i) const { return basis_[i]; }

  bool contains(const RationalVector& v) const;
  /// Coordinates of v in the basis; throws std::domain_error when v is outside.
  RationalVector coordinates(const RationalVector& v) const;
  RationalVector from_coordinates(const RationalVector& c) const;

private:
  std::size_t ambient_dim_ = 0;
  std::vector<RationalVector> basis_;
};

/// Z_g(S) from one stacked kernel computation.
Subspace centralizer(const LieAlgebra& g, const Subspace& s);
Subspace center(const LieAlgebra& g);

/// {x : form(x, s) = 0 for all s in S}.
Subspace orthogonal_complement(const RationalMatrix& form, const Subspace& s);

bool subalgebra_closure_check(const LieAlgebra& g, const Subspace& s);

/// Structure constants of a subalgebra in the subspace basis; throws
/// std::domain_error if s is not closed under the bracket.
LieAlgebra restrict_to(const LieAlgebra& g, const Subspace& s, std::vector<std::string> labels = {});

}  // namespace geostruct
