#pragma once

// Exact rational arithmetic and the dense linear algebra the engine runs on.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace geostruct {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

Rational make_rational(long num, long den = 1);

/// Serializes as "num/den", always with an explicit denominator.
std::string to_string(const Rational& q);
std::string to_string(const RationalVector& v);

bool is_zero(const RationalVector& v);
RationalVector scaled(const RationalVector& v, const Rational& s);
RationalVector add(const RationalVector& a, const RationalVector& b);
RationalVector sub(const RationalVector& a, const RationalVector& b);
Rational dot(const RationalVector& a, const RationalVector& b);
RationalVector unit_vector(std::size_t n, std::size_t i);

class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix diagonal(const RationalVector& d);
  static RationalMatrix from_columns(std::span<const RationalVector> columns, std::size_t rows);
  static RationalMatrix from_rows(std::span<const RationalVector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> entries() const { return data_; }

  RationalVector row(std::size_t i) const;
  RationalVector column(std::size_t j) const;
  RationalMatrix transpose() const;
  Rational trace() const;

  bool is_zero() const;
  bool is_symmetric() const;
  bool is_antisymmetric() const;

  RationalVector apply(const RationalVector& x) const;

  RationalMatrix& operator+=(const RationalMatrix& o);
  RationalMatrix& operator-=(const RationalMatrix& o);
  RationalMatrix& operator*=(const Rational& s);

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const Rational& s) { return a *= s; }
  friend RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b);
/// Row-major flattening.
RationalVector flatten(const RationalMatrix& a);
RationalMatrix unflatten(const RationalVector& v, std::size_t rows, std::size_t cols);

/// Homogeneous linear constraints given row by row in sparse form.  The
/// invariant-tensor and derivation systems are far too large to hold densely.
class LinearSystem {
public:
  using Row = std::vector<std::pair<std::size_t, Rational>>;

  explicit LinearSystem(std::size_t unknowns) : unknowns_(unknowns) {}

  /// Merges repeated columns and drops zero coefficients; empty rows are skipped.
  void add_row(Row row);
  void add_dense_row(const RationalVector& row);

  std::size_t unknowns() const { return unknowns_; }
  std::size_t size() const { return rows_.size(); }
  const std::vector<Row>& rows() const { return rows_; }

private:
  std::size_t unknowns_;
  std::vector<Row> rows_;
};

struct RrefResult {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;
};

RrefResult rref(RationalMatrix a);
std::size_t rank(const RationalMatrix& a);

/// Null-space basis in reduced normal form: one vector per free column with a
/// 1 there and 0 in every other free column.  The normal form is unique, so
/// both solver paths return identical bases.
std::vector<RationalVector> kernel_basis(const RationalMatrix& a);
std::vector<RationalVector> kernel_basis(const LinearSystem& system);

/// Exact dense Gauss-Jordan path, regardless of size.
std::vector<RationalVector> kernel_basis_dense(const LinearSystem& system);

/// Prime-field screening followed by rational reconstruction and exact
/// verification of every returned vector against the original rows.
std::vector<RationalVector> kernel_basis_modular(const LinearSystem& system);

/// Rank of the system modulo a word-size prime.  A lower bound for the
/// rational rank.
std::size_t modular_rank(const LinearSystem& system, std::size_t prime_index = 0);

/// Basis of the span of the given vectors (reduced row echelon rows).
std::vector<RationalVector> span_basis(std::span<const RationalVector> vectors);
std::size_t span_rank(std::span<const RationalVector> vectors);

/// Solves basis * c = v for c, where the basis vectors are the columns.  Returns
/// false when v is outside the span.
bool solve_in_span(std::span<const RationalVector> basis, const RationalVector& v, RationalVector& coords);

RationalMatrix inverse(const RationalMatrix& a);
Rational determinant(const RationalMatrix& a);

struct Signature {
  std::size_t pos = 0;
  std::size_t neg = 0;
  std::size_t null = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Sylvester signature by symmetric pivoting.  Throws std::invalid_argument on
/// non-symmetric input.
Signature signature(const RationalMatrix& s);

class RationalPolynomial {
public:
  RationalPolynomial() = default;
  /// Lowest degree first.
  explicit RationalPolynomial(std::vector<Rational> coefficients);
  RationalPolynomial(std::initializer_list<Rational> coefficients);

  static RationalPolynomial monomial(std::size_t degree, const Rational& c = 1);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i) const;
  const Rational& leading() const { return coeffs_.back(); }

  RationalPolynomial monic() const;
  RationalPolynomial derivative() const;
  Rational evaluate(const Rational& x) const;
  RationalMatrix evaluate(const RationalMatrix& a) const;

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) = default;

  std::string to_string(const std::string& var = "t") const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a, const RationalPolynomial& b);
/// Monic greatest common divisor.
RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b);
/// Returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtendedGcd {
  RationalPolynomial g, s, t;
};
ExtendedGcd extended_gcd(const RationalPolynomial& a, const RationalPolynomial& b);

/// Monic polynomial of least degree with p(A) = 0, from the first linear
/// dependence among I, A, A^2, ...
RationalPolynomial min_poly(const RationalMatrix& a);

struct PolynomialFactor {
  RationalPolynomial factor;  // monic, irreducible over Q
  int multiplicity = 1;
};

class IrreducibleFactorTooLarge : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Factorization over Q of a polynomial of degree <= 8 whose irreducible
/// factors all have degree <= 2.  Factors are sorted by degree and then by
/// coefficients; the leading coefficient of the input is dropped.
std::vector<PolynomialFactor> factor_low_degree(const RationalPolynomial& p);

}  // namespace geostruct
