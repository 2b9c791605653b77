#pragma once

// Concrete Lie algebras with the labeled bases used throughout the engine.
//
// Realification conventions (fixed here, used everywhere):
//   complex scalar a + bi       -> [[a, -b], [b, a]]
//   quaternion a + bi + cj + dk -> matrix of left multiplication on (1, i, j, k)
// A complex or quaternionic N x N matrix becomes a real 2N x 2N or 4N x 4N
// block matrix with these blocks.  Both maps are algebra homomorphisms, so
// commutators are preserved.

#include "geostruct/liealg.hpp"

#include <array>
#include <functional>
#include <map>

namespace geostruct {

class Octonion {
public:
  Octonion() = default;
  explicit Octonion(std::array<Rational, 8> c) : c_(std::move(c)) {}
  static Octonion unit(std::size_t i);

  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }

  Octonion conj() const;
  Rational real() const { return c_[0]; }
  bool is_zero() const;

  friend Octonion operator+(const Octonion& a, const Octonion& b);
  friend Octonion operator-(const Octonion& a, const Octonion& b);
  friend Octonion operator*(const Octonion& a, const Octonion& b);
  friend Octonion operator*(const Rational& s, const Octonion& a);
  friend bool operator==(const Octonion& a, const Octonion& b) = default;

private:
  std::array<Rational, 8> c_{};
};

/// e_i e_j = e_k for the cyclic triples (1,2,4), (2,3,5), ..., (7,1,3).
const std::array<std::array<std::size_t, 3>, 7>& octonion_triples();

/// Hermitian 3x3 octonionic matrix: real diagonal, off-diagonal x[r][s] with
/// x[s][r] = conj(x[r][s]).
class JordanElement {
public:
  static constexpr std::size_t kDim = 27;

  JordanElement() = default;
  /// Basis: E11, E22, E33, then for each off-diagonal slot (0,1), (1,2), (0,2)
  /// the 8 octonion units placed at (r,s) with the conjugate at (s,r).
  static JordanElement basis(std::size_t i);
  static JordanElement from_coordinates(const RationalVector& v);

  RationalVector coordinates() const;
  const Octonion& entry(std::size_t r, std::size_t s) const { return m_[r][s]; }

  /// x o y = (xy + yx) / 2
  friend JordanElement jordan_product(const JordanElement& x, const JordanElement& y);

private:
  std::array<std::array<Octonion, 3>, 3> m_{};
};

struct LabeledAlgebra {
  LieAlgebra algebra;
  std::map<std::string, RationalVector> named_elements;
  std::map<std::string, Subspace> named_subspaces;
  /// Matrix realization of each basis element when the algebra is a matrix
  /// algebra (empty otherwise).
  std::vector<RationalMatrix> basis_matrices;
  /// Matrix entries (row-major positions) that determine coordinates, and the
  /// inverse of the basis restricted to them.
  std::vector<std::size_t> coordinate_positions;
  RationalMatrix coordinate_solver;

  const RationalVector& element(const std::string& name) const;
  const Subspace& subspace(const std::string& name) const;
  /// Coordinates of a matrix in the realization; throws std::domain_error if
  /// the matrix is outside the algebra.
  RationalVector coordinates_of(const RationalMatrix& m) const;
  RationalMatrix matrix_of(const RationalVector& x) const;
};

/// Builds the structure constants of a matrix Lie algebra from basis matrices.
/// Throws std::invalid_argument if the matrices are dependent or the span is
/// not closed under commutators.
LabeledAlgebra algebra_from_matrices(std::vector<std::string> labels, std::vector<RationalMatrix> basis);

/// so(p,q) on bivectors a^b = (a b^T - b a^T) G, so (a^b)x = <b,x>a - <a,x>b.
/// Basis vectors of R^{p,q} are v0..v{p+q-1}, the first p positive.  Named
/// subspaces for the geodesic splittings (requires p >= 1):
///   "h+", "m+" : with e = v0, e1 = v1 (spacelike, needs p >= 2)
///   "h-", "m-" : with e = v0, e1 = v_p (timelike, needs q >= 1)
/// The m bases are e^x_a followed by e1^x_a over the basis x_a of the
/// complement V, i.e. index f * dim V + a of H (x) V.
LabeledAlgebra build_so(int p, int q);

/// e(p1, q): the pseudo-Euclidean motions of R^{p1,q} written as
/// (k+2)x(k+2) block matrices [[A, u, w], [-u^T G_W, 0, lambda], [0, 0, 0]]
/// with W of signature (p1-1, q), k = p1 - 1 + q.  Named element "e0"
/// (lambda = 1); named subspaces "U", "W", "h" = so(W) + R e0, "m" = U + W.
LabeledAlgebra build_e(int p1, int q);

/// su(n+1) when q == 0 (epsilon = 1) and su(1,n) when p == 1 (epsilon = -1),
/// in the block coordinates (x1, x2, X1, X2) of the complement l.  Named
/// elements "h0" (n >= 2), "h1", "E1", "E2" and, for epsilon = -1, "E+",
/// "E-"; named subspaces "h", "l", "V0", "V+", "V-".  V+ and V- are the
/// eigenspaces of ad h1 on the X block (eigenvalues +-i for epsilon = 1 and
/// +-1 for epsilon = -1).  For epsilon = -1 that is V+ = {(0,0,X,-X)}.
LabeledAlgebra build_su(int p, int q);

/// sp(n+1) when q == 0 and sp(1,n) when p == 1, quaternionic block form.
/// Named elements "h0.i", "h0.j", "h0.k" (a h0 for a in Im H), "h1", and the
/// complement elements "x1.u" = (u, 0, 0, 0), "x2.u" = (0, u, 0, 0) for
/// u in {i, j, k}; named subspaces "h", "l", "V0", "V1".
LabeledAlgebra build_sp(int p, int q);

/// Compact f4 as the derivation algebra of the 27-dimensional exceptional
/// Jordan algebra.  Named subspaces "stab" (derivations killing E11), "p"
/// (its Killing complement), "h" = Z(h1), "l" (Killing complement of h);
/// named element "h1".  The derivation basis is stored as 27x27 matrices.
LabeledAlgebra build_f4();

/// Squared scale tau^2 = -B(h1, h1) / 72 of the f4 grading element, so that
/// (ad h1)^2 has eigenvalues 0, -tau^2, -4 tau^2.
Rational f4_tau_squared(const LabeledAlgebra& f4);

}  // namespace geostruct

namespace geostruct {

/// A displayed bracket or isotropy identity, evaluated exactly on labeled
/// sample elements.  as_displayed is false when the identity holds only in
/// a corrected form (sign, scale or subspace labeling); note says which.
struct GoldenIdentity {
  std::string family;  // "so", "e", "su", "sp"
  std::string statement;
  bool as_displayed = true;
  std::string note;
  std::function<bool()> holds;
};

std::vector<GoldenIdentity> golden_identities();

}  // namespace geostruct
