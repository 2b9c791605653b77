#pragma once

// Invariant tensors on m and the structures built from them: closed 2-forms,
// (para-)complex structures from the commutant, integrability and pairings.
// All tensors are n x n matrices in the m coordinates of a ReductiveSplit:
// a bilinear form W means W(X, Y) = X^T W Y, an endomorphism acts by T X.

#include "geostruct/homogeneous.hpp"

#include <functional>
#include <optional>

namespace geostruct {

enum class TensorKind { Sym2, Alt2, Endo };

struct InvariantTensorBasis {
  TensorKind kind;
  std::vector<RationalMatrix> elements;
};

/// Exact basis of the ad h-invariant tensors of the given kind.
InvariantTensorBasis invariant_tensors(const ReductiveSplit& s, TensorKind kind);

/// True when every generator annihilates t under the induced action.
bool is_invariant(const ReductiveSplit& s, TensorKind kind, const RationalMatrix& t);

struct ResidualEntry {
  std::size_t i, j, k;
  Rational value;
};

/// Nonzero values of -sum_cyc w([X, Y]_m, Z) on basis triples i < j < k.
/// For an invariant 2-form this is its exterior derivative; empty means closed.
std::vector<ResidualEntry> closedness_residual(const ReductiveSplit& s, const RationalMatrix& w);
bool is_closed(const ReductiveSplit& s, const RationalMatrix& w);

class ZeroForm : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// w(X, Y) = B(z, [X, Y]) for z in the center of h.  Throws
/// std::invalid_argument if z is not central in h, ZeroForm if w vanishes.
RationalMatrix form_from_central(const ReductiveSplit& s, const RationalVector& z);

struct SymplecticFamily {
  std::vector<RationalMatrix> closed_basis;  // closed invariant 2-forms
  std::optional<RationalMatrix> sample;      // nondegenerate element, if found
  std::vector<int> sample_coefficients;
  std::size_t combinations_checked = 0;  // all degenerate when sample is empty
};

/// Scans integer coefficient vectors with entries in [-3, 3], by l1 norm.
SymplecticFamily symplectic_family(const ReductiveSplit& s);

struct CommutantAlgebra {
  std::vector<RationalMatrix> basis;  // basis[unity] is the identity
  /// table[i * k + j] = coordinates of basis[i] * basis[j]
  std::vector<RationalVector> table;
  std::size_t unity = 0;

  std::size_t dim() const { return basis.size(); }
  bool is_commutative() const;
  /// Throws std::domain_error when t is outside the span.
  RationalVector coordinates_of(const RationalMatrix& t) const;
  RationalMatrix element(const RationalVector& c) const;
  RationalVector multiply(const RationalVector& a, const RationalVector& b) const;

  // entries of the flattened basis that determine coordinates, and the inverse
  // of the basis restricted to them
  std::vector<std::size_t> positions;
  RationalMatrix solver;
};

/// Builds the composition table of an algebra of endomorphisms spanned by the
/// given matrices (the identity is put first).  Throws std::invalid_argument
/// if the span is not closed under composition.
CommutantAlgebra make_endomorphism_algebra(std::vector<RationalMatrix> basis);

/// Invariant endomorphisms of m.
CommutantAlgebra commutant(const ReductiveSplit& s);

struct StructureCandidate {
  RationalMatrix endo;
  int epsilon = -1;  // -1 complex, +1 para-complex
  std::size_t plus_dim = 0, minus_dim = 0;
  bool integrable = false;
  std::size_t nijenhuis_rank = 0;
};

struct FamilyDescriptor {
  StructureCandidate representative;
  std::size_t tangent_dim = 0;
};

struct SquareRoots {
  /// Solutions of I^2 = eps Id, I != +-Id, one per +-pair.  For eps = +1
  /// only the balanced ones (equal eigenspace dimensions).
  std::vector<StructureCandidate> structures;
  /// eps = +1 solutions with unequal eigenspaces, reported separately.
  std::vector<StructureCandidate> product_structures;
  /// Set when the commutant is not commutative and cyclic, so the solution
  /// set may be a positive-dimensional variety; then the lists above hold
  /// only what a small-coefficient search found.
  std::optional<FamilyDescriptor> family;
};

class NoSolution : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Square roots of a component that is neither Q nor Q(i), which would need
/// irrational coordinates.
class IrrationalComponent : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// I^2 = eps Id in the commutant.  Throws NoSolution when eps = -1 and some
/// component is real (or nothing is found in the fallback search).
SquareRoots square_roots(const CommutantAlgebra& c, int eps);

/// Dimension of {X in C : I X + X I = 0}.
std::size_t tangent_dimension(const CommutantAlgebra& c, const RationalMatrix& i);

/// N(X, Y) = [IX, IY]_m - I[IX, Y]_m - I[X, IY]_m + eps [X, Y]_m on basis
/// pairs; at eps = -1 this is [JX,JY] - J[X,JY] - J[JX,Y] - [X,Y].
/// Sets c.integrable and c.nijenhuis_rank (rank of the values) and returns
/// the integrability flag.
bool nijenhuis_integrable(const ReductiveSplit& s, StructureCandidate& c);

struct PairRecord {
  std::size_t candidate = 0;  // index into the candidate list
  int epsilon = -1;
  RationalMatrix metric;       // nondegenerate sample
  RationalMatrix kahler_form;  // w(X, Y) = g(IX, Y)
  Signature signature;
  std::size_t family_dim = 0;  // dim of compatible invariant metrics with closed w
  bool integrable = false;
};

/// For each candidate: the invariant symmetric forms with g(IX, IY) =
/// -eps g(X, Y) and closed g(I., .); a record when a nondegenerate one exists.
std::vector<PairRecord> pair_structures(const ReductiveSplit& s, const std::vector<StructureCandidate>& candidates);

/// m coordinates index f * dim_w + w.  True when every isotropy generator
/// lies in gl(W) (x) Id + Id (x) gl(F).  Throws std::invalid_argument on a
/// dimension mismatch.
bool tensor_decomposition_check(const ReductiveSplit& s, std::size_t dim_w, std::size_t dim_f);

/// Visits integer vectors of length n with entries in [-bound, bound], nonzero,
/// by increasing l1 norm and then lexicographically, until visit returns true.
/// Returns the number of vectors visited.
std::size_t scan_small_integer_vectors(std::size_t n, int bound,
                                       const std::function<bool(const std::vector<int>&)>& visit);

}  // namespace geostruct
