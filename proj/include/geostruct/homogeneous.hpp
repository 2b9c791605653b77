#pragma once

// Reductive decompositions g = h + m and the isotropy representation of h on m.

#include "geostruct/liealg.hpp"

#include <limits>
#include <stdexcept>

namespace geostruct {

class SplitError : public std::invalid_argument {
public:
  enum class Kind { NotSubalgebra, NotComplement, NotInvariantComplement };
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  /// i, j index the violating pair: both in h for NotSubalgebra, (h, m) for
  /// the other two.  npos when the failure is a dimension count.
  SplitError(Kind kind, std::size_t i, std::size_t j, const std::string& message)
      : std::invalid_argument(message), kind(kind), i(i), j(j) {}

  Kind kind;
  std::size_t i, j;
};

class DegenerateRestriction : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Validated decomposition.  Coordinates "on m" always refer to the given m basis.
struct ReductiveSplit {
  LieAlgebra parent;
  Subspace h, m;
  RationalMatrix proj_h, proj_m;  // dim g x dim g
  RationalMatrix to_h, to_m;      // ambient -> h / m coordinates

  std::size_t dim_h() const { return h.dim(); }
  std::size_t dim_m() const { return m.dim(); }

  RationalVector h_coordinates(const RationalVector& x) const { return to_h.apply(x); }
  RationalVector m_coordinates(const RationalVector& x) const { return to_m.apply(x); }
  RationalVector from_m(const RationalVector& c) const { return m.from_coordinates(c); }

  /// [m_i, m_j] split into m and h coordinates.
  const RationalVector& bracket_mm_m(std::size_t i, std::size_t j) const { return mm_m_[i * m.dim() + j]; }
  const RationalVector& bracket_mm_h(std::size_t i, std::size_t j) const { return mm_h_[i * m.dim() + j]; }

  /// [X, Y]_m for X, Y given in m coordinates.
  RationalVector bracket_m(const RationalVector& x, const RationalVector& y) const;

  std::vector<RationalVector> mm_m_, mm_h_;
};

/// Checks dim h + dim m = dim g and h n m = 0, then closure of h, then
/// [h, m] in m, throwing SplitError with the first violating pair.
ReductiveSplit make_split(const LieAlgebra& g, const Subspace& h, const Subspace& m);

/// B-orthocomplement of h.  Throws DegenerateRestriction when B|h is degenerate.
Subspace killing_complement(const LieAlgebra& g, const Subspace& h);

struct IsotropyRep {
  /// One dim m x dim m matrix per h basis element, acting on m coordinates.
  std::vector<RationalMatrix> generators;
};

/// Matrix of proj_m o ad(x) on m coordinates, for x in h.
RationalMatrix isotropy_action(const ReductiveSplit& s, const RationalVector& x);

/// Generators for the h basis; the homomorphism property is verified and a
/// std::logic_error is thrown if it fails.
IsotropyRep isotropy_rep(const ReductiveSplit& s);

/// [m, m] in h.
bool is_symmetric_pair(const ReductiveSplit& s);

}  // namespace geostruct
