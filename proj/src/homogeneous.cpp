#include "geostruct/homogeneous.hpp"

namespace geostruct {

RationalVector ReductiveSplit::bracket_m(const RationalVector& x, const RationalVector& y) const {
  RationalVector out(m.dim());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (sgn(y[j]) == 0) continue;
      const auto& b = bracket_mm_m(i, j);
      const Rational c = x[i] * y[j];
      for (std::size_t k = 0; k < out.size(); ++k)
        if (sgn(b[k]) != 0) out[k] += c * b[k];
    }
  }
  return out;
}

ReductiveSplit make_split(const LieAlgebra& g, const Subspace& h, const Subspace& m) {
  using Kind = SplitError::Kind;
  const std::size_t d = g.dim();
  if (h.ambient_dim() != d || m.ambient_dim() != d)
    throw std::invalid_argument("make_split: subspaces live in a different ambient space");
  if (h.dim() + m.dim() != d)
    throw SplitError(Kind::NotComplement, SplitError::npos, SplitError::npos,
                     "dim h + dim m = " + std::to_string(h.dim() + m.dim()) + " but dim g = " + std::to_string(d));

  std::vector<RationalVector> cols(h.basis().begin(), h.basis().end());
  cols.insert(cols.end(), m.basis().begin(), m.basis().end());
  const RationalMatrix p = RationalMatrix::from_columns(cols, d);
  if (rank(p) != d) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      std::vector<RationalVector> prior(cols.begin(), cols.begin() + static_cast<long>(h.dim() + j));
      RationalVector c;
      if (solve_in_span(prior, m[j], c)) {
        // some h vector must take part, since the m basis is independent
        std::size_t i = 0;
        while (i + 1 < h.dim() && sgn(c[i]) == 0) ++i;
        throw SplitError(Kind::NotComplement, i, j,
                         "h and m intersect: m[" + std::to_string(j) + "] depends on h[" + std::to_string(i) + "]");
      }
    }
    throw SplitError(Kind::NotComplement, SplitError::npos, SplitError::npos, "h + m is not all of g");
  }

  ReductiveSplit s;
  s.parent = g;
  s.h = h;
  s.m = m;
  const RationalMatrix q = inverse(p);
  s.to_h = RationalMatrix(h.dim(), d);
  s.to_m = RationalMatrix(m.dim(), d);
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t r = 0; r < h.dim(); ++r) s.to_h(r, c) = q(r, c);
    for (std::size_t r = 0; r < m.dim(); ++r) s.to_m(r, c) = q(h.dim() + r, c);
  }
  s.proj_h = RationalMatrix::from_columns(h.basis(), d) * s.to_h;
  s.proj_m = RationalMatrix::from_columns(m.basis(), d) * s.to_m;

  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = i + 1; j < h.dim(); ++j)
      if (!is_zero(s.to_m.apply(g.bracket(h[i], h[j]))))
        throw SplitError(Kind::NotSubalgebra, i, j,
                         "[h[" + std::to_string(i) + "], h[" + std::to_string(j) + "]] leaves h");
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (!is_zero(s.to_h.apply(g.bracket(h[i], m[j]))))
        throw SplitError(Kind::NotInvariantComplement, i, j,
                         "[h[" + std::to_string(i) + "], m[" + std::to_string(j) + "]] leaves m");

  const std::size_t dm = m.dim();
  s.mm_m_.resize(dm * dm);
  s.mm_h_.resize(dm * dm);
  for (std::size_t i = 0; i < dm; ++i) {
    s.mm_m_[i * dm + i] = RationalVector(dm);
    s.mm_h_[i * dm + i] = RationalVector(h.dim());
    for (std::size_t j = i + 1; j < dm; ++j) {
      const auto b = g.bracket(m[i], m[j]);
      s.mm_m_[i * dm + j] = s.to_m.apply(b);
      s.mm_h_[i * dm + j] = s.to_h.apply(b);
      s.mm_m_[j * dm + i] = scaled(s.mm_m_[i * dm + j], -1);
      s.mm_h_[j * dm + i] = scaled(s.mm_h_[i * dm + j], -1);
    }
  }
  return s;
}

Subspace killing_complement(const LieAlgebra& g, const Subspace& h) {
  const RationalMatrix b = killing(g);
  RationalMatrix gram(h.dim(), h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i) {
    const auto bi = b.apply(h[i]);
    for (std::size_t j = 0; j < h.dim(); ++j) gram(i, j) = dot(bi, h[j]);
  }
  if (rank(gram) != h.dim())
    throw DegenerateRestriction("Killing form is degenerate on h (rank " + std::to_string(rank(gram)) + " of " +
                                std::to_string(h.dim()) + "); supply m explicitly");
  return orthogonal_complement(b, h);
}

RationalMatrix isotropy_action(const ReductiveSplit& s, const RationalVector& x) {
  const std::size_t dm = s.dim_m();
  RationalMatrix a(dm, dm);
  for (std::size_t j = 0; j < dm; ++j) {
    const auto c = s.m_coordinates(s.parent.bracket(x, s.m[j]));
    for (std::size_t i = 0; i < dm; ++i) a(i, j) = c[i];
  }
  return a;
}

IsotropyRep isotropy_rep(const ReductiveSplit& s) {
  IsotropyRep rep;
  for (std::size_t i = 0; i < s.dim_h(); ++i) rep.generators.push_back(isotropy_action(s, s.h[i]));
  // [A_i, A_j] must be the image of [h_i, h_j]
  for (std::size_t i = 0; i < s.dim_h(); ++i)
    for (std::size_t j = i + 1; j < s.dim_h(); ++j) {
      const auto c = s.h_coordinates(s.parent.bracket(s.h[i], s.h[j]));
      RationalMatrix expected(s.dim_m(), s.dim_m());
      for (std::size_t k = 0; k < c.size(); ++k)
        if (sgn(c[k]) != 0) expected += rep.generators[k] * c[k];
      if (!(commutator(rep.generators[i], rep.generators[j]) == expected))
        throw std::logic_error("isotropy representation is not a homomorphism at (" + std::to_string(i) + ", " +
                               std::to_string(j) + ")");
    }
  return rep;
}

bool is_symmetric_pair(const ReductiveSplit& s) {
  for (const auto& v : s.mm_m_)
    if (!is_zero(v)) return false;
  return true;
}

}  // namespace geostruct
