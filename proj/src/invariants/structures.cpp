#include "geostruct/invariants.hpp"

namespace geostruct {

bool nijenhuis_integrable(const ReductiveSplit& s, StructureCandidate& c) {
  const std::size_t n = s.dim_m();
  const auto& i = c.endo;
  const Rational eps = c.epsilon;
  std::vector<RationalVector> values;
  for (std::size_t a = 0; a < n; ++a) {
    const auto x = unit_vector(n, a);
    const auto ix = i.column(a);
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto y = unit_vector(n, b);
      const auto iy = i.column(b);
      auto v = s.bracket_m(ix, iy);
      v = sub(v, i.apply(s.bracket_m(ix, y)));
      v = sub(v, i.apply(s.bracket_m(x, iy)));
      v = add(v, scaled(s.bracket_mm_m(a, b), eps));
      if (!is_zero(v)) values.push_back(std::move(v));
    }
  }
  c.nijenhuis_rank = values.empty() ? 0 : span_rank(values);
  c.integrable = values.empty();
  return c.integrable;
}

std::vector<PairRecord> pair_structures(const ReductiveSplit& s, const std::vector<StructureCandidate>& candidates) {
  std::vector<PairRecord> out;
  if (candidates.empty()) return out;
  const std::size_t n = s.dim_m();
  const auto sym = invariant_tensors(s, TensorKind::Sym2).elements;
  if (sym.empty()) return out;

  for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
    const auto& cand = candidates[ci];
    const auto& i = cand.endo;
    const auto it = i.transpose();
    // constraints on g: I^T G I + eps G = 0, and w = I^T G closed
    std::vector<RationalVector> columns;
    for (const auto& g : sym) {
      auto col = flatten(it * g * i + g * Rational(cand.epsilon));
      const auto w = it * g;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
          for (std::size_t c = b + 1; c < n; ++c) {
            Rational r = 0;
            for (std::size_t k = 0; k < n; ++k) {
              r += s.bracket_mm_m(a, b)[k] * w(k, c);
              r += s.bracket_mm_m(b, c)[k] * w(k, a);
              r += s.bracket_mm_m(c, a)[k] * w(k, b);
            }
            col.push_back(r);
          }
      columns.push_back(std::move(col));
    }
    const auto kernel = kernel_basis(RationalMatrix::from_columns(columns, columns.front().size()));
    if (kernel.empty()) continue;
    std::vector<RationalMatrix> family;
    for (const auto& k : kernel) {
      RationalMatrix g(n, n);
      for (std::size_t j = 0; j < k.size(); ++j)
        if (sgn(k[j]) != 0) g += sym[j] * k[j];
      family.push_back(std::move(g));
    }
    PairRecord rec;
    bool found = false;
    scan_small_integer_vectors(family.size(), 3, [&](const std::vector<int>& c) {
      RationalMatrix g(n, n);
      for (std::size_t j = 0; j < c.size(); ++j)
        if (c[j] != 0) g += family[j] * Rational(c[j]);
      if (sgn(determinant(g)) == 0) return false;
      rec.metric = g;
      found = true;
      return true;
    });
    if (!found) continue;
    rec.candidate = ci;
    rec.epsilon = cand.epsilon;
    rec.kahler_form = it * rec.metric;
    if (!rec.kahler_form.is_antisymmetric() || !is_closed(s, rec.kahler_form))
      throw std::logic_error("compatible form is not a closed 2-form");
    rec.signature = signature(rec.metric);
    rec.family_dim = family.size();
    rec.integrable = cand.integrable;
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace geostruct
