#include "geostruct/invariants.hpp"

namespace geostruct {

namespace {

// Unknowns: Sym2 over a <= b, Alt2 over a < b, Endo over all (a, b).
class TensorCoordinates {
public:
  TensorCoordinates(TensorKind kind, std::size_t n) : kind_(kind), n_(n), index_(n * n, npos) {
    std::size_t next = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const bool used = kind == TensorKind::Endo || (kind == TensorKind::Sym2 ? a <= b : a < b);
        if (used) index_[a * n + b] = next++;
      }
    count_ = next;
  }

  std::size_t count() const { return count_; }

  // Appends coef * W(a, b) to a sparse row.
  void term(LinearSystem::Row& row, std::size_t a, std::size_t b, const Rational& coef) const {
    switch (kind_) {
    case TensorKind::Endo:
      row.emplace_back(index_[a * n_ + b], coef);
      break;
    case TensorKind::Sym2:
      row.emplace_back(index_[std::min(a, b) * n_ + std::max(a, b)], coef);
      break;
    case TensorKind::Alt2:
      if (a < b) row.emplace_back(index_[a * n_ + b], coef);
      if (a > b) row.emplace_back(index_[b * n_ + a], -coef);
      break;
    }
  }

  RationalMatrix to_matrix(const RationalVector& v) const {
    RationalMatrix w(n_, n_);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) {
        const std::size_t i = index_[a * n_ + b];
        if (i == npos) continue;
        w(a, b) = v[i];
        if (kind_ == TensorKind::Sym2) w(b, a) = v[i];
        if (kind_ == TensorKind::Alt2) w(b, a) = -v[i];
      }
    return w;
  }

private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  TensorKind kind_;
  std::size_t n_;
  std::vector<std::size_t> index_;
  std::size_t count_ = 0;
};

struct SparseMatrix {
  // nonzeros by row and by column
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows, cols;
  explicit SparseMatrix(const RationalMatrix& a) : rows(a.rows()), cols(a.cols()) {
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (sgn(a(i, j)) != 0) {
          rows[i].emplace_back(j, a(i, j));
          cols[j].emplace_back(i, a(i, j));
        }
  }
};

// Induced action of a generator A on a tensor:
//   forms:          A^T W + W A   (entry (k, l) = sum_r A_rk W_rl + W_kr A_rl)
//   endomorphisms:  A T - T A     (entry (k, l) = sum_r A_kr T_rl - T_kr A_rl)
void add_invariance_rows(LinearSystem& sys, const TensorCoordinates& coords, TensorKind kind,
                         const RationalMatrix& gen) {
  const std::size_t n = gen.rows();
  const SparseMatrix a(gen);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      if (kind == TensorKind::Sym2 && l < k) continue;
      if (kind == TensorKind::Alt2 && l <= k) continue;
      LinearSystem::Row row;
      if (kind == TensorKind::Endo) {
        for (const auto& [r, v] : a.rows[k]) coords.term(row, r, l, v);
        for (const auto& [r, v] : a.cols[l]) coords.term(row, k, r, -v);
      } else {
        for (const auto& [r, v] : a.cols[k]) coords.term(row, r, l, v);
        for (const auto& [r, v] : a.cols[l]) coords.term(row, k, r, v);
      }
      sys.add_row(std::move(row));
    }
}

RationalMatrix induced_action(TensorKind kind, const RationalMatrix& a, const RationalMatrix& t) {
  if (kind == TensorKind::Endo) return commutator(a, t);
  return a.transpose() * t + t * a;
}

// w(x, e_k) for the m-coordinate vector x
Rational form_against_basis(const RationalMatrix& w, const RationalVector& x, std::size_t k) {
  Rational s = 0;
  for (std::size_t a = 0; a < x.size(); ++a)
    if (sgn(x[a]) != 0) s += x[a] * w(a, k);
  return s;
}

// Residual on every triple i < j < k, zeros included, in a fixed order.
RationalVector full_residual(const ReductiveSplit& s, const RationalMatrix& w) {
  const std::size_t n = s.dim_m();
  RationalVector out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        out.push_back(-(form_against_basis(w, s.bracket_mm_m(i, j), k) +
                        form_against_basis(w, s.bracket_mm_m(j, k), i) +
                        form_against_basis(w, s.bracket_mm_m(k, i), j)));
  return out;
}

// Coefficient combinations of `basis` satisfying the linear constraints
// returned by `constraint` for each basis element.
std::vector<RationalMatrix> constrained_combinations(
    const std::vector<RationalMatrix>& basis, const std::function<RationalVector(const RationalMatrix&)>& constraint) {
  if (basis.empty()) return {};
  std::vector<RationalVector> columns;
  for (const auto& b : basis) columns.push_back(constraint(b));
  const std::size_t rows = columns.front().size();
  std::vector<RationalMatrix> out;
  std::vector<RationalVector> kernel;
  if (rows == 0) {
    for (std::size_t i = 0; i < basis.size(); ++i) kernel.push_back(unit_vector(basis.size(), i));
  } else {
    kernel = kernel_basis(RationalMatrix::from_columns(columns, rows));
  }
  for (const auto& c : kernel) {
    RationalMatrix m(basis.front().rows(), basis.front().cols());
    for (std::size_t i = 0; i < c.size(); ++i)
      if (sgn(c[i]) != 0) m += basis[i] * c[i];
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

InvariantTensorBasis invariant_tensors(const ReductiveSplit& s, TensorKind kind) {
  const std::size_t n = s.dim_m();
  const TensorCoordinates coords(kind, n);
  LinearSystem sys(coords.count());
  const auto rep = isotropy_rep(s);
  for (const auto& gen : rep.generators) add_invariance_rows(sys, coords, kind, gen);
  InvariantTensorBasis out{kind, {}};
  for (const auto& v : kernel_basis(sys)) out.elements.push_back(coords.to_matrix(v));
  return out;
}

bool is_invariant(const ReductiveSplit& s, TensorKind kind, const RationalMatrix& t) {
  for (std::size_t i = 0; i < s.dim_h(); ++i)
    if (!induced_action(kind, isotropy_action(s, s.h[i]), t).is_zero()) return false;
  return true;
}

std::vector<ResidualEntry> closedness_residual(const ReductiveSplit& s, const RationalMatrix& w) {
  const std::size_t n = s.dim_m();
  const auto full = full_residual(s, w);
  std::vector<ResidualEntry> out;
  std::size_t t = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k, ++t)
        if (sgn(full[t]) != 0) out.push_back({i, j, k, full[t]});
  return out;
}

bool is_closed(const ReductiveSplit& s, const RationalMatrix& w) { return closedness_residual(s, w).empty(); }

RationalMatrix form_from_central(const ReductiveSplit& s, const RationalVector& z) {
  if (!s.h.contains(z)) throw std::invalid_argument("form_from_central: element is not in h");
  for (const auto& x : s.h.basis())
    if (!is_zero(s.parent.bracket(z, x))) throw std::invalid_argument("form_from_central: element is not central in h");
  const auto bz = killing(s.parent).apply(z);
  const std::size_t n = s.dim_m();
  RationalMatrix w(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      w(i, j) = dot(bz, s.parent.bracket(s.m[i], s.m[j]));
      w(j, i) = -w(i, j);
    }
  if (w.is_zero()) throw ZeroForm("B(z, [X, Y]) vanishes on m");
  if (!is_invariant(s, TensorKind::Alt2, w) || !is_closed(s, w))
    throw std::logic_error("form from a central element is not invariant and closed");
  return w;
}

std::size_t scan_small_integer_vectors(std::size_t n, int bound,
                                       const std::function<bool(const std::vector<int>&)>& visit) {
  std::size_t visited = 0;
  bool stop = false;
  std::vector<int> c(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (stop) return;
    if (i == n) {
      if (left == 0) {
        ++visited;
        stop = visit(c);
      }
      return;
    }
    const int reach = std::min(left, bound);
    for (int v = -reach; v <= reach && !stop; ++v) {
      c[i] = v;
      rec(i + 1, left - std::abs(v));
    }
    c[i] = 0;
  };
  for (int norm = 1; norm <= bound * static_cast<int>(n) && !stop; ++norm) rec(0, norm);
  return visited;
}

SymplecticFamily symplectic_family(const ReductiveSplit& s) {
  SymplecticFamily out;
  const auto alt = invariant_tensors(s, TensorKind::Alt2);
  out.closed_basis =
      constrained_combinations(alt.elements, [&](const RationalMatrix& w) { return full_residual(s, w); });
  const auto& basis = out.closed_basis;
  out.combinations_checked = scan_small_integer_vectors(basis.size(), 3, [&](const std::vector<int>& c) {
    RationalMatrix w(s.dim_m(), s.dim_m());
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) w += basis[i] * Rational(c[i]);
    if (sgn(determinant(w)) == 0) return false;
    out.sample = w;
    out.sample_coefficients = c;
    return true;
  });
  return out;
}

bool tensor_decomposition_check(const ReductiveSplit& s, std::size_t dim_w, std::size_t dim_f) {
  const std::size_t n = s.dim_m();
  if (dim_w * dim_f != n)
    throw std::invalid_argument("tensor_decomposition_check: " + std::to_string(dim_w) + " x " +
                                std::to_string(dim_f) + " does not factor dim m = " + std::to_string(n));
  // basis of gl(W) (x) Id + Id (x) gl(F), flattened; index of (f, w) is f * dim_w + w
  std::vector<RationalVector> span;
  for (std::size_t w = 0; w < dim_w; ++w)
    for (std::size_t w2 = 0; w2 < dim_w; ++w2) {
      RationalMatrix e(n, n);
      for (std::size_t f = 0; f < dim_f; ++f) e(f * dim_w + w, f * dim_w + w2) = 1;
      span.push_back(flatten(e));
    }
  for (std::size_t f = 0; f < dim_f; ++f)
    for (std::size_t f2 = 0; f2 < dim_f; ++f2) {
      RationalMatrix e(n, n);
      for (std::size_t w = 0; w < dim_w; ++w) e(f * dim_w + w, f2 * dim_w + w) = 1;
      span.push_back(flatten(e));
    }
  const auto basis = span_basis(span);  // Id appears in both summands
  const auto rep = isotropy_rep(s);
  for (const auto& gen : rep.generators) {
    RationalVector c;
    if (!solve_in_span(basis, flatten(gen), c)) return false;
  }
  return true;
}

}  // namespace geostruct
