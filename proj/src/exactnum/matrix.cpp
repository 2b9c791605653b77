#include "geostruct/exactnum.hpp"

#include <algorithm>
#include <sstream>

namespace geostruct {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const RationalVector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].get_str();
  }
  os << ")";
  return os.str();
}

bool is_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

RationalVector scaled(const RationalVector& v, const Rational& s) {
  RationalVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * s;
  return r;
}

RationalVector add(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RationalVector sub(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

RationalVector unit_vector(std::size_t n, std::size_t i) {
  RationalVector v(n);
  v.at(i) = 1;
  return v;
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("entry count does not match shape");
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::diagonal(const RationalVector& d) {
  RationalMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

RationalMatrix RationalMatrix::from_columns(std::span<const RationalVector> columns, std::size_t rows) {
  RationalMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

RationalMatrix RationalMatrix::from_rows(std::span<const RationalVector> rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t i) const {
  return RationalVector(data_.begin() + static_cast<long>(i * cols_),
                        data_.begin() + static_cast<long>((i + 1) * cols_));
}

RationalVector RationalMatrix::column(std::size_t j) const {
  RationalVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Rational RationalMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool RationalMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool RationalMatrix::is_antisymmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

RationalVector RationalMatrix::apply(const RationalVector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
  RationalVector y(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (sgn(x[j]) == 0) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rational& a = (*this)(i, j);
      if (sgn(a) != 0) y[i] += a * x[j];
    }
  }
  return y;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch in matrix product");
  RationalMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (sgn(bkj) != 0) c(i, j) += aik * bkj;
      }
    }
  return c;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) { return a * b - b * a; }

RationalVector flatten(const RationalMatrix& a) { return RationalVector(a.entries().begin(), a.entries().end()); }

RationalMatrix unflatten(const RationalVector& v, std::size_t rows, std::size_t cols) {
  return RationalMatrix(rows, cols, v);
}

RrefResult rref(RationalMatrix a) {
  RrefResult out;
  const std::size_t m = a.rows(), n = a.cols();
  std::size_t r = 0;
  Rational f;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && sgn(a(p, c)) == 0) ++p;
    if (p == m) continue;
    if (p != r)
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(r, j));
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < n; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      f = a(i, c);
      for (std::size_t j = c; j < n; ++j)
        if (sgn(a(r, j)) != 0) a(i, j) -= f * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(a);
  return out;
}

std::size_t rank(const RationalMatrix& a) { return rref(a).pivots.size(); }

std::vector<RationalVector> span_basis(std::span<const RationalVector> vectors) {
  if (vectors.empty()) return {};
  const std::size_t n = vectors.front().size();
  auto r = rref(RationalMatrix::from_rows(vectors, n));
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < r.pivots.size(); ++i) out.push_back(r.reduced.row(i));
  return out;
}

std::size_t span_rank(std::span<const RationalVector> vectors) {
  if (vectors.empty()) return 0;
  return rank(RationalMatrix::from_rows(vectors, vectors.front().size()));
}

bool solve_in_span(std::span<const RationalVector> basis, const RationalVector& v, RationalVector& coords) {
  const std::size_t n = v.size(), k = basis.size();
  RationalMatrix aug(n, k + 1);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) aug(i, j) = basis[j][i];
  for (std::size_t i = 0; i < n; ++i) aug(i, k) = v[i];
  auto r = rref(std::move(aug));
  if (!r.pivots.empty() && r.pivots.back() == k) return false;
  coords.assign(k, Rational(0));
  for (std::size_t i = 0; i < r.pivots.size(); ++i) coords[r.pivots[i]] = r.reduced(i, k);
  // Dependent basis vectors get coefficient zero; confirm the combination.
  RationalVector check(n);
  for (std::size_t j = 0; j < k; ++j)
    if (sgn(coords[j]) != 0)
      for (std::size_t i = 0; i < n; ++i) check[i] += coords[j] * basis[j][i];
  return check == v;
}

RationalMatrix inverse(const RationalMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = a.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto r = rref(std::move(aug));
  if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) throw std::domain_error("matrix is singular");
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

Rational determinant(const RationalMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  RationalMatrix m = a;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      const Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

namespace {

// Removes the given (sorted, descending) indices from a symmetric matrix.
RationalMatrix drop_indices(const RationalMatrix& s, const std::vector<std::size_t>& drop) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < s.rows(); ++i)
    if (std::find(drop.begin(), drop.end(), i) == drop.end()) keep.push_back(i);
  RationalMatrix out(keep.size(), keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b) out(a, b) = s(keep[a], keep[b]);
  return out;
}

}  // namespace

Signature signature(const RationalMatrix& s) {
  if (!s.is_symmetric()) throw std::invalid_argument("signature requires a symmetric matrix");
  Signature sig;
  RationalMatrix cur = s;
  while (cur.rows() > 0) {
    const std::size_t n = cur.rows();
    // Largest diagonal entry in absolute value.
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i)
      if (sgn(cur(i, i)) != 0 && (best == n || abs(cur(i, i)) > abs(cur(best, best)))) best = i;
    if (best < n) {
      const Rational d = cur(best, best);
      (sgn(d) > 0 ? sig.pos : sig.neg) += 1;
      RationalMatrix next(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          next(i, j) = cur(i, j);
          if (sgn(cur(i, best)) != 0 && sgn(cur(best, j)) != 0) next(i, j) -= cur(i, best) * cur(best, j) / d;
        }
      cur = drop_indices(next, {best});
      continue;
    }
    // Zero diagonal: pivot on a 2x2 block [[0,a],[a,0]], signature (1,1).
    std::size_t bi = n, bj = n;
    for (std::size_t i = 0; i < n && bi == n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (sgn(cur(i, j)) != 0) {
          bi = i;
          bj = j;
          break;
        }
    if (bi == n) {
      sig.null += n;
      break;
    }
    sig.pos += 1;
    sig.neg += 1;
    const Rational a = cur(bi, bj);
    // Block inverse of [[0,a],[a,0]] is [[0,1/a],[1/a,0]].
    RationalMatrix next(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        next(i, j) = cur(i, j) - (cur(i, bi) * cur(bj, j) + cur(i, bj) * cur(bi, j)) / a;
      }
    cur = drop_indices(next, {bi, bj});
  }
  return sig;
}

}  // namespace geostruct
