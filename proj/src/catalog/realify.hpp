#pragma once

// Complex and quaternionic matrices, realified by the conventions stated in
// catalog.hpp.

#include "geostruct/exactnum.hpp"

#include <array>

namespace geostruct::detail {

/// Quaternion a + bi + cj + dk.
struct Quaternion {
  std::array<Rational, 4> c{};
  static Quaternion unit(std::size_t i) {
    Quaternion q;
    q.c[i] = 1;
    return q;
  }
  Quaternion conj() const { return {{c[0], -c[1], -c[2], -c[3]}}; }
  Quaternion operator-() const { return {{-c[0], -c[1], -c[2], -c[3]}}; }
  Quaternion operator*(const Rational& s) const { return {{c[0] * s, c[1] * s, c[2] * s, c[3] * s}}; }
};

inline Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  const auto& a = p.c;
  const auto& b = q.c;
  return {{a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3], a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
           a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1], a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]}};
}

/// Left multiplication x -> q x on coordinates (1, i, j, k).
inline RationalMatrix left_regular(const Quaternion& q) {
  RationalMatrix m(4, 4);
  for (std::size_t j = 0; j < 4; ++j) {
    const Quaternion col = q * Quaternion::unit(j);
    for (std::size_t i = 0; i < 4; ++i) m(i, j) = col.c[i];
  }
  return m;
}

/// Quaternionic N x N matrix, entries indexed [r][s].
class QuaternionMatrix {
public:
  explicit QuaternionMatrix(std::size_t n) : n_(n), e_(n * n) {}
  Quaternion& operator()(std::size_t r, std::size_t s) { return e_[r * n_ + s]; }
  std::size_t size() const { return n_; }

  RationalMatrix realify() const {
    RationalMatrix out(4 * n_, 4 * n_);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t s = 0; s < n_; ++s) {
        const auto block = left_regular(e_[r * n_ + s]);
        for (std::size_t i = 0; i < 4; ++i)
          for (std::size_t j = 0; j < 4; ++j) out(4 * r + i, 4 * s + j) = block(i, j);
      }
    return out;
  }

private:
  std::size_t n_;
  std::vector<Quaternion> e_;
};

/// Complex N x N matrix as a quaternionic one with only (1, i) parts, realified
/// by 2x2 blocks [[a, -b], [b, a]].
class ComplexMatrix {
public:
  explicit ComplexMatrix(std::size_t n) : n_(n), re_(n, n), im_(n, n) {}
  void set(std::size_t r, std::size_t s, const Rational& a, const Rational& b) {
    re_(r, s) = a;
    im_(r, s) = b;
  }
  std::size_t size() const { return n_; }

  RationalMatrix realify() const {
    RationalMatrix out(2 * n_, 2 * n_);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t s = 0; s < n_; ++s) {
        out(2 * r, 2 * s) = re_(r, s);
        out(2 * r, 2 * s + 1) = -im_(r, s);
        out(2 * r + 1, 2 * s) = im_(r, s);
        out(2 * r + 1, 2 * s + 1) = re_(r, s);
      }
    return out;
  }

private:
  std::size_t n_;
  RationalMatrix re_, im_;
};

}  // namespace geostruct::detail
