#include "geostruct/catalog.hpp"

namespace geostruct {

namespace {

struct UnitProduct {
  int sign;
  std::size_t index;
};

// products[a][b] = e_a e_b for the units e_0 = 1, e_1..e_7
const std::array<std::array<UnitProduct, 8>, 8>& unit_products() {
  static const auto table = [] {
    std::array<std::array<UnitProduct, 8>, 8> t{};
    for (std::size_t a = 0; a < 8; ++a) {
      t[0][a] = {1, a};
      t[a][0] = {1, a};
    }
    for (std::size_t a = 1; a < 8; ++a) t[a][a] = {-1, 0};
    for (const auto& tr : octonion_triples())
      for (int shift = 0; shift < 3; ++shift) {
        const std::size_t i = tr[shift], j = tr[(shift + 1) % 3], k = tr[(shift + 2) % 3];
        t[i][j] = {1, k};
        t[j][i] = {-1, k};
      }
    return t;
  }();
  return table;
}

}  // namespace

const std::array<std::array<std::size_t, 3>, 7>& octonion_triples() {
  static const std::array<std::array<std::size_t, 3>, 7> triples{
      {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {5, 6, 1}, {6, 7, 2}, {7, 1, 3}}};
  return triples;
}

Octonion Octonion::unit(std::size_t i) {
  if (i >= 8) throw std::out_of_range("octonion unit index");
  Octonion o;
  o.c_[i] = 1;
  return o;
}

Octonion Octonion::conj() const {
  Octonion o = *this;
  for (std::size_t i = 1; i < 8; ++i) o.c_[i] = -o.c_[i];
  return o;
}

bool Octonion::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

Octonion operator+(const Octonion& a, const Octonion& b) {
  Octonion o;
  for (std::size_t i = 0; i < 8; ++i) o.c_[i] = a.c_[i] + b.c_[i];
  return o;
}

Octonion operator-(const Octonion& a, const Octonion& b) {
  Octonion o;
  for (std::size_t i = 0; i < 8; ++i) o.c_[i] = a.c_[i] - b.c_[i];
  return o;
}

Octonion operator*(const Octonion& a, const Octonion& b) {
  const auto& t = unit_products();
  Octonion o;
  for (std::size_t i = 0; i < 8; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < 8; ++j) {
      if (sgn(b.c_[j]) == 0) continue;
      const auto& p = t[i][j];
      if (p.sign > 0)
        o.c_[p.index] += a.c_[i] * b.c_[j];
      else
        o.c_[p.index] -= a.c_[i] * b.c_[j];
    }
  }
  return o;
}

Octonion operator*(const Rational& s, const Octonion& a) {
  Octonion o;
  for (std::size_t i = 0; i < 8; ++i) o.c_[i] = s * a.c_[i];
  return o;
}

namespace {

constexpr std::array<std::array<std::size_t, 2>, 3> kSlots{{{0, 1}, {1, 2}, {0, 2}}};

}  // namespace

JordanElement JordanElement::basis(std::size_t i) {
  if (i >= kDim) throw std::out_of_range("Jordan basis index");
  JordanElement x;
  if (i < 3) {
    x.m_[i][i] = Octonion::unit(0);
    return x;
  }
  const auto [r, s] = kSlots[(i - 3) / 8];
  const Octonion u = Octonion::unit((i - 3) % 8);
  x.m_[r][s] = u;
  x.m_[s][r] = u.conj();
  return x;
}

JordanElement JordanElement::from_coordinates(const RationalVector& v) {
  if (v.size() != kDim) throw std::invalid_argument("Jordan coordinates need 27 entries");
  JordanElement x;
  for (std::size_t r = 0; r < 3; ++r) x.m_[r][r][0] = v[r];
  for (std::size_t slot = 0; slot < 3; ++slot) {
    const auto [r, s] = kSlots[slot];
    for (std::size_t u = 0; u < 8; ++u) x.m_[r][s][u] = v[3 + 8 * slot + u];
    x.m_[s][r] = x.m_[r][s].conj();
  }
  return x;
}

RationalVector JordanElement::coordinates() const {
  RationalVector v(kDim);
  for (std::size_t r = 0; r < 3; ++r) v[r] = m_[r][r][0];
  for (std::size_t slot = 0; slot < 3; ++slot) {
    const auto [r, s] = kSlots[slot];
    for (std::size_t u = 0; u < 8; ++u) v[3 + 8 * slot + u] = m_[r][s][u];
  }
  return v;
}

JordanElement jordan_product(const JordanElement& x, const JordanElement& y) {
  JordanElement z;
  const Rational half(1, 2);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t s = 0; s < 3; ++s) {
      Octonion acc;
      for (std::size_t k = 0; k < 3; ++k) acc = acc + x.m_[r][k] * y.m_[k][s] + y.m_[r][k] * x.m_[k][s];
      z.m_[r][s] = half * acc;
    }
  return z;
}

}  // namespace geostruct
