#include "doctest.h"
#include "geostruct/catalog.hpp"
#include "oracle.hpp"

#include <random>

using namespace geostruct;

namespace {

// Matrix of ad_x restricted to S in the basis of S; fails the test if S is not invariant.
RationalMatrix restricted_ad(const LabeledAlgebra& l, const RationalVector& x, const Subspace& s) {
  RationalMatrix m(s.dim(), s.dim());
  for (std::size_t j = 0; j < s.dim(); ++j) {
    const auto image = l.algebra.bracket(x, s[j]);
    REQUIRE(s.contains(image));
    const auto c = s.coordinates(image);
    for (std::size_t i = 0; i < s.dim(); ++i) m(i, j) = c[i];
  }
  return m;
}

std::size_t kernel_dim(const RationalMatrix& a) {
  oracle::Mat m(a.rows(), std::vector<oracle::Q>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
  return a.cols() - oracle::rank(m);
}

Octonion random_octonion(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-3, 3);
  Octonion o;
  for (std::size_t i = 0; i < 8; ++i) o[i] = dist(rng);
  return o;
}

Rational norm2(const Octonion& o) { return (o * o.conj()).real(); }

}  // namespace

TEST_CASE("catalog algebras validate and have the stated dimensions") {
  struct Case {
    LabeledAlgebra l;
    std::size_t dim;
  };
  std::vector<Case> cases{{build_so(3, 0), 3},  {build_so(5, 0), 10}, {build_so(2, 2), 6},  {build_e(3, 0), 6},
                          {build_e(2, 1), 6},   {build_e(4, 0), 10},  {build_su(3, 0), 8},  {build_su(1, 2), 8},
                          {build_su(4, 0), 15}, {build_su(1, 3), 15}, {build_sp(3, 0), 21}, {build_sp(1, 2), 21},
                          {build_sp(2, 0), 10}};
  for (const auto& c : cases) {
    CHECK(c.l.algebra.dim() == c.dim);
    CHECK_FALSE(validate(c.l.algebra).has_value());
  }
}

TEST_CASE("parameter checks") {
  CHECK_THROWS_AS(build_so(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_so(-1, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_e(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_su(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_su(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_sp(2, 3), std::invalid_argument);
}

TEST_CASE("geodesic split of so(5)") {
  auto l = build_so(5, 0);
  CHECK(l.subspace("h+").dim() == 4);  // so(2) + so(3)
  CHECK(l.subspace("m+").dim() == 6);
  CHECK(l.subspace("h+").contains(l.element("e^e1+")));
  CHECK_THROWS(l.subspace("h-"));
  auto lor = build_so(3, 2);
  CHECK(lor.subspace("h-").dim() == 1 + 3);  // so(1,1) + so(2,1)
  CHECK(lor.subspace("m-").dim() == 6);
}

TEST_CASE("motion algebra subspaces") {
  auto e = build_e(3, 0);
  CHECK(e.subspace("U").dim() == 2);
  CHECK(e.subspace("W").dim() == 2);
  CHECK(e.subspace("h").dim() == 2);  // so(2) + R e0
  CHECK(e.subspace("h").contains(e.element("e0")));
  // ad e0 is nilpotent: U -> W -> 0
  const auto ad = adjoint(e.algebra, e.element("e0"));
  CHECK_FALSE(ad.is_zero());
  CHECK((ad * ad).is_zero());
  for (const auto& u : e.subspace("U").basis()) CHECK(e.subspace("W").contains(ad.apply(u)));
}

TEST_CASE("golden identities") {
  const auto table = golden_identities();
  CHECK(table.size() >= 20);
  std::size_t corrected = 0;
  for (const auto& g : table) {
    INFO(g.statement);
    CHECK(g.holds());
    if (!g.as_displayed) {
      ++corrected;
      CHECK_FALSE(g.note.empty());
    }
  }
  CHECK(corrected < table.size());
}

TEST_CASE("isotropy pattern of the complex projective case") {
  auto l = build_su(4, 0);
  const auto& h0 = l.element("h0");
  const auto& h1 = l.element("h1");
  // V0: ad h0 = 0, (ad h1)^2 = -4.  V+-: ad h0 is a complex structure up to scale, (ad h1)^2 = -1.
  const auto a0 = restricted_ad(l, h0, l.subspace("V0"));
  CHECK(a0.is_zero());
  const auto a1 = restricted_ad(l, h1, l.subspace("V0"));
  CHECK(a1 * a1 == RationalMatrix::identity(2) * Rational(-4));
  for (const char* name : {"V+", "V-"}) {
    const auto& v = l.subspace(name);
    CHECK(v.dim() == 4);
    const auto b1 = restricted_ad(l, h1, v);
    CHECK(b1 * b1 == RationalMatrix::identity(4) * Rational(-1));
    const auto b0 = restricted_ad(l, h0, v);
    CHECK(b0 * b0 == RationalMatrix::identity(4) * Rational(-4));
    CHECK(b0 * b1 == b1 * b0);
  }
}

TEST_CASE("isotropy pattern of the complex hyperbolic case") {
  auto l = build_su(1, 3);
  const auto& h1 = l.element("h1");
  CHECK(l.algebra.bracket(h1, l.element("E+")) == scaled(l.element("E+"), 2));
  CHECK(l.algebra.bracket(h1, l.element("E-")) == scaled(l.element("E-"), -2));
  CHECK(restricted_ad(l, h1, l.subspace("V+")) == RationalMatrix::identity(4));
  CHECK(restricted_ad(l, h1, l.subspace("V-")) == RationalMatrix::identity(4) * Rational(-1));
  CHECK(restricted_ad(l, l.element("h0"), l.subspace("V0")).is_zero());
}

TEST_CASE("isotropy pattern of the quaternionic cases") {
  for (int eps : {1, -1}) {
    auto l = eps == 1 ? build_sp(3, 0) : build_sp(1, 2);
    CHECK(l.subspace("V0").dim() == 6);
    CHECK(l.subspace("V1").dim() == 8);
    const auto a = restricted_ad(l, l.element("h1"), l.subspace("V1"));
    CHECK(a * a == RationalMatrix::identity(8) * Rational(-eps));
    const auto b = restricted_ad(l, l.element("h1"), l.subspace("V0"));
    CHECK(b * b == RationalMatrix::identity(6) * Rational(-4 * eps));
    // sp(1) acts on V0 by the adjoint (so(3)) action on each imaginary triple
    const auto c = restricted_ad(l, l.element("h0.i"), l.subspace("V0"));
    CHECK(kernel_dim(c) == 2);
  }
}

TEST_CASE("octonions are alternative and normed") {
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      const auto x = Octonion::unit(a), y = Octonion::unit(b);
      CHECK((x * x) * y == x * (x * y));
      CHECK((y * x) * x == y * (x * x));
    }
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto x = random_octonion(rng), y = random_octonion(rng);
    CHECK((x * x) * y == x * (x * y));
    CHECK(norm2(x * y) == norm2(x) * norm2(y));
    CHECK((x * y).conj() == y.conj() * x.conj());
  }
  // not associative
  const auto e1 = Octonion::unit(1), e2 = Octonion::unit(2), e3 = Octonion::unit(3);
  CHECK_FALSE((e1 * e2) * e3 == e1 * (e2 * e3));
}

TEST_CASE("Jordan algebra basics") {
  for (std::size_t i = 0; i < JordanElement::kDim; ++i) {
    const auto x = JordanElement::basis(i);
    CHECK(JordanElement::from_coordinates(x.coordinates()).coordinates() == x.coordinates());
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t s = 0; s < 3; ++s) CHECK(x.entry(r, s) == x.entry(s, r).conj());
  }
  // E11 is an idempotent, and the identity is the unit.
  const auto e11 = JordanElement::basis(0);
  CHECK(jordan_product(e11, e11).coordinates() == e11.coordinates());
  RationalVector one(27);
  one[0] = one[1] = one[2] = 1;
  const auto id = JordanElement::from_coordinates(one);
  std::mt19937_64 rng(9);
  RationalVector v(27);
  for (auto& c : v) c = static_cast<int>(rng() % 7) - 3;
  const auto x = JordanElement::from_coordinates(v);
  CHECK(jordan_product(id, x).coordinates() == v);
  CHECK_THROWS_AS(JordanElement::basis(27), std::out_of_range);
}

TEST_CASE("compact f4 from Jordan derivations") {
  const auto f4 = build_f4();
  const auto& g = f4.algebra;
  CHECK(g.dim() == 52);
  CHECK_FALSE(validate(g).has_value());
  CHECK(f4.subspace("stab").dim() == 36);
  CHECK(f4.subspace("p").dim() == 16);
  CHECK(f4.subspace("h").dim() == 22);
  CHECK(f4.subspace("l").dim() == 30);
  CHECK(f4.subspace("p").contains(f4.element("h1")));
  CHECK(signature(killing(g)) == Signature{0, 52, 0});

  // derivations: D(x o y) = Dx o y + x o Dy on a sample pair
  const auto& d = f4.basis_matrices[7];
  const auto x = JordanElement::basis(5), y = JordanElement::basis(20);
  const auto lhs = d.apply(jordan_product(x, y).coordinates());
  const auto rhs = add(jordan_product(JordanElement::from_coordinates(d.apply(x.coordinates())), y).coordinates(),
                       jordan_product(x, JordanElement::from_coordinates(d.apply(y.coordinates()))).coordinates());
  CHECK(lhs == rhs);

  // grading multiplicities {0: 22, -tau^2: 16, -4 tau^2: 14}
  const Rational tau2 = f4_tau_squared(f4);
  CHECK(tau2 > 0);
  const auto ad = adjoint(g, f4.element("h1"));
  const auto sq = ad * ad;
  const auto id = RationalMatrix::identity(52);
  CHECK(kernel_dim(sq) == 22);
  CHECK(kernel_dim(sq + id * tau2) == 16);
  CHECK(kernel_dim(sq + id * (4 * tau2)) == 14);
}
