#include "doctest.h"
#include "geostruct/catalog.hpp"
#include "geostruct/homogeneous.hpp"
#include "oracle.hpp"

using namespace geostruct;

namespace {

std::size_t oracle_rank(const std::vector<RationalVector>& vs) {
  oracle::Mat m;
  for (const auto& v : vs) m.emplace_back(v.begin(), v.end());
  return oracle::rank(m);
}

bool in_span_oracle(const std::vector<RationalVector>& basis, const RationalVector& v) {
  auto with = basis;
  with.push_back(v);
  return oracle_rank(with) == oracle_rank(basis);
}

// Closure properties by brute force on the raw brackets.
bool split_oracle(const LieAlgebra& g, const Subspace& h, const Subspace& m) {
  for (const auto& a : h.basis())
    for (const auto& b : h.basis())
      if (!in_span_oracle(h.basis(), g.bracket(a, b))) return false;
  for (const auto& a : h.basis())
    for (const auto& b : m.basis())
      if (!in_span_oracle(m.basis(), g.bracket(a, b))) return false;
  return true;
}

std::vector<std::pair<std::string, ReductiveSplit>> catalog_splits() {
  std::vector<std::pair<std::string, ReductiveSplit>> out;
  auto add = [&](const std::string& name, const LabeledAlgebra& l, const char* h, const char* m) {
    out.emplace_back(name, make_split(l.algebra, l.subspace(h), l.subspace(m)));
  };
  add("so(5) +", build_so(5, 0), "h+", "m+");
  add("so(3,2) -", build_so(3, 2), "h-", "m-");
  add("e(3,0)", build_e(3, 0), "h", "m");
  add("su(3)", build_su(3, 0), "h", "l");
  add("su(1,3)", build_su(1, 3), "h", "l");
  add("sp(3)", build_sp(3, 0), "h", "l");
  add("sp(1,2)", build_sp(1, 2), "h", "l");
  return out;
}

}  // namespace

TEST_CASE("catalog splits are valid and agree with the closure oracle") {
  const auto l = build_su(3, 0);
  CHECK(split_oracle(l.algebra, l.subspace("h"), l.subspace("l")));
  for (const auto& [name, s] : catalog_splits()) {
    INFO(name);
    CHECK(split_oracle(s.parent, s.h, s.m));
    const auto id = RationalMatrix::identity(s.parent.dim());
    CHECK(s.proj_h + s.proj_m == id);
    CHECK((s.proj_h * s.proj_m).is_zero());
    CHECK((s.proj_m * s.proj_h).is_zero());
    for (std::size_t j = 0; j < s.dim_m(); ++j) CHECK(s.m_coordinates(s.m[j]) == unit_vector(s.dim_m(), j));
  }
}

TEST_CASE("split errors name the failure") {
  auto l = build_su(3, 0);
  const auto& g = l.algebra;
  const auto& h = l.subspace("h");
  const auto& m = l.subspace("l");

  SUBCASE("same subspace twice") {
    Subspace half(g.dim(), {m[0], m[1], m[2], m[3]});
    try {
      make_split(g, half, half);
      FAIL("expected SplitError");
    } catch (const SplitError& e) {
      CHECK(e.kind == SplitError::Kind::NotComplement);
      CHECK(e.i == 0);
      CHECK(e.j == 0);
    }
  }
  SUBCASE("wrong dimension") {
    try {
      make_split(g, h, Subspace(g.dim(), {m[0]}));
      FAIL("expected SplitError");
    } catch (const SplitError& e) {
      CHECK(e.kind == SplitError::Kind::NotComplement);
      CHECK(e.i == SplitError::npos);
    }
  }
  SUBCASE("h not closed") {
    // span{E1, E2} is not a subalgebra: [E1, E2] = 2 h1
    Subspace bad_h(g.dim(), {l.element("E1"), l.element("E2")});
    std::vector<RationalVector> rest{l.element("h0"), l.element("h1")};
    for (const auto& v : l.subspace("V+").basis()) rest.push_back(v);
    for (const auto& v : l.subspace("V-").basis()) rest.push_back(v);
    try {
      make_split(g, bad_h, Subspace(g.dim(), rest));
      FAIL("expected SplitError");
    } catch (const SplitError& e) {
      CHECK(e.kind == SplitError::Kind::NotSubalgebra);
      CHECK(e.i == 0);
      CHECK(e.j == 1);
    }
  }
  SUBCASE("complement not invariant") {
    std::vector<RationalVector> tilted;
    for (const auto& v : m.basis()) tilted.push_back(v == l.element("E2") ? add(v, l.element("h0")) : v);
    try {
      make_split(g, h, Subspace(g.dim(), tilted));
      FAIL("expected SplitError");
    } catch (const SplitError& e) {
      CHECK(e.kind == SplitError::Kind::NotInvariantComplement);
      CHECK_FALSE(split_oracle(g, h, Subspace(g.dim(), tilted)));
    }
  }
}

TEST_CASE("Killing complement") {
  SUBCASE("su(3) with the torus gives the labeled complement") {
    auto l = build_su(3, 0);
    Subspace t(l.algebra.dim(), {l.element("h0"), l.element("h1")});
    const auto m = killing_complement(l.algebra, t);
    CHECK(m.dim() == 6);
    for (const auto& v : l.subspace("l").basis()) CHECK(m.contains(v));
    // oracle: B(t, m) = 0 by direct traces
    const auto b = killing(l.algebra);
    for (const auto& x : t.basis())
      for (const auto& y : m.basis()) CHECK(dot(b.apply(x), y) == 0);
  }
  SUBCASE("motion algebra is degenerate") {
    auto e = build_e(3, 0);
    CHECK_THROWS_AS(killing_complement(e.algebra, e.subspace("h")), DegenerateRestriction);
  }
  SUBCASE("f4 with the centralizer of h1") {
    auto f4 = build_f4();
    const auto m = killing_complement(f4.algebra, f4.subspace("h"));
    CHECK(m.dim() == 30);
    auto s = make_split(f4.algebra, f4.subspace("h"), m);
    CHECK_FALSE(is_symmetric_pair(s));
    CHECK(isotropy_rep(s).generators.size() == 22);
  }
}

TEST_CASE("isotropy representation") {
  for (const auto& [name, s] : catalog_splits()) {
    INFO(name);
    const auto rep = isotropy_rep(s);  // throws if not a homomorphism
    CHECK(rep.generators.size() == s.dim_h());
    CHECK(isotropy_action(s, RationalVector(s.parent.dim())).is_zero());
  }
}

TEST_CASE("bivector isotropy swaps the two H factors") {
  for (auto [p, q, split] : {std::tuple{5, 0, "+"}, std::tuple{3, 2, "-"}, std::tuple{3, 2, "+"}}) {
    auto l = build_so(p, q);
    auto s = make_split(l.algebra, l.subspace(std::string("h") + split), l.subspace(std::string("m") + split));
    const auto a = isotropy_action(s, l.element(std::string("e^e1") + split));
    const std::size_t k = s.dim_m() / 2;
    const Rational sign = std::string(split) == "+" ? 1 : -1;
    // m basis: e^x_a (a < k) then e1^x_a; e^x -> -e1^x and e1^x -> +-e^x
    RationalMatrix expected(2 * k, 2 * k);
    for (std::size_t a_ = 0; a_ < k; ++a_) {
      expected(k + a_, a_) = -1;
      expected(a_, k + a_) = sign;
    }
    CHECK(a == expected);
  }
}

TEST_CASE("isotropy of h0 on the complex projective plane") {
  auto l = build_su(3, 0);
  auto s = make_split(l.algebra, l.subspace("h"), l.subspace("l"));
  const auto a = isotropy_action(s, l.element("h0"));
  // kills V0 and acts on the X block as a complex structure scaled by (n+1)/(n-1) = 3
  for (const auto& v : l.subspace("V0").basis()) CHECK(is_zero(a.apply(s.m_coordinates(v))));
  for (const char* name : {"V+", "V-"})
    for (const auto& v : l.subspace(name).basis()) {
      const auto x = s.m_coordinates(v);
      CHECK(a.apply(a.apply(x)) == scaled(x, -9));
    }
}

TEST_CASE("symmetric pairs") {
  for (const auto& [name, s] : catalog_splits()) {
    INFO(name);
    const bool expect = name.rfind("so", 0) == 0 || name.rfind("e(", 0) == 0;
    CHECK(is_symmetric_pair(s) == expect);
    // oracle: every [m_i, m_j] lies in h
    bool brute = true;
    for (const auto& x : s.m.basis())
      for (const auto& y : s.m.basis()) brute = brute && in_span_oracle(s.h.basis(), s.parent.bracket(x, y));
    CHECK(brute == expect);
  }
}
