#include "geostruct/catalog.hpp"
#include "realify.hpp"

#include <memory>

namespace geostruct {

using detail::Quaternion;

namespace {

// ---- shared helpers -------------------------------------------------------

bool same(const RationalVector& a, const RationalVector& b) { return a == b; }

// Drops the coordinates of the semisimple block su_{n-1} / sp_{n-1} (labels "A...").
RationalVector mod_block(const LabeledAlgebra& l, RationalVector v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (l.algebra.label(i)[0] == 'A') v[i] = 0;
  return v;
}

RationalVector random_block_element(const LabeledAlgebra& l) {
  RationalVector v(l.algebra.dim());
  int k = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (l.algebra.label(i)[0] == 'A') {
      v[i] = make_rational((k * 7) % 5 - 2, 1 + k % 3);
      ++k;
    }
  return v;
}

// ---- complex case ---------------------------------------------------------

struct Cx {
  Rational re, im;
};
using CVec = std::vector<Cx>;

Cx operator*(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
CVec times(const Cx& s, const CVec& v) {
  CVec out;
  for (const auto& x : v) out.push_back(s * x);
  return out;
}
CVec negated(const CVec& v) { return times({-1, 0}, v); }

// eta(X, Y) = X^* Y; returns (g, rho) = (Re eta, Im eta)
std::pair<Rational, Rational> hermitian(const CVec& x, const CVec& y) {
  Rational g = 0, rho = 0;
  for (std::size_t a = 0; a < x.size(); ++a) {
    const Cx p = Cx{x[a].re, -x[a].im} * y[a];
    g += p.re;
    rho += p.im;
  }
  return {g, rho};
}

RationalVector su_element(const LabeledAlgebra& l, const Rational& x1, const Rational& x2, const CVec& X1,
                          const CVec& X2) {
  const auto& g = l.algebra;
  RationalVector v(g.dim());
  v[g.index_of("x1")] += x1;
  v[g.index_of("x2")] += x2;
  for (std::size_t a = 0; a < X1.size(); ++a) {
    const std::string i = "[" + std::to_string(a) + "]";
    v[g.index_of("X1" + i + ".re")] += X1[a].re;
    v[g.index_of("X1" + i + ".im")] += X1[a].im;
    v[g.index_of("X2" + i + ".re")] += X2[a].re;
    v[g.index_of("X2" + i + ".im")] += X2[a].im;
  }
  return v;
}

// Lower-right (n-1)x(n-1) complex block of a realified su element.
CVec apply_block(const RationalMatrix& m, const CVec& x) {
  const std::size_t r = x.size(), off = m.rows() / 2 - r;
  CVec out(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const Cx e{m(2 * (off + i), 2 * (off + j)), m(2 * (off + i) + 1, 2 * (off + j))};
      const Cx p = e * x[j];
      out[i].re += p.re;
      out[i].im += p.im;
    }
  return out;
}

void add_su(std::vector<GoldenIdentity>& out, int eps) {
  auto l = std::make_shared<LabeledAlgebra>(eps == 1 ? build_su(4, 0) : build_su(1, 3));  // n = 3
  const Rational e = eps;
  const std::string tag = eps == 1 ? "su(4): " : "su(1,3): ";
  const Cx i{0, 1};
  const CVec X1{{1, 2}, {-1, make_rational(1, 2)}}, X2{{3, -1}, {2, 0}};
  const CVec Y{{0, 1}, {make_rational(5, 2), -3}};
  const Rational x1 = make_rational(5, 3), x2 = -7;
  auto br = [l](const RationalVector& a, const RationalVector& b) { return l->algebra.bracket(a, b); };
  auto el = [l](const Rational& a, const Rational& b, const CVec& c, const CVec& d) {
    return su_element(*l, a, b, c, d);
  };
  out.push_back({"su", tag + "[E1, E2] = 2 h1", true, "", [=] {
                   return same(br(l->element("E1"), l->element("E2")), scaled(l->element("h1"), 2));
                 }});
  out.push_back({"su", tag + "[E1, (0,0,X1,X2)] = (0,0,-iX1, iX2)", true, "", [=] {
                   return same(br(l->element("E1"), el(0, 0, X1, X2)),
                               el(0, 0, times({0, -1}, X1), times(i, X2)));
                 }});
  out.push_back({"su", tag + "[E2, (0,0,X1,X2)] = (0,0,-iX2, -eps iX1)", true, "", [=] {
                   return same(br(l->element("E2"), el(0, 0, X1, X2)),
                               el(0, 0, times({0, -1}, X2), times({0, -e}, X1)));
                 }});
  out.push_back({"su", tag + "ad h0 (x1,x2,X1,X2) = (0,0,-iX1,-iX2)", false,
                 "holds with the factor (n+1)/(n-1) = 2 for the displayed h0", [=] {
                   return same(br(l->element("h0"), el(x1, x2, X1, X2)),
                               el(0, 0, times({0, -2}, X1), times({0, -2}, X2)));
                 }});
  out.push_back({"su", tag + "ad h1 (x1,x2,X1,X2) = (-2 eps x2, 2 x1, -X2, eps X1)", true, "", [=] {
                   return same(br(l->element("h1"), el(x1, x2, X1, X2)),
                               el(-2 * e * x2, 2 * x1, negated(X2), times({e, 0}, X1)));
                 }});
  out.push_back({"su", tag + "ad A (x1,x2,X1,X2) = (0,0,A X1, A X2) for A in su(n-1)", true, "", [=] {
                   const auto a = random_block_element(*l);
                   const auto m = l->matrix_of(a);
                   return same(br(a, el(x1, x2, X1, X2)), el(0, 0, apply_block(m, X1), apply_block(m, X2)));
                 }});

  const auto [g, rho] = hermitian(X1, Y);
  if (eps == 1) {
    for (int s : {1, -1}) {
      const std::string sign = s == 1 ? "+" : "-";
      out.push_back({"su", tag + "[X" + sign + ", Y" + sign + "] = 2 rho(X,Y)(-h0 " + (s == 1 ? "-" : "+") +
                               " E2) mod su(n-1), X+- = (0,0,X,+-X)",
                     true, "", [=] {
                       const auto lhs = br(el(0, 0, X1, times({s, 0}, X1)), el(0, 0, Y, times({s, 0}, Y)));
                       const auto rhs = scaled(sub(scaled(l->element("h0"), -1), scaled(l->element("E2"), s)),
                                               2 * rho);
                       return same(mod_block(*l, lhs), rhs);
                     }});
    }
    out.push_back({"su", tag + "[X+, Y-] = -2 rho(X,Y) E1 + 2 g(X,Y) h1 mod su(n-1)", false,
                   "holds with -2 g(X,Y) h1", [=] {
                     const auto lhs = br(el(0, 0, X1, X1), el(0, 0, Y, negated(Y)));
                     const auto rhs = add(scaled(l->element("E1"), -2 * rho), scaled(l->element("h1"), -2 * g));
                     return same(mod_block(*l, lhs), rhs);
                   }});
    out.push_back({"su", tag + "ad h1 = 2 J0 on V0 and +-i on V+-", false,
                   "V+- taken as the ad h1 eigenspaces (0,0,X,-+iX)", [=] {
                     const auto vp = el(0, 0, X1, times({0, -1}, X1)), vm = el(0, 0, X1, times(i, X1));
                     const bool v0 = same(br(l->element("h1"), l->element("E1")), scaled(l->element("E2"), 2));
                     return v0 && same(br(l->element("h1"), vp), el(0, 0, times(i, X1), X1)) &&
                            same(br(l->element("h1"), vm), el(0, 0, times({0, -1}, X1), X1)) &&
                            l->subspace("V+").contains(vp) && l->subspace("V-").contains(vm);
                   }});
    return;
  }

  // epsilon = -1, with X+ = (0,0,X,-X) and X- = (0,0,X,X): the ad h1 = +-1 eigenspaces
  auto xp = [=](const CVec& x) { return el(0, 0, x, negated(x)); };
  auto xm = [=](const CVec& x) { return el(0, 0, x, x); };
  const std::string relabel = "with V+ = {(0,0,X,-X)}, the +1 eigenspace of ad h1";
  out.push_back({"su", tag + "[X+, Y+] = 2 rho(X,Y) E+ and [X-, Y-] = 2 rho(X,Y) E- mod su(n-1)", false, relabel,
                 [=] {
                   return same(mod_block(*l, br(xp(X1), xp(Y))), scaled(l->element("E+"), 2 * rho)) &&
                          same(mod_block(*l, br(xm(X1), xm(Y))), scaled(l->element("E-"), 2 * rho));
                 }});
  out.push_back({"su", tag + "[X+, Y-] = 2 rho(X,Y) h0 + 2 g(X,Y) h1 mod su(n-1)", false, relabel, [=] {
                   const auto rhs = add(scaled(l->element("h0"), 2 * rho), scaled(l->element("h1"), 2 * g));
                   return same(mod_block(*l, br(xp(X1), xm(Y))), rhs);
                 }});
  out.push_back({"su", tag + "[E+, V+] = 0 and [E-, V-] = 0", false, relabel, [=] {
                   bool ok = true;
                   for (const auto& v : l->subspace("V+").basis()) ok = ok && is_zero(br(l->element("E+"), v));
                   for (const auto& v : l->subspace("V-").basis()) ok = ok && is_zero(br(l->element("E-"), v));
                   return ok;
                 }});
  out.push_back({"su", tag + "[E+, E-] = -4 h1", true, "", [=] {
                   return same(br(l->element("E+"), l->element("E-")), scaled(l->element("h1"), -4));
                 }});
  out.push_back({"su", tag + "[E+, X-] = -2i X+ and [E-, X+] = -2i X-", false, relabel, [=] {
                   const Cx m2i{0, -2};
                   return same(br(l->element("E+"), xm(X1)), xp(times(m2i, X1))) &&
                          same(br(l->element("E-"), xp(X1)), xm(times(m2i, X1)));
                 }});
  out.push_back({"su", tag + "ad h1 = 2, -2, Id, -Id on R E+, R E-, V+, V-", false, relabel, [=] {
                   const auto& h1 = l->element("h1");
                   return same(br(h1, l->element("E+")), scaled(l->element("E+"), 2)) &&
                          same(br(h1, l->element("E-")), scaled(l->element("E-"), -2)) &&
                          same(br(h1, xp(X1)), xp(X1)) && same(br(h1, xm(X1)), scaled(xm(X1), -1));
                 }});
}

// ---- quaternionic case ----------------------------------------------------

using QVec = std::vector<Quaternion>;

Quaternion q(const Rational& a, const Rational& b, const Rational& c, const Rational& d) { return {{a, b, c, d}}; }
Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  return {{a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]}};
}
Quaternion operator-(const Quaternion& a, const Quaternion& b) { return a + (-b); }
Quaternion lie(const Quaternion& a, const Quaternion& b) { return a * b - b * a; }

QVec right_times(const QVec& v, const Quaternion& s, const Rational& c = 1) {
  QVec out;
  for (const auto& x : v) out.push_back((x * s) * c);
  return out;
}

// eta(X, Y) = X^* Y as a quaternion
Quaternion q_hermitian(const QVec& x, const QVec& y) {
  Quaternion s;
  for (std::size_t a = 0; a < x.size(); ++a) s = s + x[a].conj() * y[a];
  return s;
}

const char* kUnit[] = {"1", "i", "j", "k"};

RationalVector sp_element(const LabeledAlgebra& l, const Quaternion& x1, const Quaternion& x2, const QVec& X1,
                          const QVec& X2) {
  const auto& g = l.algebra;
  RationalVector v(g.dim());
  for (std::size_t u = 1; u < 4; ++u) {
    v[g.index_of(std::string("x1.") + kUnit[u])] += x1.c[u];
    v[g.index_of(std::string("x2.") + kUnit[u])] += x2.c[u];
  }
  for (std::size_t a = 0; a < X1.size(); ++a)
    for (std::size_t u = 0; u < 4; ++u) {
      const std::string s = "[" + std::to_string(a) + "]." + kUnit[u];
      v[g.index_of("X1" + s)] += X1[a].c[u];
      v[g.index_of("X2" + s)] += X2[a].c[u];
    }
  return v;
}

// Im(q) . (named triple prefix.i, prefix.j, prefix.k)
RationalVector imaginary_along(const LabeledAlgebra& l, const std::string& prefix, const Quaternion& x) {
  RationalVector v(l.algebra.dim());
  for (std::size_t u = 1; u < 4; ++u) v[l.algebra.index_of(prefix + kUnit[u])] += x.c[u];
  return v;
}

QVec apply_qblock(const RationalMatrix& m, const QVec& x) {
  const std::size_t r = x.size(), off = m.rows() / 4 - r;
  QVec out(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Quaternion e;
      for (std::size_t t = 0; t < 4; ++t) e.c[t] = m(4 * (off + i) + t, 4 * (off + j));
      out[i] = out[i] + e * x[j];
    }
  return out;
}

void add_sp(std::vector<GoldenIdentity>& out, int eps) {
  auto l = std::make_shared<LabeledAlgebra>(eps == 1 ? build_sp(4, 0) : build_sp(1, 3));  // n = 3
  const Rational e = eps;
  const std::string tag = eps == 1 ? "sp(4): " : "sp(1,3): ";
  const QVec X1{q(1, 2, 0, -1), q(0, 0, 2, 0)}, X2{q(0, 1, 3, 1), q(1, 0, 0, -1)};
  const QVec Y1{q(2, 0, 1, 1), q(0, -1, 0, 0)}, Y2{q(1, -1, 0, 2), q(3, 0, 0, 0)};
  const std::vector<Quaternion> imag{q(0, 1, 0, 0), q(0, 0, 1, 0), q(0, 0, 0, 1), q(0, 1, 2, -1)};
  const Quaternion x1 = q(0, 1, 0, 2), x2 = q(0, make_rational(1, 2), -1, 0);
  auto br = [l](const RationalVector& a, const RationalVector& b) { return l->algebra.bracket(a, b); };
  auto el = [l](const Quaternion& a, const Quaternion& b, const QVec& c, const QVec& d) {
    return sp_element(*l, a, b, c, d);
  };
  const Quaternion zq;
  const QVec zero(2);
  auto along = [l](const std::string& prefix, const Quaternion& x) { return imaginary_along(*l, prefix, x); };

  out.push_back({"sp", tag + "[x1 E1, x2 E2] = -2 Re(x1 x2) h1", true,
                 "x2 E2 read as the complement element (0, x2, 0, 0)", [=] {
                   bool ok = true;
                   for (const auto& a : imag)
                     for (const auto& b : imag)
                       ok = ok && same(br(el(a, zq, zero, zero), el(zq, b, zero, zero)),
                                       scaled(l->element("h1"), -2 * (a * b).c[0]));
                   return ok;
                 }});
  out.push_back({"sp", tag + "[x1 E1, y1 E1] = [x1, y1] E1", false, "holds as [x1 E1, y1 E1] = [x1, y1] h0", [=] {
                   bool ok = true;
                   for (const auto& a : imag)
                     for (const auto& b : imag)
                       ok = ok && same(br(el(a, zq, zero, zero), el(b, zq, zero, zero)), along("h0.", lie(a, b)));
                   return ok;
                 }});
  out.push_back({"sp", tag + "[x2 E2, y2 E2] = eps [x2, y2] h0", true, "", [=] {
                   bool ok = true;
                   for (const auto& a : imag)
                     for (const auto& b : imag)
                       ok = ok && same(br(el(zq, a, zero, zero), el(zq, b, zero, zero)),
                                       scaled(along("h0.", lie(a, b)), e));
                   return ok;
                 }});

  const auto lhs = [=] { return mod_block(*l, br(el(zq, zq, X1, X2), el(zq, zq, Y1, Y2))); };
  const Quaternion r11 = q_hermitian(X1, Y1), r22 = q_hermitian(X2, Y2);
  const Quaternion r21 = q_hermitian(X2, Y1), r12 = q_hermitian(Y2, X1);
  out.push_back({"sp", tag + "[(0,0,X1,X2), (0,0,Y1,Y2)]: h0 and E1 components", true, "", [=] {
                   const auto v = lhs();
                   const auto h0 = along("h0.", (r11 * e + r22) * Rational(-1));
                   const auto e1 = along("x1.", r22 - r11 * e);
                   bool ok = true;
                   for (std::size_t u = 1; u < 4; ++u) {
                     const auto ih = l->algebra.index_of(std::string("h0.") + kUnit[u]);
                     const auto ie = l->algebra.index_of(std::string("x1.") + kUnit[u]);
                     ok = ok && v[ih] == h0[ih] && v[ie] == e1[ie];
                   }
                   return ok;
                 }});
  out.push_back({"sp", tag + "[(0,0,X1,X2), (0,0,Y1,Y2)] full bracket mod sp(n-1)", false,
                 "h1 coefficient is -(g(X2,Y1) - g(Y2,X1)); an E2 term -(rho(X2,Y1) - rho(Y2,X1)) is added", [=] {
                   RationalVector rhs = scaled(l->element("h1"), -(r21.c[0] - r12.c[0]));
                   rhs = add(rhs, along("h0.", (r11 * e + r22) * Rational(-1)));
                   rhs = add(rhs, along("x1.", r22 - r11 * e));
                   rhs = add(rhs, along("x2.", (r21 - r12) * Rational(-1)));
                   return same(lhs(), rhs);
                 }});
  out.push_back({"sp", tag + "[x1 E1, (0,0,X1,X2)] = (0,0,-X1 x1, X2 x1)", true, "", [=] {
                   return same(br(el(x1, zq, zero, zero), el(zq, zq, X1, X2)),
                               el(zq, zq, right_times(X1, x1, -1), right_times(X2, x1)));
                 }});
  out.push_back({"sp", tag + "[x2 E2, (0,0,X1,X2)] = (0,0,-X2 x2, -eps X1 x2)", true, "", [=] {
                   return same(br(el(zq, x2, zero, zero), el(zq, zq, X1, X2)),
                               el(zq, zq, right_times(X2, x2, -1), right_times(X1, x2, -e)));
                 }});
  out.push_back({"sp", tag + "ad (a h0) (x1,x2,X1,X2) = ([a,x1], [a,x2], -X1 a, -X2 a)", true, "", [=] {
                   bool ok = true;
                   for (const auto& a : imag)
                     ok = ok && same(br(along("h0.", a), el(x1, x2, X1, X2)),
                                     el(lie(a, x1), lie(a, x2), right_times(X1, a, -1), right_times(X2, a, -1)));
                   return ok;
                 }});
  out.push_back({"sp", tag + "ad h1 (x1,x2,X1,X2) = (-2 eps x2, 2 x1, -X2, eps X1)", true, "", [=] {
                   QVec mx2;
                   for (const auto& x : X2) mx2.push_back(-x);
                   return same(br(l->element("h1"), el(x1, x2, X1, X2)),
                               el(x2 * (-2 * e), x1 * Rational(2), mx2, right_times(X1, q(1, 0, 0, 0), e)));
                 }});
  out.push_back({"sp", tag + "ad A (x1,x2,X1,X2) = (0,0,A X1, A X2) for A in sp(n-1)", true, "", [=] {
                   const auto a = random_block_element(*l);
                   const auto m = l->matrix_of(a);
                   return same(br(a, el(x1, x2, X1, X2)), el(zq, zq, apply_qblock(m, X1), apply_qblock(m, X2)));
                 }});
}

// ---- constant curvature ---------------------------------------------------

RationalVector metric_diagonal(int p, int q) {
  RationalVector g;
  for (int i = 0; i < p; ++i) g.emplace_back(1);
  for (int i = 0; i < q; ++i) g.emplace_back(-1);
  return g;
}

// Coordinates of (a b^T - b a^T) G.
RationalVector bivector(const LabeledAlgebra& l, const RationalVector& a, const RationalVector& b,
                        const RationalVector& metric) {
  const std::size_t n = metric.size();
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = (a[i] * b[j] - b[i] * a[j]) * metric[j];
  return l.coordinates_of(m);
}

Rational inner(const RationalVector& a, const RationalVector& b, const RationalVector& metric) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i] * metric[i];
  return s;
}

void add_so(std::vector<GoldenIdentity>& out, int p, int q) {
  auto l = std::make_shared<LabeledAlgebra>(build_so(p, q));
  const auto metric = metric_diagonal(p, q);
  const std::size_t n = metric.size();
  const std::string tag = "so(" + std::to_string(p) + "," + std::to_string(q) + "): ";
  auto v = [n](std::size_t i) { return unit_vector(n, i); };

  out.push_back({"so", tag + "(a^b) x = <b,x> a - <a,x> b", true, "", [=] {
                   for (std::size_t i = 0; i < n; ++i)
                     for (std::size_t j = i + 1; j < n; ++j)
                       for (std::size_t k = 0; k < n; ++k) {
                         const auto m = l->matrix_of(bivector(*l, v(i), v(j), metric));
                         const auto rhs = sub(scaled(v(i), inner(v(j), v(k), metric)),
                                              scaled(v(j), inner(v(i), v(k), metric)));
                         if (m.apply(v(k)) != rhs) return false;
                       }
                   return true;
                 }});

  for (const auto& [split, e1] : {std::pair<std::string, std::size_t>{"+", 1}, {"-", static_cast<std::size_t>(p)}}) {
    if (split == "+" && p < 2) continue;
    if (split == "-" && q < 1) continue;
    const std::size_t e = 0;
    std::vector<std::size_t> rest;
    for (std::size_t a = 0; a < n; ++a)
      if (a != e && a != e1) rest.push_back(a);
    const Rational sign = metric[e1];
    auto br = [l](const RationalVector& a, const RationalVector& b) { return l->algebra.bracket(a, b); };
    auto w = [=](std::size_t a, std::size_t b) { return bivector(*l, v(a), v(b), metric); };
    const auto ee1 = w(e, e1);
    out.push_back({"so", tag + "ad(e^e1" + split + ") e(x)x = -e1(x)x", true, "", [=] {
                     for (auto x : rest)
                       if (br(ee1, w(e, x)) != scaled(w(e1, x), -1)) return false;
                     return true;
                   }});
    out.push_back({"so", tag + "ad(e^e1" + split + ") e1(x)x = " + split + "e(x)x", true, "", [=] {
                     for (auto x : rest)
                       if (br(ee1, w(e1, x)) != scaled(w(e, x), sign)) return false;
                     return l->subspace("h" + split).contains(ee1);
                   }});
    out.push_back({"so", tag + "ad(a^b) e'(x)x = e'(x)(a^b)x on V" + split, true, "", [=] {
                     for (auto a : rest)
                       for (auto b : rest) {
                         if (a >= b) continue;
                         for (auto x : rest)
                           for (auto ep : {e, e1}) {
                             const auto ax = sub(scaled(v(a), inner(v(b), v(x), metric)),
                                                 scaled(v(b), inner(v(a), v(x), metric)));
                             if (br(w(a, b), w(ep, x)) != bivector(*l, v(ep), ax, metric)) return false;
                           }
                       }
                     return true;
                   }});
  }
}

// ---- flat case --------------------------------------------------------------

void add_e(std::vector<GoldenIdentity>& out, int p1, int q) {
  auto l = std::make_shared<LabeledAlgebra>(build_e(p1, q));
  const std::size_t k = static_cast<std::size_t>(p1 - 1 + q);
  const auto gw = metric_diagonal(p1 - 1, q);
  const std::string tag = "e(" + std::to_string(p1) + "," + std::to_string(q) + "): ";
  auto uw = [l, k](const RationalVector& u, const RationalVector& w) {
    RationalVector v(l->algebra.dim());
    for (std::size_t a = 0; a < k; ++a) {
      v[l->algebra.index_of("u" + std::to_string(a))] += u[a];
      v[l->algebra.index_of("t" + std::to_string(a))] += w[a];
    }
    return v;
  };
  // u ^ u' in so(W), as (u u'^T - u' u^T) G_W in the top-left block
  auto wedge = [l, k, gw](const RationalVector& a, const RationalVector& b) {
    RationalMatrix m(k + 2, k + 2);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m(i, j) = (a[i] * b[j] - b[i] * a[j]) * gw[j];
    return l->coordinates_of(m);
  };
  auto br = [l](const RationalVector& a, const RationalVector& b) { return l->algebra.bracket(a, b); };
  const auto& e0 = l->element("e0");
  const RationalVector u{make_rational(1, 2), -1, 3}, w{2, 0, make_rational(-1, 3)};
  const RationalVector u2{0, 1, -2}, w2{1, 1, 1};
  auto cut = [k](RationalVector x) {
    x.resize(k);
    return x;
  };

  const std::string metric_note = q > 0 ? "dot read as the metric g^W; the U-row is -u^T G_W" : "";
  out.push_back({"e", tag + "[(u,0), (0,w)] = -(u.w) e0 for u = w = first basis vector", q == 0, metric_note, [=] {
                   const auto b = unit_vector(k, 0);
                   return br(uw(b, RationalVector(k)), uw(RationalVector(k), b)) == scaled(e0, -gw[0]);
                 }});
  out.push_back({"e", tag + "[(u,w), (u',w')] = -(u^u', (u.w' - u'.w) e0)", q == 0, metric_note, [=] {
                   const auto a = cut(u), b = cut(u2), c = cut(w), d = cut(w2);
                   const auto rhs =
                       scaled(add(wedge(a, b), scaled(e0, inner(a, d, gw) - inner(b, c, gw))), -1);
                   return br(uw(a, c), uw(b, d)) == rhs;
                 }});
  out.push_back({"e", tag + "ad (A, lambda e0) (u,w) = (Au, Aw + lambda u)", false,
                 "holds as (Au, Aw - lambda u), matching the displayed matrix of lambda ad e0", [=] {
                   const auto a = cut(u), c = cut(w);
                   RationalVector A(l->algebra.dim());
                   for (std::size_t i = 0; i < l->algebra.dim(); ++i)
                     if (l->algebra.label(i)[0] == 'w') A[i] = make_rational(static_cast<long>(i % 3) - 1, 2);
                   const Rational lambda = make_rational(5, 4);
                   const auto m = l->matrix_of(A);
                   auto act = [&](const RationalVector& x) {
                     RationalVector y(k);
                     for (std::size_t i = 0; i < k; ++i)
                       for (std::size_t j = 0; j < k; ++j) y[i] += m(i, j) * x[j];
                     return y;
                   };
                   const auto lhs = br(add(A, scaled(e0, lambda)), uw(a, c));
                   return lhs == uw(act(a), sub(act(c), scaled(a, lambda)));
                 }});
}

}  // namespace

std::vector<GoldenIdentity> golden_identities() {
  std::vector<GoldenIdentity> out;
  add_e(out, 3, 0);
  add_e(out, 2, 1);
  add_so(out, 5, 0);
  add_so(out, 3, 2);
  add_su(out, 1);
  add_su(out, -1);
  add_sp(out, 1);
  add_sp(out, -1);
  return out;
}

}  // namespace geostruct
