#include "geostruct/catalog.hpp"
#include "realify.hpp"

namespace geostruct {

using detail::ComplexMatrix;
using detail::Quaternion;
using detail::QuaternionMatrix;

namespace {

// n and epsilon for the two supported real forms: (n+1, 0) and (1, n).
std::pair<std::size_t, int> rank_one_form(int p, int q, const char* name) {
  if (p + q < 2) throw std::invalid_argument(std::string(name) + " needs p + q >= 2");
  if (q == 0) return {static_cast<std::size_t>(p - 1), 1};
  if (p == 1) return {static_cast<std::size_t>(q), -1};
  throw std::invalid_argument(std::string(name) + " supports the compact form (n+1, 0) and the form (1, n) only");
}

RationalVector combo(std::size_t d, std::initializer_list<std::pair<std::size_t, int>> terms) {
  RationalVector v(d);
  for (const auto& [i, c] : terms) v[i] += c;
  return v;
}

}  // namespace

LabeledAlgebra build_su(int p, int q) {
  const auto [n, eps] = rank_one_form(p, q, "build_su");
  const std::size_t size = n + 1;
  const std::size_t r = n - 1;  // size of the lower-right block
  std::vector<std::string> labels;
  std::vector<RationalMatrix> basis;
  auto add = [&](std::string label, const ComplexMatrix& m) {
    labels.push_back(std::move(label));
    basis.push_back(m.realify());
  };

  // h = R h0 + R h1 + su(n-1)
  if (n >= 2) {
    ComplexMatrix h0(size);
    h0.set(0, 0, 0, 1);
    h0.set(1, 1, 0, 1);
    for (std::size_t a = 0; a < r; ++a) h0.set(2 + a, 2 + a, 0, make_rational(-2, static_cast<long>(r)));
    add("h0", h0);
  }
  ComplexMatrix h1(size);
  h1.set(0, 1, -eps, 0);
  h1.set(1, 0, 1, 0);
  add("h1", h1);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b) {
      ComplexMatrix re(size), im(size);
      re.set(2 + a, 2 + b, 1, 0);
      re.set(2 + b, 2 + a, -1, 0);
      im.set(2 + a, 2 + b, 0, 1);
      im.set(2 + b, 2 + a, 0, 1);
      add("A" + std::to_string(a) + std::to_string(b) + ".re", re);
      add("A" + std::to_string(a) + std::to_string(b) + ".im", im);
    }
  for (std::size_t a = 0; a + 1 < r; ++a) {
    ComplexMatrix d(size);
    d.set(2 + a, 2 + a, 0, 1);
    d.set(3 + a, 3 + a, 0, -1);
    add("A" + std::to_string(a) + ".diag", d);
  }
  const std::size_t h_dim = labels.size();

  // l: (x1, x2, X1, X2) -> [[i x1, eps i x2, -eps X1^*], [i x2, -i x1, -X2^*], [X1, X2, 0]]
  ComplexMatrix e1(size), e2(size);
  e1.set(0, 0, 0, 1);
  e1.set(1, 1, 0, -1);
  e2.set(0, 1, 0, eps);
  e2.set(1, 0, 0, 1);
  add("x1", e1);
  add("x2", e2);
  for (int block = 0; block < 2; ++block)
    for (std::size_t a = 0; a < r; ++a) {
      const std::size_t col = static_cast<std::size_t>(block);
      const int top = block == 0 ? -eps : -1;  // coefficient of X^* in the top rows
      ComplexMatrix re(size), im(size);
      re.set(2 + a, col, 1, 0);
      re.set(col, 2 + a, top, 0);
      im.set(2 + a, col, 0, 1);
      im.set(col, 2 + a, 0, -top);  // conj(i) = -i
      const std::string name = "X" + std::to_string(block + 1) + "[" + std::to_string(a) + "]";
      add(name + ".re", re);
      add(name + ".im", im);
    }

  LabeledAlgebra out = algebra_from_matrices(std::move(labels), std::move(basis));
  const std::size_t d = out.algebra.dim();
  const auto& g = out.algebra;
  std::vector<RationalVector> h, l, v0, vp, vm;
  for (std::size_t i = 0; i < h_dim; ++i) h.push_back(unit_vector(d, i));
  for (std::size_t i = h_dim; i < d; ++i) l.push_back(unit_vector(d, i));
  const std::size_t x1 = g.index_of("x1"), x2 = g.index_of("x2");
  v0 = {unit_vector(d, x1), unit_vector(d, x2)};
  // V+ and V- are the eigenspaces of ad h1 on the X block: i and -i when
  // epsilon = 1, that is (X, -iX) and (X, iX); +1 and -1 when epsilon = -1,
  // that is (X, -X) and (X, X).
  for (std::size_t a = 0; a < r; ++a) {
    auto at = [&](const char* block, const char* part) {
      return g.index_of(std::string(block) + "[" + std::to_string(a) + "]" + part);
    };
    const std::size_t re1 = at("X1", ".re"), im1 = at("X1", ".im"), re2 = at("X2", ".re"), im2 = at("X2", ".im");
    if (eps == 1) {
      vp.push_back(combo(d, {{re1, 1}, {im2, -1}}));
      vp.push_back(combo(d, {{im1, 1}, {re2, 1}}));
      vm.push_back(combo(d, {{re1, 1}, {im2, 1}}));
      vm.push_back(combo(d, {{im1, 1}, {re2, -1}}));
    } else {
      vp.push_back(combo(d, {{re1, 1}, {re2, -1}}));
      vp.push_back(combo(d, {{im1, 1}, {im2, -1}}));
      vm.push_back(combo(d, {{re1, 1}, {re2, 1}}));
      vm.push_back(combo(d, {{im1, 1}, {im2, 1}}));
    }
  }
  if (n >= 2) out.named_elements["h0"] = unit_vector(d, g.index_of("h0"));
  out.named_elements["h1"] = unit_vector(d, g.index_of("h1"));
  out.named_elements["E1"] = unit_vector(d, x1);
  out.named_elements["E2"] = unit_vector(d, x2);
  if (eps == -1) {
    out.named_elements["E+"] = combo(d, {{x1, 1}, {x2, 1}});
    out.named_elements["E-"] = combo(d, {{x1, 1}, {x2, -1}});
  }
  out.named_subspaces["h"] = Subspace(d, std::move(h));
  out.named_subspaces["l"] = Subspace(d, std::move(l));
  out.named_subspaces["V0"] = Subspace(d, std::move(v0));
  out.named_subspaces["V+"] = Subspace(d, std::move(vp));
  out.named_subspaces["V-"] = Subspace(d, std::move(vm));
  return out;
}

LabeledAlgebra build_sp(int p, int q) {
  const auto [n, eps] = rank_one_form(p, q, "build_sp");
  const std::size_t size = n + 1;
  const std::size_t r = n - 1;
  static const char* kUnits[] = {"1", "i", "j", "k"};
  std::vector<std::string> labels;
  std::vector<RationalMatrix> basis;
  auto add = [&](std::string label, const QuaternionMatrix& m) {
    labels.push_back(std::move(label));
    basis.push_back(m.realify());
  };

  // h = Im(H) h0 + R h1 + sp(n-1)
  for (std::size_t u = 1; u < 4; ++u) {
    QuaternionMatrix m(size);
    m(0, 0) = Quaternion::unit(u);
    m(1, 1) = Quaternion::unit(u);
    add(std::string("h0.") + kUnits[u], m);
  }
  QuaternionMatrix h1(size);
  h1(0, 1) = Quaternion::unit(0) * Rational(-eps);
  h1(1, 0) = Quaternion::unit(0);
  add("h1", h1);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b)
      for (std::size_t u = 0; u < 4; ++u) {
        QuaternionMatrix m(size);
        m(2 + a, 2 + b) = Quaternion::unit(u);
        m(2 + b, 2 + a) = -Quaternion::unit(u).conj();
        add("A" + std::to_string(a) + std::to_string(b) + "." + kUnits[u], m);
      }
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t u = 1; u < 4; ++u) {
      QuaternionMatrix m(size);
      m(2 + a, 2 + a) = Quaternion::unit(u);
      add("A" + std::to_string(a) + "." + kUnits[u], m);
    }
  const std::size_t h_dim = labels.size();

  // l: (x1, x2, X1, X2) -> [[x1, eps x2, -eps X1^*], [x2, -x1, -X2^*], [X1, X2, 0]]
  for (std::size_t u = 1; u < 4; ++u) {
    QuaternionMatrix m(size);
    m(0, 0) = Quaternion::unit(u);
    m(1, 1) = -Quaternion::unit(u);
    add(std::string("x1.") + kUnits[u], m);
  }
  for (std::size_t u = 1; u < 4; ++u) {
    QuaternionMatrix m(size);
    m(0, 1) = Quaternion::unit(u) * Rational(eps);
    m(1, 0) = Quaternion::unit(u);
    add(std::string("x2.") + kUnits[u], m);
  }
  for (int block = 0; block < 2; ++block)
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t u = 0; u < 4; ++u) {
        const std::size_t col = static_cast<std::size_t>(block);
        const int top = block == 0 ? -eps : -1;
        QuaternionMatrix m(size);
        m(2 + a, col) = Quaternion::unit(u);
        m(col, 2 + a) = Quaternion::unit(u).conj() * Rational(top);
        add("X" + std::to_string(block + 1) + "[" + std::to_string(a) + "]." + kUnits[u], m);
      }

  LabeledAlgebra out = algebra_from_matrices(std::move(labels), std::move(basis));
  const std::size_t d = out.algebra.dim();
  const auto& g = out.algebra;
  std::vector<RationalVector> h, l, v0, v1;
  for (std::size_t i = 0; i < h_dim; ++i) h.push_back(unit_vector(d, i));
  for (std::size_t i = h_dim; i < d; ++i) {
    l.push_back(unit_vector(d, i));
    (g.label(i)[0] == 'x' ? v0 : v1).push_back(unit_vector(d, i));
  }
  for (std::size_t u = 1; u < 4; ++u) {
    out.named_elements[std::string("h0.") + kUnits[u]] = unit_vector(d, g.index_of(std::string("h0.") + kUnits[u]));
    out.named_elements[std::string("x1.") + kUnits[u]] = unit_vector(d, g.index_of(std::string("x1.") + kUnits[u]));
    out.named_elements[std::string("x2.") + kUnits[u]] = unit_vector(d, g.index_of(std::string("x2.") + kUnits[u]));
  }
  out.named_elements["h1"] = unit_vector(d, g.index_of("h1"));
  out.named_subspaces["h"] = Subspace(d, std::move(h));
  out.named_subspaces["l"] = Subspace(d, std::move(l));
  out.named_subspaces["V0"] = Subspace(d, std::move(v0));
  if (!v1.empty()) out.named_subspaces["V1"] = Subspace(d, std::move(v1));
  return out;
}

}  // namespace geostruct
