#include "geostruct/catalog.hpp"

namespace geostruct {

namespace {

// (a b^T - b a^T) G for basis vectors a = v_i, b = v_j of a diagonal metric.
RationalMatrix wedge(std::size_t n, std::size_t i, std::size_t j, const RationalVector& metric,
                     std::size_t offset = 0, std::size_t size = 0) {
  if (size == 0) size = n;
  RationalMatrix m(size, size);
  m(offset + i, offset + j) = metric[j];
  m(offset + j, offset + i) = -metric[i];
  return m;
}

std::string wedge_label(const std::string& prefix, std::size_t i, std::size_t j) {
  return prefix + std::to_string(i) + "^" + prefix + std::to_string(j);
}

RationalVector diagonal_metric(int p, int q) {
  RationalVector g;
  for (int i = 0; i < p; ++i) g.emplace_back(1);
  for (int i = 0; i < q; ++i) g.emplace_back(-1);
  return g;
}

// h = R(e^e1) + L^2 V and m = e^V + e1^V for the plane spanned by v_e, v_e1.
void add_geodesic_split(LabeledAlgebra& out, std::size_t n, std::size_t e, std::size_t e1, const std::string& tag) {
  const auto& g = out.algebra;
  auto index = [&](std::size_t a, std::size_t b) {
    return a < b ? g.index_of(wedge_label("v", a, b)) : g.index_of(wedge_label("v", b, a));
  };
  auto bivector = [&](std::size_t a, std::size_t b) {
    RationalVector v(g.dim());
    v[index(a, b)] = a < b ? 1 : -1;
    return v;
  };
  std::vector<std::size_t> complement;
  for (std::size_t a = 0; a < n; ++a)
    if (a != e && a != e1) complement.push_back(a);

  std::vector<RationalVector> h{bivector(e, e1)}, m;
  for (std::size_t x = 0; x < complement.size(); ++x)
    for (std::size_t y = x + 1; y < complement.size(); ++y) h.push_back(bivector(complement[x], complement[y]));
  for (auto a : complement) m.push_back(bivector(e, a));
  for (auto a : complement) m.push_back(bivector(e1, a));

  out.named_elements["e^e1" + tag] = bivector(e, e1);
  out.named_subspaces["h" + tag] = Subspace(g.dim(), std::move(h));
  out.named_subspaces["m" + tag] = Subspace(g.dim(), std::move(m));
}

}  // namespace

LabeledAlgebra build_so(int p, int q) {
  if (p < 0 || q < 0 || p + q < 2) throw std::invalid_argument("build_so needs p, q >= 0 and p + q >= 2");
  const std::size_t n = static_cast<std::size_t>(p + q);
  const auto metric = diagonal_metric(p, q);
  std::vector<std::string> labels;
  std::vector<RationalMatrix> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      labels.push_back(wedge_label("v", i, j));
      basis.push_back(wedge(n, i, j, metric));
    }
  LabeledAlgebra out = algebra_from_matrices(std::move(labels), std::move(basis));
  if (p >= 2 && n >= 3) add_geodesic_split(out, n, 0, 1, "+");
  if (p >= 1 && q >= 1 && n >= 3) add_geodesic_split(out, n, 0, static_cast<std::size_t>(p), "-");
  return out;
}

LabeledAlgebra build_e(int p1, int q) {
  if (p1 < 1 || q < 0 || p1 + q < 2) throw std::invalid_argument("build_e needs p1 >= 1, q >= 0, p1 + q >= 2");
  const std::size_t k = static_cast<std::size_t>(p1 - 1 + q);
  const std::size_t size = k + 2;
  const auto metric = diagonal_metric(p1 - 1, q);

  std::vector<std::string> labels;
  std::vector<RationalMatrix> basis;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      labels.push_back(wedge_label("w", i, j));
      basis.push_back(wedge(k, i, j, metric, 0, size));
    }
  labels.emplace_back("e0");
  RationalMatrix e0(size, size);
  e0(k, k + 1) = 1;
  basis.push_back(e0);
  for (std::size_t a = 0; a < k; ++a) {
    RationalMatrix u(size, size);
    u(a, k) = 1;
    u(k, a) = -metric[a];
    labels.push_back("u" + std::to_string(a));
    basis.push_back(u);
  }
  for (std::size_t a = 0; a < k; ++a) {
    RationalMatrix w(size, size);
    w(a, k + 1) = 1;
    labels.push_back("t" + std::to_string(a));
    basis.push_back(w);
  }
  LabeledAlgebra out = algebra_from_matrices(std::move(labels), std::move(basis));
  const std::size_t d = out.algebra.dim();
  const std::size_t h_dim = k * (k - 1) / 2 + 1;
  std::vector<RationalVector> h, u, w;
  for (std::size_t i = 0; i < h_dim; ++i) h.push_back(unit_vector(d, i));
  for (std::size_t a = 0; a < k; ++a) u.push_back(unit_vector(d, h_dim + a));
  for (std::size_t a = 0; a < k; ++a) w.push_back(unit_vector(d, h_dim + k + a));
  std::vector<RationalVector> m = u;
  m.insert(m.end(), w.begin(), w.end());
  out.named_elements["e0"] = unit_vector(d, h_dim - 1);
  out.named_subspaces["h"] = Subspace(d, std::move(h));
  out.named_subspaces["U"] = Subspace(d, std::move(u));
  out.named_subspaces["W"] = Subspace(d, std::move(w));
  out.named_subspaces["m"] = Subspace(d, std::move(m));
  return out;
}

}  // namespace geostruct
