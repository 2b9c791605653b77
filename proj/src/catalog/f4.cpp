#include "geostruct/catalog.hpp"

#include <cmath>
#include <functional>

namespace geostruct {

namespace {

constexpr std::size_t kJ = JordanElement::kDim;

// Derivations as the kernel of D(x o y) = Dx o y + x o Dy over basis pairs.
// Unknown D(r, c) sits at index r * 27 + c.
std::vector<RationalMatrix> jordan_derivations() {
  std::vector<std::vector<RationalVector>> product(kJ, std::vector<RationalVector>(kJ));
  for (std::size_t a = 0; a < kJ; ++a)
    for (std::size_t b = a; b < kJ; ++b) {
      product[a][b] = jordan_product(JordanElement::basis(a), JordanElement::basis(b)).coordinates();
      product[b][a] = product[a][b];
    }

  LinearSystem sys(kJ * kJ);
  for (std::size_t i = 0; i < kJ; ++i)
    for (std::size_t j = i; j < kJ; ++j)
      for (std::size_t r = 0; r < kJ; ++r) {
        LinearSystem::Row row;
        for (std::size_t k = 0; k < kJ; ++k)
          if (sgn(product[i][j][k]) != 0) row.emplace_back(r * kJ + k, product[i][j][k]);
        for (std::size_t l = 0; l < kJ; ++l) {
          if (sgn(product[l][j][r]) != 0) row.emplace_back(l * kJ + i, -product[l][j][r]);
          if (sgn(product[i][l][r]) != 0) row.emplace_back(l * kJ + j, -product[i][l][r]);
        }
        sys.add_row(std::move(row));
      }

  std::vector<RationalMatrix> out;
  for (auto& v : kernel_basis(sys)) out.push_back(unflatten(v, kJ, kJ));
  return out;
}

bool is_rational_square(const Rational& q) {
  if (sgn(q) < 0) return false;
  return mpz_perfect_square_p(q.get_num().get_mpz_t()) != 0 && mpz_perfect_square_p(q.get_den().get_mpz_t()) != 0;
}

// Small integer combinations of the p basis, ordered by l1 norm and then
// lexicographically, so the choice is deterministic.
std::vector<std::vector<int>> small_coefficients(std::size_t n, int max_norm) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(n, 0);
  for (int norm = 1; norm <= max_norm; ++norm) {
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
      if (i == n) {
        if (left == 0) out.push_back(c);
        return;
      }
      for (int v = -left; v <= left; ++v) {
        c[i] = v;
        rec(i + 1, left - std::abs(v));
      }
      c[i] = 0;
    };
    rec(0, norm);
  }
  return out;
}

}  // namespace

LabeledAlgebra build_f4() {
  auto derivations = jordan_derivations();
  if (derivations.size() != 52)
    throw std::runtime_error("Jordan derivation algebra has dimension " + std::to_string(derivations.size()) +
                             ", expected 52");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < derivations.size(); ++i) labels.push_back("d" + std::to_string(i));
  LabeledAlgebra out = algebra_from_matrices(std::move(labels), std::move(derivations));
  const auto& g = out.algebra;
  const std::size_t d = g.dim();

  // stab(E11): sum_i x_i D_i e_0 = 0
  LinearSystem stab_sys(d);
  for (std::size_t r = 0; r < kJ; ++r) {
    LinearSystem::Row row;
    for (std::size_t i = 0; i < d; ++i)
      if (sgn(out.basis_matrices[i](r, 0)) != 0) row.emplace_back(i, out.basis_matrices[i](r, 0));
    stab_sys.add_row(std::move(row));
  }
  Subspace stab(d, kernel_basis(stab_sys));
  const RationalMatrix b = killing(g);
  Subspace p = orthogonal_complement(b, stab);

  // h1 in p with -B(h1, h1) / 72 a rational square, so that the grading
  // eigenvalues of ad h1 are rational multiples of i.  Every nonzero element
  // of p has the same 22-dimensional centralizer type (rank one).
  RationalVector h1;
  for (const auto& coeffs : small_coefficients(p.dim(), 3)) {
    RationalVector v(d);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) v = add(v, scaled(p[i], coeffs[i]));
    const Rational tau2 = -dot(v, b.apply(v)) / 72;
    if (!is_rational_square(tau2)) continue;
    if (centralizer(g, Subspace(d, {v})).dim() != 22) continue;
    h1 = std::move(v);
    break;
  }
  if (h1.empty()) throw std::runtime_error("no grading element with rational scale found in p");

  Subspace h = centralizer(g, Subspace(d, {h1}));
  Subspace l = orthogonal_complement(b, h);
  out.named_elements["h1"] = h1;
  out.named_subspaces["stab"] = std::move(stab);
  out.named_subspaces["p"] = std::move(p);
  out.named_subspaces["h"] = std::move(h);
  out.named_subspaces["l"] = std::move(l);
  return out;
}

Rational f4_tau_squared(const LabeledAlgebra& f4) {
  const auto& h1 = f4.element("h1");
  return -dot(h1, killing(f4.algebra).apply(h1)) / 72;
}

}  // namespace geostruct
