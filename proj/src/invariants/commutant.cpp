#include "geostruct/invariants.hpp"

#include <random>

namespace geostruct {

namespace {

RationalPolynomial mod(const RationalPolynomial& a, const RationalPolynomial& f) { return divmod(a, f).second; }

RationalPolynomial power(const RationalPolynomial& p, int k) {
  RationalPolynomial out{Rational(1)};
  for (int i = 0; i < k; ++i) out = out * p;
  return out;
}

bool is_rational_square(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  mpz_class n = q.get_num(), d = q.get_den();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Rational(rn, rd);
  root.canonicalize();
  return true;
}

// One local component Q[t]/(p^k) of the commutant, with its idempotent and
// the residue-field square root of eps (r with r^2 = eps mod p), if any.
struct Component {
  RationalPolynomial idempotent;
  std::optional<RationalPolynomial> root;
  bool complex = false;
};

std::size_t rank_of(const RationalMatrix& a) { return rank(a); }

StructureCandidate make_candidate(const RationalMatrix& i, int eps) {
  StructureCandidate c;
  c.endo = i;
  c.epsilon = eps;
  if (eps == 1) {
    const std::size_t n = i.rows();
    const auto id = RationalMatrix::identity(n);
    c.plus_dim = n - rank_of(i - id);
    c.minus_dim = n - rank_of(i + id);
  }
  return c;
}

void file_candidate(SquareRoots& out, StructureCandidate c) {
  if (c.epsilon == 1 && c.plus_dim != c.minus_dim)
    out.product_structures.push_back(std::move(c));
  else
    out.structures.push_back(std::move(c));
}

// Newton iteration I <- (I + eps I^-1) / 2.  Starting from a root modulo the
// radical of a commutative algebra the error is nilpotent and squares at each
// step, so the loop ends with an exact root.
RationalMatrix lift_root(RationalMatrix i, int eps) {
  const std::size_t n = i.rows();
  const auto target = RationalMatrix::identity(n) * Rational(eps);
  for (int step = 0; step < 64; ++step) {
    if (i * i == target) return i;
    i = (i + inverse(i) * Rational(eps)) * Rational(1, 2);
  }
  throw std::logic_error("square root lift did not terminate");
}

// Commutant not commutative and cyclic: look for small-coefficient roots.
SquareRoots search_roots(const CommutantAlgebra& c, int eps) {
  SquareRoots out;
  const std::size_t k = c.dim();
  RationalVector target(k);
  target[c.unity] = eps;
  const int bound = k <= 5 ? 2 : 1;
  std::vector<RationalVector> found;
  scan_small_integer_vectors(k, bound, [&](const std::vector<int>& coef) {
    RationalVector v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = coef[i];
    if (c.multiply(v, v) != target) return false;
    if (eps == 1 && (v == unit_vector(k, c.unity) || v == scaled(unit_vector(k, c.unity), -1))) return false;
    for (const auto& f : found)
      if (f == scaled(v, -1)) return false;
    found.push_back(v);
    return false;
  });
  if (found.empty()) throw NoSolution("no square root of " + std::to_string(eps) + " among small combinations");
  for (const auto& v : found) file_candidate(out, make_candidate(c.element(v), eps));
  const auto& rep = out.structures.empty() ? out.product_structures.front() : out.structures.front();
  out.family = FamilyDescriptor{rep, tangent_dimension(c, rep.endo)};
  return out;
}

}  // namespace

bool CommutantAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (table[i * dim() + j] != table[j * dim() + i]) return false;
  return true;
}

RationalVector CommutantAlgebra::coordinates_of(const RationalMatrix& t) const {
  const auto flat = t.entries();
  RationalVector picked(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) picked[i] = flat[positions[i]];
  auto c = solver.apply(picked);
  if (!(element(c) == t)) throw std::domain_error("endomorphism is outside the algebra");
  return c;
}

RationalMatrix CommutantAlgebra::element(const RationalVector& c) const {
  RationalMatrix m(basis.front().rows(), basis.front().cols());
  for (std::size_t i = 0; i < c.size(); ++i)
    if (sgn(c[i]) != 0) m += basis[i] * c[i];
  return m;
}

RationalVector CommutantAlgebra::multiply(const RationalVector& a, const RationalVector& b) const {
  RationalVector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (sgn(b[j]) == 0) continue;
      out = add(out, scaled(table[i * dim() + j], a[i] * b[j]));
    }
  }
  return out;
}

CommutantAlgebra make_endomorphism_algebra(std::vector<RationalMatrix> generators) {
  if (generators.empty()) throw std::invalid_argument("empty endomorphism algebra");
  const std::size_t n = generators.front().rows();
  CommutantAlgebra c;
  c.basis.push_back(RationalMatrix::identity(n));
  std::vector<RationalVector> flat{flatten(c.basis.front())};
  for (auto& g : generators) {
    auto f = flatten(g);
    flat.push_back(f);
    if (span_rank(flat) == flat.size()) {
      c.basis.push_back(std::move(g));
    } else {
      flat.pop_back();
    }
  }
  const std::size_t k = c.basis.size();
  const auto r = rref(RationalMatrix::from_rows(flat, n * n));
  c.positions = r.pivots;
  RationalMatrix sub(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) sub(i, j) = flat[j][c.positions[i]];
  c.solver = inverse(sub);
  c.unity = 0;
  c.table.resize(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      try {
        c.table[i * k + j] = c.coordinates_of(c.basis[i] * c.basis[j]);
      } catch (const std::domain_error&) {
        throw std::invalid_argument("endomorphism span is not closed under composition");
      }
    }
  return c;
}

CommutantAlgebra commutant(const ReductiveSplit& s) {
  return make_endomorphism_algebra(invariant_tensors(s, TensorKind::Endo).elements);
}

std::size_t tangent_dimension(const CommutantAlgebra& c, const RationalMatrix& i) {
  std::vector<RationalVector> cols;
  for (const auto& b : c.basis) cols.push_back(c.coordinates_of(i * b + b * i));
  return c.dim() - rank(RationalMatrix::from_columns(cols, c.dim()));
}

SquareRoots square_roots(const CommutantAlgebra& c, int eps) {
  if (eps != 1 && eps != -1) throw std::invalid_argument("square_roots: eps must be +1 or -1");
  const std::size_t k = c.dim();
  if (!c.is_commutative()) return search_roots(c, eps);

  // a generic element generates a commutative cyclic algebra
  std::mt19937_64 rng(20240607);
  std::uniform_int_distribution<int> dist(-7, 7);
  RationalMatrix x;
  RationalPolynomial f;
  for (int attempt = 0; attempt < 6 && f.degree() != static_cast<int>(k); ++attempt) {
    RationalVector coef(k);
    for (auto& v : coef) v = dist(rng);
    x = c.element(coef);
    f = min_poly(x);
  }
  if (f.degree() != static_cast<int>(k)) return search_roots(c, eps);

  std::vector<Component> comps;
  for (const auto& [p, mult] : factor_low_degree(f)) {
    const auto q = power(p, mult);
    const auto cofactor = divmod(f, q).first;
    const auto eg = extended_gcd(cofactor, q);  // s * cofactor + t * q = 1
    Component comp;
    comp.idempotent = mod(eg.s * cofactor, f);
    if (p.degree() == 1) {
      if (eps == 1) comp.root = RationalPolynomial{Rational(1)};
    } else {
      // p = t^2 + b t + c0
      const Rational b = p.coefficient(1), c0 = p.coefficient(0);
      const Rational disc = b * b - 4 * c0;
      Rational s;
      if (sgn(disc) > 0 || !is_rational_square(-disc, s))
        throw IrrationalComponent("commutant component Q[t]/(" + p.to_string() + ") has no rational square roots");
      comp.complex = true;
      // (2t + b) / s squares to -1 modulo p
      comp.root = eps == 1 ? RationalPolynomial{Rational(1)}
                           : RationalPolynomial{b / s, Rational(2) / s};
    }
    if (!comp.root) throw NoSolution("I^2 = -Id has no solution: the commutant has a real component");
    comps.push_back(std::move(comp));
  }

  SquareRoots out;
  const std::size_t m = comps.size();
  // the first sign is fixed to +1 to count up to a global sign
  for (std::size_t mask = 0; mask < (std::size_t{1} << (m - 1)); ++mask) {
    RationalPolynomial r;
    bool all_plus = true;
    for (std::size_t i = 0; i < m; ++i) {
      const bool minus = i > 0 && ((mask >> (i - 1)) & 1);
      all_plus = all_plus && !minus;
      const auto term = mod(*comps[i].root * comps[i].idempotent, f);
      r = minus ? r - term : r + term;
    }
    if (eps == 1 && all_plus) continue;  // the identity
    file_candidate(out, make_candidate(lift_root(r.evaluate(x), eps), eps));
  }
  return out;
}

}  // namespace geostruct
