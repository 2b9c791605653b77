#include "geostruct/exactnum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace geostruct {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

RationalPolynomial::RationalPolynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
  trim();
}

RationalPolynomial RationalPolynomial::monomial(std::size_t degree, const Rational& c) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return RationalPolynomial(std::move(v));
}

void RationalPolynomial::trim() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

RationalPolynomial RationalPolynomial::monic() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no monic form");
  auto v = coeffs_;
  const Rational lead = leading();
  for (auto& c : v) c /= lead;
  return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RationalPolynomial(std::move(v));
}

Rational RationalPolynomial::evaluate(const Rational& x) const {
  Rational r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

RationalMatrix RationalPolynomial::evaluate(const RationalMatrix& a) const {
  if (!a.is_square()) throw std::invalid_argument("polynomial evaluation needs a square matrix");
  RationalMatrix r(a.rows(), a.cols());
  const auto id = RationalMatrix::identity(a.rows());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * a + id * *it;
  return r;
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coefficient(i) + b.coefficient(i);
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coefficient(i) - b.coefficient(i);
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RationalPolynomial(std::move(v));
}

std::string RationalPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    const Rational mag = abs(c);
    os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (mag != 1 || k == 0) os << mag.get_str() << (k ? "*" : "");
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {RationalPolynomial{}, a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int k = a.degree(); k >= db; --k) {
    const Rational f = r[static_cast<std::size_t>(k)] / b.leading();
    if (sgn(f) == 0) continue;
    q[static_cast<std::size_t>(k - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * b.coefficient(static_cast<std::size_t>(j));
  }
  return {RationalPolynomial(std::move(q)), RationalPolynomial(std::move(r))};
}

RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  return extended_gcd(a, b).g;
}

ExtendedGcd extended_gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
    auto t = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const RationalPolynomial inv{Rational(1) / r0.leading()};
  return {r0 * inv, s0 * inv, t0 * inv};
}

RationalPolynomial min_poly(const RationalMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("minimal polynomial needs a square matrix");
  const std::size_t n = a.rows();
  std::vector<RationalVector> powers;
  RationalMatrix p = RationalMatrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    RationalVector flat = flatten(p);
    RationalVector coords;
    if (!powers.empty() && solve_in_span(powers, flat, coords)) {
      std::vector<Rational> c(k + 1);
      for (std::size_t i = 0; i < k; ++i) c[i] = -coords[i];
      c[k] = 1;
      return RationalPolynomial(std::move(c));
    }
    if (powers.empty() && is_zero(flat)) return RationalPolynomial{1};
    powers.push_back(std::move(flat));
    p = p * a;
  }
  throw std::logic_error("no linear dependence among matrix powers");
}

namespace {

// Multiprecision complex arithmetic for the root finder.  Every value is
// created while the default mpf precision is raised, so it carries that
// precision.
struct Mpc {
  mpf_class re, im;
};

Mpc operator+(const Mpc& a, const Mpc& b) { return {a.re + b.re, a.im + b.im}; }
Mpc operator-(const Mpc& a, const Mpc& b) { return {a.re - b.re, a.im - b.im}; }
Mpc operator*(const Mpc& a, const Mpc& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Mpc operator/(const Mpc& a, const Mpc& b) {
  const mpf_class d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
mpf_class norm2(const Mpc& a) { return a.re * a.re + a.im * a.im; }

class PrecisionScope {
public:
  explicit PrecisionScope(mp_bitcnt_t bits) : saved_(mpf_get_default_prec()) { mpf_set_default_prec(bits); }
  ~PrecisionScope() { mpf_set_default_prec(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
  mp_bitcnt_t saved_;
};

long bit_size(const Rational& q) {
  if (sgn(q) == 0) return 0;
  return static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) - static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
}

// Durand-Kerner iteration for a monic square-free polynomial, lowest degree first.
std::vector<Mpc> approximate_roots(const std::vector<mpf_class>& monic, long bound_bits) {
  const std::size_t d = monic.size() - 1;
  mpf_class radius = 1;
  mpf_mul_2exp(radius.get_mpf_t(), radius.get_mpf_t(), static_cast<mp_bitcnt_t>(std::max(1L, bound_bits + 1)));
  const Mpc seed{mpf_class(0.4), mpf_class(0.9)};
  std::vector<Mpc> z(d);
  Mpc power{mpf_class(1), mpf_class(0)};
  for (std::size_t i = 0; i < d; ++i) {
    z[i] = {radius * power.re, radius * power.im};
    power = power * seed;
  }
  auto eval = [&](const Mpc& x) {
    Mpc r{mpf_class(0), mpf_class(0)};
    for (std::size_t k = monic.size(); k-- > 0;) r = r * x + Mpc{monic[k], mpf_class(0)};
    return r;
  };
  // stop once every correction is below radius * 2^-(prec - 32)
  mpf_class tol = radius;
  mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), mpf_get_default_prec() - 32);
  const mpf_class tol2 = tol * tol;
  for (int iter = 0; iter < 20000; ++iter) {
    bool small = true;
    for (std::size_t i = 0; i < d; ++i) {
      Mpc den{mpf_class(1), mpf_class(0)};
      for (std::size_t j = 0; j < d; ++j)
        if (j != i) den = den * (z[i] - z[j]);
      if (norm2(den) == 0) den.re += tol;
      const Mpc step = eval(z[i]) / den;
      z[i] = z[i] - step;
      if (norm2(step) > tol2) small = false;
    }
    if (small) break;
  }
  return z;
}

Integer nearest_integer(const mpf_class& x) {
  const mpf_class r = floor(x + mpf_class(0.5));
  return Integer(r);
}

bool divides(const RationalPolynomial& f, const RationalPolynomial& g) {
  return divmod(g, f).second.is_zero();
}

// Factors of a monic square-free integer polynomial of degree <= 8 into
// pieces of degree <= 2.  Candidates come from numerical roots and are
// confirmed by exact division.
std::vector<RationalPolynomial> split_integer_squarefree(RationalPolynomial q) {
  std::vector<RationalPolynomial> out;
  while (q.degree() > 0) {
    if (q.degree() <= 1) {
      out.push_back(q);
      break;
    }
    // roots are bounded by 2 max |c_k|^(1/(d-k)); products of two of them
    // must round exactly, so the precision covers twice the root size
    long bound_bits = 0, widest = 0;
    const long d = q.degree();
    for (long k = 0; k < d; ++k) {
      const long b = bit_size(q.coefficient(static_cast<std::size_t>(k)));
      widest = std::max(widest, b);
      bound_bits = std::max(bound_bits, (b + d - k - 1) / (d - k) + 1);
    }
    const PrecisionScope scope(static_cast<mp_bitcnt_t>(128 + 2 * widest + 4 * bound_bits));
    std::vector<mpf_class> c;
    for (const auto& x : q.coefficients()) c.emplace_back(x);
    const auto roots = approximate_roots(c, bound_bits);
    bool found = false;
    for (const auto& r : roots) {
      RationalPolynomial lin{Rational(-nearest_integer(r.re)), 1};
      if (divides(lin, q)) {
        out.push_back(lin);
        q = divmod(q, lin).first;
        found = true;
        break;
      }
    }
    if (found) continue;
    for (std::size_t i = 0; i < roots.size() && !found; ++i)
      for (std::size_t j = i + 1; j < roots.size() && !found; ++j) {
        const Mpc s = roots[i] + roots[j], p = roots[i] * roots[j];
        RationalPolynomial quad{Rational(nearest_integer(p.re)), Rational(-nearest_integer(s.re)), 1};
        if (divides(quad, q)) {
          out.push_back(quad);
          q = divmod(q, quad).first;
          found = true;
        }
      }
    if (found) continue;
    if (q.degree() == 2) {
      out.push_back(q);
      break;
    }
    throw IrreducibleFactorTooLarge("irreducible factor of degree " + std::to_string(q.degree()) +
                                    " in " + q.to_string());
  }
  return out;
}

bool factor_less(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = 0; i < a.coefficients().size(); ++i)
    if (a.coefficient(i) != b.coefficient(i)) return a.coefficient(i) < b.coefficient(i);
  return false;
}

}  // namespace

std::vector<PolynomialFactor> factor_low_degree(const RationalPolynomial& p) {
  if (p.degree() < 1) return {};
  if (p.degree() > 8) throw std::invalid_argument("factor_low_degree handles degree <= 8");
  const RationalPolynomial m = p.monic();
  const RationalPolynomial squarefree = divmod(m, gcd(m, m.derivative())).first.monic();

  // x = y / L turns the square-free part into a monic integer polynomial in y.
  Integer l = 1;
  for (const auto& c : squarefree.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  const int d = squarefree.degree();
  std::vector<Rational> ic(static_cast<std::size_t>(d) + 1);
  Integer lp = 1;
  for (int k = d; k >= 0; --k) {
    ic[static_cast<std::size_t>(k)] = squarefree.coefficient(static_cast<std::size_t>(k)) * lp;
    lp *= l;
  }
  std::vector<PolynomialFactor> out;
  for (const auto& f : split_integer_squarefree(RationalPolynomial(ic))) {
    std::vector<Rational> back(f.coefficients().size());
    Rational scale = 1;
    for (std::size_t k = 0; k < back.size(); ++k) {
      back[k] = f.coefficient(k) * scale;
      scale *= l;
    }
    RationalPolynomial g = RationalPolynomial(back).monic();
    int mult = 0;
    RationalPolynomial rest = m;
    while (rest.degree() >= g.degree()) {
      auto [qq, rr] = divmod(rest, g);
      if (!rr.is_zero()) break;
      rest = qq;
      ++mult;
    }
    out.push_back({g, mult});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return factor_less(a.factor, b.factor); });
  return out;
}

}  // namespace geostruct
