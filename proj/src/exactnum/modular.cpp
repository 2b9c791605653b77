#include "geostruct/exactnum.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <optional>

namespace geostruct {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Descending primes just below 2^31, found by trial division.
const std::vector<u64>& word_primes() {
  static std::vector<u64> primes;
  static std::once_flag once;
  std::call_once(once, [] {
    for (u64 c = (u64{1} << 31) - 1; primes.size() < 64; c -= 2) {
      bool prime = true;
      for (u64 d = 3; d * d <= c; d += 2)
        if (c % d == 0) {
          prime = false;
          break;
        }
      if (prime) primes.push_back(c);
    }
  });
  return primes;
}

class PrimeField {
public:
  explicit PrimeField(u64 p) : p_(p), barrett_(static_cast<u64>(~u64{0} / p)) {}

  u64 prime() const { return p_; }

  u64 reduce(u64 x) const {
    u64 q = static_cast<u64>((static_cast<u128>(x) * barrett_) >> 64);
    u64 r = x - q * p_;
    while (r >= p_) r -= p_;
    return r;
  }
  u64 mul(u64 a, u64 b) const { return reduce(a * b); }
  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p_ - 2); }

  std::optional<u64> from_rational(const Rational& q) const {
    const u64 den = mpz_fdiv_ui(q.get_den_mpz_t(), p_);
    if (den == 0) return std::nullopt;
    const u64 num = mpz_fdiv_ui(q.get_num_mpz_t(), p_);
    return mul(num, inv(den));
  }

private:
  u64 p_;
  u64 barrett_;
};

struct SplitMix {
  u64 state;
  u64 next() {
    u64 z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

struct ModularEchelon {
  std::size_t rows = 0, cols = 0;
  std::vector<u32> data;  // reduced row echelon form, row-major
  std::vector<std::size_t> pivots;
};

// Reduces the system modulo p, compressing it by a random linear map when it
// has many more rows than unknowns (the kernel is unchanged with probability
// close to 1, and any loss is caught by exact verification).
std::optional<ModularEchelon> reduce_mod_p(const LinearSystem& system, const PrimeField& field, u64 seed) {
  const std::size_t n = system.unknowns();
  const std::size_t m = system.size();
  const bool compress = m > n + 16;
  const std::size_t k = compress ? n : m;

  ModularEchelon e;
  e.rows = k;
  e.cols = n;
  e.data.assign(k * n, 0);

  SplitMix rng{seed};
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = system.rows()[i];
    std::vector<std::pair<std::size_t, u64>> modrow;
    modrow.reserve(row.size());
    for (const auto& [c, v] : row) {
      auto x = field.from_rational(v);
      if (!x) return std::nullopt;
      if (*x) modrow.emplace_back(c, *x);
    }
    if (!compress) {
      for (const auto& [c, x] : modrow) e.data[i * n + c] = static_cast<u32>(x);
      continue;
    }
    for (std::size_t t = 0; t < k; ++t) {
      const u64 r = rng.next() % field.prime();
      if (r == 0) continue;
      u32* dst = &e.data[t * n];
      for (const auto& [c, x] : modrow) dst[c] = static_cast<u32>(field.add(dst[c], field.mul(r, x)));
    }
  }

  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < k; ++c) {
    std::size_t p = rank;
    while (p < k && e.data[p * n + c] == 0) ++p;
    if (p == k) continue;
    if (p != rank)
      std::swap_ranges(e.data.begin() + static_cast<long>(p * n), e.data.begin() + static_cast<long>((p + 1) * n),
                       e.data.begin() + static_cast<long>(rank * n));
    u32* prow = &e.data[rank * n];
    const u64 inv = field.inv(prow[c]);
    std::vector<std::size_t> nz;
    for (std::size_t j = c; j < n; ++j)
      if (prow[j]) {
        prow[j] = static_cast<u32>(field.mul(prow[j], inv));
        nz.push_back(j);
      }
    for (std::size_t i = 0; i < k; ++i) {
      if (i == rank) continue;
      u32* row = &e.data[i * n];
      if (row[c] == 0) continue;
      const u64 f = field.neg(row[c]);
      for (std::size_t j : nz) row[j] = static_cast<u32>(field.add(row[j], field.mul(f, prow[j])));
    }
    e.pivots.push_back(c);
    ++rank;
  }
  return e;
}

bool rational_reconstruct(const Integer& a, const Integer& modulus, const Integer& bound, Rational& out) {
  Integer r0 = modulus, r1 = a, s0 = 0, s1 = 1, q, t;
  while (r1 > bound) {
    q = r0 / r1;
    t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (s1 == 0 || abs(s1) > bound) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), s1.get_mpz_t());
  if (g != 1) return false;
  out = Rational(r1, s1);
  out.canonicalize();
  return true;
}

std::vector<std::vector<std::pair<std::size_t, Integer>>> integer_rows(const LinearSystem& system) {
  std::vector<std::vector<std::pair<std::size_t, Integer>>> out;
  out.reserve(system.size());
  for (const auto& row : system.rows()) {
    Integer l = 1;
    for (const auto& e : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.second.get_den_mpz_t());
    std::vector<std::pair<std::size_t, Integer>> ir;
    ir.reserve(row.size());
    for (const auto& [c, v] : row) ir.emplace_back(c, Integer(v.get_num() * (l / v.get_den())));
    out.push_back(std::move(ir));
  }
  return out;
}

bool verify_kernel(const std::vector<std::vector<std::pair<std::size_t, Integer>>>& rows,
                   const std::vector<RationalVector>& basis) {
  Integer acc;
  for (const auto& v : basis) {
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> iv(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) iv[i] = v[i].get_num() * (l / v[i].get_den());
    for (const auto& row : rows) {
      acc = 0;
      for (const auto& [c, x] : row)
        if (sgn(iv[c]) != 0) mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), iv[c].get_mpz_t());
      if (sgn(acc) != 0) return false;
    }
  }
  return true;
}

}  // namespace

std::size_t modular_rank(const LinearSystem& system, std::size_t prime_index) {
  const auto& primes = word_primes();
  for (std::size_t i = prime_index; i < primes.size(); ++i) {
    PrimeField field(primes[i]);
    auto e = reduce_mod_p(system, field, 0x5eed0000 + i);
    if (e) return e->pivots.size();
  }
  throw std::runtime_error("no usable prime for modular rank");
}

std::vector<RationalVector> kernel_basis_modular(const LinearSystem& system) {
  const std::size_t n = system.unknowns();
  const auto& primes = word_primes();
  const auto irows = integer_rows(system);

  std::vector<std::size_t> pivots;
  std::vector<std::size_t> free_cols;
  bool have_pattern = false;
  Integer modulus = 1;
  std::vector<Integer> residues;  // pivot row r, free index f -> r * free_cols.size() + f

  for (std::size_t pi = 0; pi < primes.size(); ++pi) {
    PrimeField field(primes[pi]);
    auto e = reduce_mod_p(system, field, 0x5eed0000 + pi);
    if (!e) continue;

    const bool better = !have_pattern || e->pivots.size() > pivots.size() ||
                        (e->pivots.size() == pivots.size() && e->pivots < pivots);
    if (have_pattern && !better && e->pivots != pivots) continue;  // unlucky prime
    if (better && (!have_pattern || e->pivots != pivots)) {
      pivots = e->pivots;
      free_cols.clear();
      for (std::size_t c = 0, r = 0; c < n; ++c) {
        if (r < pivots.size() && pivots[r] == c)
          ++r;
        else
          free_cols.push_back(c);
      }
      have_pattern = true;
      modulus = 1;
      residues.assign(pivots.size() * free_cols.size(), Integer(0));
    }
    if (free_cols.empty()) return {};

    // Chinese remaindering of the reduced entries.
    const u64 p = field.prime();
    const u64 minv = field.inv(mpz_fdiv_ui(modulus.get_mpz_t(), p));
    for (std::size_t r = 0; r < pivots.size(); ++r)
      for (std::size_t f = 0; f < free_cols.size(); ++f) {
        Integer& x = residues[r * free_cols.size() + f];
        const u64 a = e->data[r * n + free_cols[f]];
        const u64 cur = mpz_fdiv_ui(x.get_mpz_t(), p);
        const u64 delta = field.mul(field.add(a, field.neg(cur)), minv);
        x += modulus * delta;
      }
    modulus *= static_cast<unsigned long>(p);

    Integer bound;
    mpz_sqrt(bound.get_mpz_t(), Integer(modulus / 2).get_mpz_t());
    std::vector<RationalVector> basis(free_cols.size(), RationalVector(n));
    bool ok = true;
    Rational q;
    for (std::size_t f = 0; f < free_cols.size() && ok; ++f) {
      basis[f][free_cols[f]] = 1;
      for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (!rational_reconstruct(residues[r * free_cols.size() + f], modulus, bound, q)) {
          ok = false;
          break;
        }
        basis[f][pivots[r]] = -q;
      }
    }
    if (ok && verify_kernel(irows, basis)) return basis;
  }
  throw std::runtime_error("modular kernel computation failed to certify");
}

}  // namespace geostruct
