// Acceptance run: one PASS/FAIL line per criterion at the pinned tolerances.
// Values are recomputed here with the raw parent brackets and the naive
// reference elimination where the library result is being checked.

#include "geostruct/flowcheck.hpp"
#include "geostruct/spaces.hpp"
#include "oracle.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace geostruct;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// Collects failed checks of one criterion with their context.
class Criterion {
public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& n) { notes_.push_back(n); }
  bool pass() const { return failures_.empty(); }
  std::size_t checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_, notes_;
};

GeodesicSpaceId id(const char* text) { return GeodesicSpaceId::parse(text); }

std::string str(const Signature& s) { return "(" + std::to_string(s.pos) + "," + std::to_string(s.neg) + ")"; }

bool same_up_to_sign(const Signature& a, std::size_t pos, std::size_t neg) {
  return a.null == 0 && ((a.pos == pos && a.neg == neg) || (a.pos == neg && a.neg == pos));
}

// ---- independent evaluation on raw brackets ---------------------------------

class RawSplit {
public:
  explicit RawSplit(const ReductiveSplit& s) : s_(s), basis_(s.parent.dim(), std::vector<oracle::Q>(s.parent.dim())) {
    std::size_t col = 0;
    for (const auto& v : s.h.basis()) put(v, col++);
    for (const auto& v : s.m.basis()) put(v, col++);
  }

  std::size_t n() const { return s_.dim_m(); }

  RationalVector project_m(const RationalVector& v) const {
    const auto c = oracle::solve(basis_, std::vector<oracle::Q>(v.begin(), v.end()));
    if (!c) throw std::logic_error("h + m does not span g");
    return RationalVector(c->begin() + static_cast<long>(s_.dim_h()), c->end());
  }

  RationalVector bracket_m(const RationalVector& x, const RationalVector& y) const {
    return project_m(s_.parent.bracket(s_.from_m(x), s_.from_m(y)));
  }

  RationalMatrix isotropy(std::size_t i) const {
    RationalMatrix a(n(), n());
    for (std::size_t j = 0; j < n(); ++j) {
      const auto c = project_m(s_.parent.bracket(s_.h[i], s_.m[j]));
      for (std::size_t k = 0; k < n(); ++k) a(k, j) = c[k];
    }
    return a;
  }

private:
  void put(const RationalVector& v, std::size_t col) {
    for (std::size_t r = 0; r < v.size(); ++r) basis_[r][col] = v[r];
  }
  const ReductiveSplit& s_;
  oracle::Mat basis_;
};

bool raw_invariant(const RawSplit& raw, std::size_t dim_h, TensorKind kind, const RationalMatrix& t) {
  for (std::size_t i = 0; i < dim_h; ++i) {
    const auto a = raw.isotropy(i);
    const auto image = kind == TensorKind::Endo ? a * t - t * a : a.transpose() * t + t * a;
    if (!image.is_zero()) return false;
  }
  return true;
}

Rational form(const RationalMatrix& w, const RationalVector& x, const RationalVector& y) {
  Rational s = 0;
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < y.size(); ++b) s += x[a] * w(a, b) * y[b];
  return s;
}

bool raw_closed(const RawSplit& raw, const RationalMatrix& w) {
  const std::size_t n = raw.n();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        const Rational r = form(w, raw.bracket_m(ei, ej), ek) + form(w, raw.bracket_m(ej, ek), ei) +
                           form(w, raw.bracket_m(ek, ei), ej);
        if (sgn(r) != 0) return false;
      }
  return true;
}

std::size_t oracle_rank(const std::vector<RationalMatrix>& ms) {
  oracle::Mat rows;
  for (const auto& m : ms) {
    const auto f = flatten(m);
    rows.emplace_back(f.begin(), f.end());
  }
  return oracle::rank(rows);
}

RationalMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-2, 2);
  while (true) {
    RationalMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p(i, j) = d(rng);
    if (sgn(determinant(p)) != 0) return p;
  }
}

struct Counts {
  std::size_t complex = 0, complex_int = 0, para = 0, para_int = 0;
  friend bool operator==(const Counts&, const Counts&) = default;
};

Counts structure_counts(const ReductiveSplit& s) {
  const auto c = commutant(s);
  Counts out;
  for (int eps : {-1, 1}) {
    try {
      auto r = square_roots(c, eps);
      std::size_t integrable = 0;
      for (auto& k : r.structures) integrable += nijenhuis_integrable(s, k) ? 1 : 0;
      (eps == -1 ? out.complex : out.para) = r.structures.size();
      (eps == -1 ? out.complex_int : out.para_int) = integrable;
    } catch (const NoSolution&) {
    }
  }
  return out;
}

// ---- criteria ----------------------------------------------------------------

Criterion algebra_validity() {
  Criterion c;
  const auto start = Clock::now();
  std::vector<std::pair<std::string, std::function<LabeledAlgebra()>>> cases;
  for (int n = 3; n <= 7; ++n)
    for (int q = 0; q <= n / 2; ++q)
      cases.push_back({"so(" + std::to_string(n - q) + "," + std::to_string(q) + ")", [=] { return build_so(n - q, q); }});
  for (int n = 2; n <= 5; ++n)
    for (int q = 0; q <= 1; ++q)
      cases.push_back({"e(" + std::to_string(n - q) + "," + std::to_string(q) + ")", [=] { return build_e(n - q, q); }});
  for (int n = 2; n <= 4; ++n) {
    cases.push_back({"su(" + std::to_string(n + 1) + ")", [=] { return build_su(n + 1, 0); }});
    cases.push_back({"su(1," + std::to_string(n) + ")", [=] { return build_su(1, n); }});
  }
  for (int n = 1; n <= 2; ++n) {
    cases.push_back({"sp(" + std::to_string(n + 1) + ")", [=] { return build_sp(n + 1, 0); }});
    cases.push_back({"sp(1," + std::to_string(n) + ")", [=] { return build_sp(1, n); }});
  }
  cases.push_back({"f4", [] { return build_f4(); }});
  std::size_t largest = 0;
  for (const auto& [name, build] : cases) {
    const auto l = build();
    largest = std::max(largest, l.algebra.dim());
    const auto v = validate(l.algebra);
    c.check(!v, name + " fails antisymmetry or Jacobi");
  }
  c.check(largest == 52, "f4 has dimension 52");
  const double t = seconds_since(start);
  c.check(t < 60, "runtime " + std::to_string(t) + " s >= 60 s");
  c.note(std::to_string(cases.size()) + " algebras up to dim " + std::to_string(largest) + " in " +
         std::to_string(t).substr(0, 5) + " s");
  return c;
}

Criterion golden_commutators() {
  Criterion c;
  std::size_t holds = 0, corrected = 0;
  const auto identities = golden_identities();
  for (const auto& g : identities) {
    const bool ok = g.holds();
    holds += ok ? 1 : 0;
    c.check(ok, "[" + g.family + "] " + g.statement + " does not hold");
    if (!g.as_displayed) {
      ++corrected;
      // the criterion asks for the displayed form; these hold only corrected
      c.check(false, "[" + g.family + "] " + g.statement + " holds only as corrected: " + g.note);
    }
  }
  c.check(identities.size() >= 20, "fewer than 20 identities");
  c.note(std::to_string(identities.size()) + " identities, " + std::to_string(holds) + " hold exactly, " +
         std::to_string(corrected) + " only in corrected form");
  return c;
}

Criterion sphere_rows() {
  Criterion c;
  for (const char* text : {"LplusS(4,0)", "LplusS(3,1)", "LplusS(2,2)", "LminusS(2,2)", "LminusS(1,3)"}) {
    const auto sid = id(text);
    const auto r = classify(sid);
    const std::string t = text;
    const bool plus = sid.family == SpaceFamily::LplusS;
    c.check(r.closed_dim == 1, t + ": closed 2-form dim " + std::to_string(r.closed_dim));
    const auto& mine = plus ? r.complex : r.para;
    const auto& other = plus ? r.para : r.complex;
    c.check(mine.structures.size() == 1 && !mine.family,
            t + ": " + std::to_string(mine.structures.size()) + " candidates up to sign");
    c.check(mine.integrable() == 1, t + ": candidate not integrable");
    c.check(other.structures.empty() && !other.family, t + ": structures of the other type present");
    const auto& pairs = plus ? r.kahler : r.parakahler;
    c.check(!pairs.empty(), t + ": no pair");
    for (const auto& p : pairs) {
      if (plus) {
        const auto pos = static_cast<std::size_t>(2 * (sid.a - 1)), neg = static_cast<std::size_t>(2 * sid.b);
        c.check(same_up_to_sign(p.signature, pos, neg), t + ": signature " + str(p.signature));
      } else {
        c.check(p.signature.pos == p.signature.neg && p.signature.null == 0, t + ": signature " + str(p.signature));
      }
    }
  }
  return c;
}

Criterion complex_projective() {
  Criterion c;
  for (const char* text : {"LCP(2)", "LCP(3)"}) {
    const std::string t = text;
    const auto start = Clock::now();
    const auto r = classify(id(text));
    const double secs = seconds_since(start);
    c.check(r.closed_dim == 2, t + ": closed 2-form dim " + std::to_string(r.closed_dim));
    c.check(r.complex.structures.size() == 4 && !r.complex.family,
            t + ": " + std::to_string(r.complex.structures.size()) + " complex candidates");
    c.check(r.complex.integrable() == 2, t + ": " + std::to_string(r.complex.integrable()) + " integrable, expected 2");
    c.check(r.para.structures.empty(), t + ": para-complex candidates present");
    std::vector<bool> paired(r.complex.structures.size(), false);
    for (const auto& p : r.kahler) paired.at(p.candidate) = true;
    for (std::size_t i = 0; i < paired.size(); ++i)
      c.check(paired[i], t + ": candidate " + std::to_string(i) + " has no Kähler record");
    c.check(secs < 30, t + ": runtime " + std::to_string(secs) + " s");
    c.note(t + ": " + std::to_string(r.complex.integrable()) + " of " + std::to_string(r.complex.structures.size()) +
           " integrable, " + std::to_string(secs).substr(0, 4) + " s");
  }
  return c;
}

Criterion complex_hyperbolic() {
  Criterion c;
  const auto s = build_space(id("LCH(2)"));
  const auto r = classify(s);
  c.check(r.complex.none && r.complex.structures.empty(), "complex candidates present");
  c.check(r.para.structures.size() == 2, std::to_string(r.para.structures.size()) + " para candidates");
  c.check(r.para.integrable() == 1, std::to_string(r.para.integrable()) + " integrable");
  c.check(r.closed_dim == 2, "closed 2-form dim " + std::to_string(r.closed_dim));
  c.check(!r.parakahler.empty(), "no para-Kähler pair");
  // K+ is +Id on the subalgebra spanned by the positive ad h1 eigenspaces
  // (eigenvalues 2 and 1) and -Id on the negative ones, i.e. the sign of
  // ad h1 on m, which is the odd interpolant (7A - A^3) / 6.
  const auto a = isotropy_action(s.split, s.algebra.element("h1"));
  const auto k_plus = (a * 7 - a * a * a) * Rational(1, 6);
  c.check(k_plus * k_plus == RationalMatrix::identity(s.split.dim_m()), "ad h1 on m does not have eigenvalues +-1, +-2");
  std::size_t matched = 0;
  for (const auto& k : r.para.structures) {
    const auto neg = k_plus * Rational(-1);
    if (k.endo == k_plus || k.endo == neg) {
      ++matched;
      c.check(k.integrable, "K+ not integrable");
    } else {
      c.check(!k.integrable, "K- integrable");
    }
  }
  c.check(matched == 1, "K+ not among the candidates");
  return c;
}

Criterion quaternionic() {
  Criterion c;
  const auto hp = classify(id("LHP(2)"));
  c.check(hp.closed_dim == 1, "LHP(2): closed 2-form dim " + std::to_string(hp.closed_dim));
  c.check(hp.complex.structures.size() == 2, "LHP(2): " + std::to_string(hp.complex.structures.size()) + " complex");
  c.check(hp.complex.integrable() == 1, "LHP(2): " + std::to_string(hp.complex.integrable()) + " integrable");
  c.check(!hp.kahler.empty(), "LHP(2): no Kähler pair");
  const auto hh = classify(id("LHH(2)"));
  c.check(hh.complex.structures.empty(), "LHH(2): complex candidates present");
  c.check(hh.para.structures.size() == 2, "LHH(2): " + std::to_string(hh.para.structures.size()) + " para");
  c.check(hh.para.integrable() == 1, "LHH(2): " + std::to_string(hh.para.integrable()) + " integrable");
  return c;
}

Criterion cayley_plane() {
  Criterion c;
  const auto start = Clock::now();
  const auto s = build_space(id("LOP2"));
  const auto& g = s.split.parent;
  c.check(g.dim() == 52 && s.split.dim_h() == 22 && s.split.dim_m() == 30,
          "dims " + std::to_string(g.dim()) + "/" + std::to_string(s.split.dim_h()) + "/" +
              std::to_string(s.split.dim_m()));
  const Rational tau2 = f4_tau_squared(s.algebra);
  const auto ad = adjoint(g, s.algebra.element("h1"));
  const auto sq = ad * ad;
  const auto id52 = RationalMatrix::identity(52);
  const auto k0 = kernel_basis(sq).size(), k1 = kernel_basis(sq + id52 * tau2).size(),
             k4 = kernel_basis(sq + id52 * (4 * tau2)).size();
  c.check(k0 == 22 && k1 == 16 && k4 == 14,
          "(ad h1)^2 multiplicities " + std::to_string(k0) + "/" + std::to_string(k1) + "/" + std::to_string(k4));
  const auto r = classify(s);
  c.check(r.closed_dim == 1, "closed 2-form dim " + std::to_string(r.closed_dim));
  c.check(r.complex.structures.size() == 1 && !r.complex.family,
          std::to_string(r.complex.structures.size()) + " complex candidates up to sign, expected 1");
  c.check(r.complex.integrable() == 1, std::to_string(r.complex.integrable()) + " integrable");
  c.check(r.para.structures.empty(), "para-complex candidates present");
  c.check(!r.kahler.empty(), "no Kähler pair");
  const double secs = seconds_since(start);
  c.check(secs <= 600, "runtime " + std::to_string(secs) + " s");
  c.note("tau^2 = " + to_string(tau2) + ", " + std::to_string(r.complex.structures.size()) + " complex (" +
         std::to_string(r.complex.integrable()) + " integrable), " + std::to_string(secs).substr(0, 4) + " s");
  return c;
}

Criterion flat_cases() {
  Criterion c;
  for (const char* text : {"LminusE(3,0)", "LminusE(2,1)"}) {
    const std::string t = text;
    const auto sid = id(text);
    const auto s = build_space(sid);
    const auto r = classify(s);
    c.check(r.symmetric_pair, t + ": not a symmetric pair");
    c.check(r.closed_dim == r.alt2_dim, t + ": not every invariant 2-form is closed");
    const auto dim_w = static_cast<std::size_t>(sid.a + sid.b - 1);
    c.check(tensor_decomposition_check(s.split, dim_w, 2), t + ": m = W (x) R^2 check fails");
    bool neutral = false;
    for (const auto& p : r.kahler) neutral = neutral || (p.signature == Signature{2, 2, 0});
    std::string found;
    for (const auto& p : r.parakahler) found += " para-Kähler " + str(p.signature);
    c.check(neutral, t + ": no neutral (2,2) Kähler pair;" + (found.empty() ? " none" : found));
  }
  const auto r4 = classify(id("LminusE(4,0)"));
  c.check(r4.complex.structures.empty(), "LminusE(4,0): isolated complex candidate reported");
  return c;
}

Criterion low_dimensional_spheres() {
  Criterion c;
  for (const char* text : {"LplusS(3,0)", "LplusS(2,1)", "LplusS(1,2)", "LminusS(2,1)", "LminusS(1,2)", "LminusS(0,3)"}) {
    const std::string t = text;
    const auto r = classify(id(text));
    c.check(r.alt2_dim == 2, t + ": invariant 2-form dim " + std::to_string(r.alt2_dim));
    c.check(r.commutant_dim == 4, t + ": commutant dim " + std::to_string(r.commutant_dim));
    c.check(r.comparison.verdict == Verdict::MatchUpToConvention, t + ": verdict " + to_string(r.comparison.verdict));
    c.note(t + ": complex " + std::to_string(r.complex.structures.size()) + " (" +
           std::to_string(r.complex.integrable()) + " int), para " + std::to_string(r.para.structures.size()) + " (" +
           std::to_string(r.para.integrable()) + " int), product " + std::to_string(r.para.product_structures.size()));
  }
  return c;
}

Criterion property_suites() {
  Criterion c;
  // (a) invariance re-check on raw brackets
  for (const char* text : {"LCP(2)", "LCH(2)", "LplusS(2,1)", "LminusS(2,2)", "LminusE(3,0)", "LHH(2)"}) {
    const std::string t = text;
    const auto s = build_space(id(text));
    const RawSplit raw(s.split);
    const auto r = classify(s);
    for (auto kind : {TensorKind::Sym2, TensorKind::Alt2, TensorKind::Endo}) {
      const auto tensors = invariant_tensors(s.split, kind);
      for (const auto& e : tensors.elements)
        c.check(raw_invariant(raw, s.split.dim_h(), kind, e), t + ": invariant tensor fails re-check");
    }
    for (const auto& w : r.closed_basis) c.check(raw_invariant(raw, s.split.dim_h(), TensorKind::Alt2, w), t + ": closed form");
    for (const auto* cls : {&r.complex, &r.para})
      for (const auto& k : cls->structures)
        c.check(raw_invariant(raw, s.split.dim_h(), TensorKind::Endo, k.endo), t + ": structure");
    for (const auto* ps : {&r.kahler, &r.parakahler})
      for (const auto& p : *ps) {
        c.check(raw_invariant(raw, s.split.dim_h(), TensorKind::Sym2, p.metric), t + ": metric");
        c.check(raw_invariant(raw, s.split.dim_h(), TensorKind::Alt2, p.kahler_form), t + ": Kähler form");
      }
  }
  // (b) closedness agrees with the raw Chevalley residual; on symmetric pairs
  // every invariant 2-form is closed
  for (const char* text : {"LminusE(3,0)", "LminusE(2,1)", "LminusE(4,0)", "LplusS(2,0)", "LCP(2)", "LplusS(2,1)"}) {
    const std::string t = text;
    const auto s = build_space(id(text));
    const RawSplit raw(s.split);
    const bool symmetric = is_symmetric_pair(s.split);
    const auto forms = invariant_tensors(s.split, TensorKind::Alt2);
    for (const auto& w : forms.elements) {
      const bool lib = is_closed(s.split, w), ref = raw_closed(raw, w);
      c.check(lib == ref, t + ": closedness disagrees with the raw residual");
      if (symmetric) c.check(lib, t + ": invariant form on a symmetric pair not closed");
    }
  }
  // (c) Nijenhuis counts under a random change of basis of m
  std::mt19937_64 rng(2024);
  for (const char* text : {"LCP(2)", "LCH(2)", "LplusS(2,1)", "LminusE(3,0)", "LHH(2)"}) {
    const auto s = build_space(id(text)).split;
    const auto p = random_invertible(rng, s.dim_m());
    std::vector<RationalVector> mixed;
    for (std::size_t j = 0; j < s.dim_m(); ++j) mixed.push_back(s.from_m(p.column(j)));
    const auto conj = make_split(s.parent, s.h, Subspace(s.parent.dim(), mixed));
    c.check(structure_counts(conj) == structure_counts(s), std::string(text) + ": counts change under conjugation");
  }
  // (d) forms d(B o Z(h)) span the closed invariant 2-forms
  for (const char* text : {"LCP(2)", "LCP(3)", "LCH(2)", "LHP(2)", "LHH(2)", "LOP2"}) {
    const auto s = build_space(id(text)).split;
    std::vector<RationalMatrix> central;
    const auto cent = centralizer(s.parent, s.h);
    for (const auto& z : cent.basis())
      if (s.h.contains(z)) central.push_back(form_from_central(s, z));
    const auto closed = symplectic_family(s).closed_basis;
    auto both = closed;
    both.insert(both.end(), central.begin(), central.end());
    c.check(oracle_rank(central) == closed.size() && oracle_rank(both) == closed.size(),
            std::string(text) + ": central forms do not span the closed forms");
  }
  // (e) contact identities of the geodesic flow
  for (const char* chart : {"sphere", "hyperbolic"}) {
    const auto start = Clock::now();
    const auto r = flow::contact_residuals(flow::make_chart(chart), 100, 1e-6);
    const double secs = seconds_since(start);
    c.check(r.pass, std::string(chart) + ": residual " + std::to_string(std::max(r.max_theta, r.max_dtheta)));
    c.check(secs < 5, std::string(chart) + ": runtime " + std::to_string(secs) + " s");
  }
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Criterion()>>> criteria{
      {"algebra validity", algebra_validity},
      {"golden commutators", golden_commutators},
      {"sphere rows of the table", sphere_rows},
      {"L(CP^2), L(CP^3)", complex_projective},
      {"L(CH^2)", complex_hyperbolic},
      {"L(HP^2), L(HH^2)", quaternionic},
      {"L(OP^2)", cayley_plane},
      {"flat cases", flat_cases},
      {"p+q = 3 rows", low_dimensional_spheres},
      {"property suites", property_suites},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Criterion c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.check(false, std::string("exception: ") + e.what());
    }
    std::ostringstream line;
    line << (c.pass() ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " ("
         << c.checks() << " checks, " << std::fixed << std::setprecision(1) << seconds_since(start) << " s)";
    std::cout << line.str() << "\n";
    for (const auto& n : c.notes()) std::cout << "    " << n << "\n";
    for (const auto& f : c.failures()) std::cout << "    failed: " << f << "\n";
    failed += c.pass() ? 0 : 1;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
