#include "geostruct/spaces.hpp"

#include <algorithm>

namespace geostruct {

namespace {

using Kind = TableCell::Kind;

StructureClass structures_for(const ReductiveSplit& s, const CommutantAlgebra& c, int eps) {
  StructureClass out;
  out.epsilon = eps;
  try {
    auto roots = square_roots(c, eps);
    out.structures = std::move(roots.structures);
    out.product_structures = std::move(roots.product_structures);
    out.family = std::move(roots.family);
  } catch (const NoSolution& e) {
    out.none = true;
    out.none_reason = e.what();
  }
  for (auto& k : out.structures) nijenhuis_integrable(s, k);
  if (out.family) nijenhuis_integrable(s, out.family->representative);
  return out;
}

TableCell observed_structures(const StructureClass& c, bool integrable) {
  if (c.family) return {Kind::Family, 0, {}};
  const auto n = static_cast<std::size_t>(std::count_if(c.structures.begin(), c.structures.end(),
                                                        [&](const auto& k) { return k.integrable == integrable; }));
  return {n == 0 ? Kind::Empty : Kind::Count, n, {}};
}

std::vector<const PairRecord*> pairs_with(const std::vector<PairRecord>& pairs, bool integrable) {
  std::vector<const PairRecord*> out;
  for (const auto& p : pairs)
    if (p.integrable == integrable) out.push_back(&p);
  return out;
}

TableCell observed_pairs(const std::vector<PairRecord>& pairs, bool integrable) {
  const auto n = pairs_with(pairs, integrable).size();
  return {n == 0 ? Kind::Empty : Kind::Count, n, {}};
}

std::string signature_string(const Signature& s) {
  return "(" + std::to_string(s.pos) + "," + std::to_string(s.neg) + ")";
}

bool same_up_to_sign(const Signature& a, const Signature& b) {
  return a.null == b.null && ((a.pos == b.pos && a.neg == b.neg) || (a.pos == b.neg && a.neg == b.pos));
}

std::string structure_text(const StructureClass& c, bool integrable) {
  if (c.family) return "family (tangent dim " + std::to_string(c.family->tangent_dim) + ")";
  return observed_structures(c, integrable).to_string();
}

// A structure cell matches when counts agree; "R" wants a solution family.
bool structures_match(const TableCell& e, const StructureClass& c, bool integrable) {
  const auto o = observed_structures(c, integrable);
  switch (e.kind) {
  case Kind::Empty:
    return o.kind == Kind::Empty;
  case Kind::Count:
    return o.kind == Kind::Count && o.count == e.count;
  case Kind::Family:
    return o.kind == Kind::Family;
  default:
    return true;
  }
}

// A pairing cell "R" wants a pair whose compatible metrics form a family.
bool pairs_match(const TableCell& e, const std::vector<PairRecord>& pairs, bool integrable) {
  const auto sel = pairs_with(pairs, integrable);
  switch (e.kind) {
  case Kind::Empty:
    return sel.empty();
  case Kind::Count:
    return sel.size() == e.count;
  case Kind::Family:
    return std::any_of(sel.begin(), sel.end(), [](const PairRecord* p) { return p->family_dim >= 2; });
  default:
    return true;
  }
}

std::string pairs_text(const std::vector<PairRecord>& pairs, bool integrable) {
  const auto sel = pairs_with(pairs, integrable);
  if (sel.empty()) return "none";
  std::size_t widest = 0;
  for (const auto* p : sel) widest = std::max(widest, p->family_dim);
  return std::to_string(sel.size()) + (widest >= 2 ? " (metric family dim " + std::to_string(widest) + ")" : "");
}

Comparison compare(const ClassificationReport& r) {
  const auto& e = r.expected;
  Comparison out;
  if (!e.table_row) {
    out.verdict = Verdict::NoExpectation;
    return out;
  }
  auto flagged = [&](const std::string& col) {
    return std::find(e.convention_columns.begin(), e.convention_columns.end(), col) != e.convention_columns.end();
  };
  auto add = [&](const std::string& col, const std::string& expected, const std::string& observed, bool match,
                 const std::string& citation) {
    ColumnComparison c{col, expected, observed, match, !match && flagged(col), citation};
    out.columns.push_back(std::move(c));
  };

  {
    std::string observed = "closed dim " + std::to_string(r.closed_dim) + (r.symplectic_sample ? "" : ", all degenerate");
    if (r.symmetric_pair) observed += ", symmetric pair, invariant dim " + std::to_string(r.alt2_dim);
    bool match = r.symplectic_sample.has_value();
    switch (e.symplectic.kind) {
    case Kind::Symmetric:
      match = match && r.symmetric_pair && r.closed_dim == r.alt2_dim;
      break;
    case Kind::Count:
      match = match && r.closed_dim == e.symplectic.count;
      break;
    case Kind::Family:
      match = match && r.closed_dim == 2;
      break;
    case Kind::Empty:
      match = !r.symplectic_sample;
      break;
    case Kind::Unstated:
      break;
    }
    add("symplectic", e.symplectic.to_string(), observed, match, e.symplectic.citation);
  }
  add("complex_int", e.complex_int.to_string(), structure_text(r.complex, true),
      structures_match(e.complex_int, r.complex, true), e.complex_int.citation);
  add("complex_non", e.complex_non.to_string(), structure_text(r.complex, false),
      structures_match(e.complex_non, r.complex, false), e.complex_non.citation);
  add("para_int", e.para_int.to_string(), structure_text(r.para, true), structures_match(e.para_int, r.para, true),
      e.para_int.citation);
  add("para_non", e.para_non.to_string(), structure_text(r.para, false), structures_match(e.para_non, r.para, false),
      e.para_non.citation);
  add("kahler_int", e.kahler_int.to_string(), pairs_text(r.kahler, true), pairs_match(e.kahler_int, r.kahler, true),
      e.kahler_int.citation);
  add("kahler_non", e.kahler_non.to_string(), pairs_text(r.kahler, false), pairs_match(e.kahler_non, r.kahler, false),
      e.kahler_non.citation);
  add("parakahler_int", e.parakahler_int.to_string(), pairs_text(r.parakahler, true),
      pairs_match(e.parakahler_int, r.parakahler, true), e.parakahler_int.citation);
  add("parakahler_non", e.parakahler_non.to_string(), pairs_text(r.parakahler, false),
      pairs_match(e.parakahler_non, r.parakahler, false), e.parakahler_non.citation);

  if (e.kahler_signature) {
    std::string observed;
    bool match = false;
    for (const auto& p : r.kahler) {
      observed += (observed.empty() ? "" : " ") + signature_string(p.signature);
      match = match || same_up_to_sign(p.signature, *e.kahler_signature);
    }
    add("kahler_signature", signature_string(*e.kahler_signature) + " up to sign", observed.empty() ? "none" : observed,
        match, e.kahler_signature_citation);
  }
  if (e.parakahler_neutral) {
    std::string observed;
    bool match = !r.parakahler.empty();
    for (const auto& p : r.parakahler) {
      observed += (observed.empty() ? "" : " ") + signature_string(p.signature);
      match = match && p.signature.pos == p.signature.neg;
    }
    add("parakahler_neutral", "neutral", observed.empty() ? "none" : observed, match, e.parakahler_neutral_citation);
  }
  if (e.symmetric) {
    add("symmetric", *e.symmetric ? "yes" : "no", r.symmetric_pair ? "yes" : "no", *e.symmetric == r.symmetric_pair,
        "coset presentation");
  }

  bool hard = false, soft = false;
  for (const auto& c : out.columns) {
    if (c.match) continue;
    if (c.convention)
      soft = true;
    else
      hard = true;
  }
  out.verdict = hard ? Verdict::Mismatch : soft ? Verdict::MatchUpToConvention : Verdict::Match;
  return out;
}

}  // namespace

std::size_t StructureClass::integrable() const {
  return static_cast<std::size_t>(
      std::count_if(structures.begin(), structures.end(), [](const auto& k) { return k.integrable; }));
}

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::Match:
    return "MATCH";
  case Verdict::MatchUpToConvention:
    return "MATCH-UP-TO-CONVENTION";
  case Verdict::Mismatch:
    return "MISMATCH";
  case Verdict::NoExpectation:
    return "NO-EXPECTATION";
  }
  return "?";
}

std::vector<std::string> Comparison::differing() const {
  std::vector<std::string> out;
  for (const auto& c : columns)
    if (!c.match) out.push_back(c.column);
  return out;
}

const std::vector<std::string>& table_columns() {
  static const std::vector<std::string> cols{"symplectic", "complex_int",    "complex_non",   "para_int",
                                             "para_non",   "kahler_int",     "kahler_non",    "parakahler_int",
                                             "parakahler_non"};
  return cols;
}

ClassificationReport classify(const GeodesicSpaceId& id) {
  GeodesicSpace space;
  try {
    space = build_space(id);
  } catch (const UnsupportedParameters&) {
    throw;
  } catch (const std::exception& e) {
    throw ClassificationError(id.to_string() + ": building the coset failed: " + e.what());
  }
  return classify(space);
}

ClassificationReport classify(const GeodesicSpace& space) {
  const auto& s = space.split;
  ClassificationReport r;
  r.id = space.id;
  r.coset = space.coset;
  r.expected = space.expected;
  try {
    r.dim_g = s.parent.dim();
    r.dim_h = s.dim_h();
    r.dim_m = s.dim_m();
    r.symmetric_pair = is_symmetric_pair(s);
    r.sym2_dim = invariant_tensors(s, TensorKind::Sym2).elements.size();
    r.alt2_dim = invariant_tensors(s, TensorKind::Alt2).elements.size();
    auto family = symplectic_family(s);
    r.closed_basis = std::move(family.closed_basis);
    r.closed_dim = r.closed_basis.size();
    r.symplectic_sample = std::move(family.sample);
    r.sample_coefficients = std::move(family.sample_coefficients);

    const auto c = commutant(s);
    r.commutant_dim = c.dim();
    r.commutant_commutative = c.is_commutative();
    r.complex = structures_for(s, c, -1);
    r.para = structures_for(s, c, 1);
    r.kahler = pair_structures(s, r.complex.structures);
    r.parakahler = pair_structures(s, r.para.structures);
  } catch (const std::exception& e) {
    throw ClassificationError(space.id.to_string() + ": " + e.what());
  }

  r.observed["symplectic"] = r.symplectic_sample
                                 ? TableCell{r.symmetric_pair && r.closed_dim == r.alt2_dim ? Kind::Symmetric
                                             : r.closed_dim == 1                            ? Kind::Count
                                                                                            : Kind::Family,
                                             r.closed_dim, {}}
                                 : TableCell{Kind::Empty, 0, {}};
  r.observed["complex_int"] = observed_structures(r.complex, true);
  r.observed["complex_non"] = observed_structures(r.complex, false);
  r.observed["para_int"] = observed_structures(r.para, true);
  r.observed["para_non"] = observed_structures(r.para, false);
  r.observed["kahler_int"] = observed_pairs(r.kahler, true);
  r.observed["kahler_non"] = observed_pairs(r.kahler, false);
  r.observed["parakahler_int"] = observed_pairs(r.parakahler, true);
  r.observed["parakahler_non"] = observed_pairs(r.parakahler, false);
  r.comparison = compare(r);
  return r;
}

Table1Summary table1_compare(const std::vector<GeodesicSpaceId>& rows) {
  Table1Summary out;
  for (const auto& id : rows) {
    out.reports.push_back(classify(id));
    if (out.reports.back().comparison.verdict == Verdict::Mismatch) out.pass = false;
  }
  return out;
}

}  // namespace geostruct
