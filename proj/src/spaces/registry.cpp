#include "geostruct/spaces.hpp"

#include <regex>

namespace geostruct {

namespace {

struct FamilyName {
  SpaceFamily family;
  const char* name;
  int params;  // number of integer parameters
};

constexpr FamilyName kFamilies[] = {
    {SpaceFamily::LplusS, "LplusS", 2}, {SpaceFamily::LminusS, "LminusS", 2}, {SpaceFamily::LminusE, "LminusE", 2},
    {SpaceFamily::LCP, "LCP", 1},       {SpaceFamily::LCH, "LCH", 1},         {SpaceFamily::LHP, "LHP", 1},
    {SpaceFamily::LHH, "LHH", 1},       {SpaceFamily::LOP2, "LOP2", 0},
};

const FamilyName& family_name(SpaceFamily f) {
  for (const auto& n : kFamilies)
    if (n.family == f) return n;
  throw std::logic_error("unknown space family");
}

std::string pair_string(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

TableCell cell(TableCell::Kind kind, std::size_t count, std::string citation) {
  return TableCell{kind, count, std::move(citation)};
}

const std::vector<std::string> kStructureColumns{"complex_int", "complex_non", "para_int",       "para_non",
                                                 "kahler_int",  "kahler_non",  "parakahler_int", "parakahler_non"};

// Fills every structure column with "no such structure", citing the row.
void all_empty(ExpectedRow& r, const std::string& why) {
  for (auto* c : {&r.complex_int, &r.complex_non, &r.para_int, &r.para_non, &r.kahler_int, &r.kahler_non,
                  &r.parakahler_int, &r.parakahler_non})
    *c = cell(TableCell::Kind::Empty, 0, why);
}

ExpectedRow flat_row(int p1, int q) {
  using K = TableCell::Kind;
  ExpectedRow r;
  const int n = p1 + q;
  r.symmetric = true;
  r.row_label = n == 3 ? "L(E^{p+1,q}), p+1+q = 3" : "L(E^{p+1,q}), p+1+q != 3";
  const std::string row = "classification table, row " + r.row_label;
  r.symplectic = cell(K::Symmetric, 0, row + "; flat theorem: symplectic symmetric space");
  all_empty(r, row);
  if (n == 3) {
    r.complex_int = cell(K::Family, 0, row + ", complex Int column");
    r.kahler_int = cell(K::Family, 0, row + ", Kähler Int column");
    r.kahler_signature = Signature{2, 2, 0};
    r.kahler_signature_citation = "flat theorem: invariant Kähler structure of neutral signature (2,2) when n = 3";
    r.convention_flag = true;
    r.convention_columns = {"complex_int", "kahler_int"};
    r.convention_note =
        "the table lists a family of complex structures; the exact commutant yields isolated square roots, "
        "and the Kähler metrics form the family";
  }
  return r;
}

ExpectedRow sphere_row(bool plus, int p, int q) {
  using K = TableCell::Kind;
  ExpectedRow r;
  r.symmetric = true;
  const std::string side = plus ? "L+(S^{p,q})" : "L-(S^{p,q})";
  if (p + q > 3) {
    r.row_label = side + ", p+q > 3";
    const std::string row = "classification table, row " + r.row_label;
    const std::string thm = "constant-curvature theorem, p+q > 3: ";
    r.symplectic = cell(K::Count, 1, row + "; " + thm + "unique invariant symplectic structure up to scaling");
    all_empty(r, row);
    if (plus) {
      r.complex_int = cell(K::Count, 1, row + "; " + thm + "unique invariant complex structure up to sign");
      r.kahler_int = cell(K::Count, 1, row + "; " + thm + "unique invariant metric, Kähler");
      r.kahler_signature = Signature{static_cast<std::size_t>(2 * (p - 1)), static_cast<std::size_t>(2 * q), 0};
      r.kahler_signature_citation = thm + "Kähler of signature (2(p-1), 2q)";
    } else {
      r.para_int = cell(K::Count, 1, row + "; " + thm + "unique invariant para-complex structure up to sign");
      r.parakahler_int = cell(K::Count, 1, row + "; " + thm + "unique invariant metric, para-Kähler");
      r.parakahler_neutral = true;
      r.parakahler_neutral_citation = thm + "para-Kähler of neutral signature";
    }
    return r;
  }
  if (p + q < 3) {
    r.table_row = false;
    r.row_label = side + ", p+q = 2 (not tabulated)";
    return r;
  }
  r.row_label = side + ", (p,q) = " + pair_string(p, q);
  const std::string row = "classification table, row " + r.row_label;
  r.symplectic = cell(K::Family, 0, row + "; constant-curvature theorem, p+q = 3: two independent invariant closed 2-forms");
  all_empty(r, row);
  // which of complex / para the table puts in each p+q = 3 row
  const bool complex_row = plus ? q != 1 || p != 2 : !(p == 1 && q == 2);
  if (complex_row) {
    r.complex_int = cell(K::Count, 1, row + ", complex Int column");
    r.kahler_int = cell(K::Family, 0, row + ", Kähler Int column");
  } else {
    r.para_int = cell(K::Count, 1, row + ", para-complex Int column");
    r.parakahler_int = cell(K::Family, 0, row + ", para-Kähler Int column");
  }
  r.convention_flag = true;
  r.convention_columns = kStructureColumns;
  r.convention_note =
      "the commutant is 4-dimensional, spanned by 1, I = I_H (x) 1, I' = 1 (x) I_V and I'' = I I'; all three "
      "non-identity elements square to +-Id, while the table lists one structure per row";
  return r;
}

ExpectedRow projective_row(SpaceFamily f) {
  using K = TableCell::Kind;
  ExpectedRow r;
  r.symmetric = false;
  auto set = [&](const std::string& label, const std::string& thm) {
    r.row_label = label;
    all_empty(r, "classification table, row " + label + "; " + thm);
  };
  switch (f) {
  case SpaceFamily::LCP: {
    const std::string thm = "complex projective theorem";
    set("L(CP^n)", thm);
    const std::string row = "classification table, row L(CP^n); " + thm;
    r.symplectic = cell(K::Family, 0, row + ": one-parameter family omega_1 + t omega_0");
    r.complex_int = cell(K::Count, 2, row + ": four almost complex structures up to sign, two integrable");
    r.complex_non = cell(K::Count, 2, row + ": four almost complex structures up to sign, two integrable");
    r.kahler_int = cell(K::Count, 2, row + ": every structure is compatible with omega^t");
    r.kahler_non = cell(K::Count, 2, row + ": every structure is compatible with omega^t");
    break;
  }
  case SpaceFamily::LHP:
  case SpaceFamily::LOP2: {
    const bool quat = f == SpaceFamily::LHP;
    const std::string label = quat ? "L(HP^n)" : "L(OP^2)";
    const std::string thm = quat ? "quaternionic projective theorem" : "Cayley plane theorem";
    set(label, thm);
    const std::string row = "classification table, row " + label + "; " + thm;
    r.symplectic = cell(K::Count, 1, row + ": unique invariant symplectic form up to scaling");
    r.complex_int = cell(K::Count, 1, row + ": unique invariant complex structure up to sign");
    r.kahler_int = cell(K::Count, 1, row + ": unique invariant Kähler metric");
    r.convention_flag = true;
    r.convention_columns = {"complex_non", "kahler_non"};
    r.convention_note =
        quat ? "the theorem states two almost complex structures up to sign, one integrable; the table's empty "
               "Non cell omits the non-integrable one"
             : "the commutant is C x C on the 16- and 14-dimensional blocks, giving two almost complex "
               "structures up to sign with one integrable; the theorem's uniqueness is for integrable ones and "
               "the table's empty Non cell omits the other";
    break;
  }
  case SpaceFamily::LCH:
  case SpaceFamily::LHH: {
    const bool cx = f == SpaceFamily::LCH;
    const std::string label = cx ? "L(CH^n)" : "L(HH^n)";
    const std::string thm = cx ? "complex hyperbolic theorem" : "quaternionic hyperbolic theorem";
    set(label, thm);
    const std::string row = "classification table, row " + label + "; " + thm;
    r.symplectic = cx ? cell(K::Family, 0, row + ": one-parameter family omega_1 + t omega_0")
                      : cell(K::Count, 1, row + ": unique invariant symplectic form up to scaling");
    r.para_int = cell(K::Count, 1, row + ": two para-complex structures up to sign, one integrable");
    r.para_non = cell(K::Count, 1, row + ": two para-complex structures up to sign, one integrable");
    r.parakahler_int = cell(K::Count, 1, row + ": both are compatible with the symplectic forms");
    r.parakahler_non = cell(K::Count, 1, row + ": both are compatible with the symplectic forms");
    break;
  }
  default:
    throw std::logic_error("not a projective family");
  }
  return r;
}

void require(bool ok, const GeodesicSpaceId& id, const std::string& why) {
  if (!ok) throw UnsupportedParameters(id.to_string() + ": " + why);
}

}  // namespace

GeodesicSpaceId GeodesicSpaceId::parse(const std::string& text) {
  static const std::regex re(R"(\s*([A-Za-z0-9]+?)\s*(?:\(\s*(-?\d+)\s*(?:,\s*(-?\d+)\s*)?\))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re))
    throw InvalidSpaceId("cannot parse space id '" + text + "'; expected " + supported_space_grammar());
  const std::string name = m[1];
  const int given = m[2].matched ? (m[3].matched ? 2 : 1) : 0;
  for (const auto& f : kFamilies) {
    if (name != f.name) continue;
    if (given != f.params)
      throw InvalidSpaceId("'" + text + "': " + name + " takes " + std::to_string(f.params) + " parameter(s)");
    GeodesicSpaceId id;
    id.family = f.family;
    try {
      if (given >= 1) id.a = std::stoi(m[2]);
      if (given == 2) id.b = std::stoi(m[3]);
    } catch (const std::out_of_range&) {
      throw InvalidSpaceId("'" + text + "': parameter out of range");
    }
    return id;
  }
  throw InvalidSpaceId("unknown space '" + name + "'; expected " + supported_space_grammar());
}

std::string GeodesicSpaceId::to_string() const {
  const auto& f = family_name(family);
  switch (f.params) {
  case 0:
    return f.name;
  case 1:
    return std::string(f.name) + "(" + std::to_string(a) + ")";
  default:
    return std::string(f.name) + pair_string(a, b);
  }
}

GeodesicSpaceId plus_flat(int p1, int q) { return GeodesicSpaceId{SpaceFamily::LminusE, q, p1}; }

std::string supported_space_grammar() {
  return "LplusS(p,q) | LminusS(p,q) | LminusE(p1,q) | LCP(n) | LCH(n) | LHP(n) | LHH(n) | LOP2";
}

std::string TableCell::to_string() const {
  switch (kind) {
  case Kind::Unstated:
    return "-";
  case Kind::Empty:
    return "none";
  case Kind::Count:
    return std::to_string(count);
  case Kind::Family:
    return "R";
  case Kind::Symmetric:
    return "Symmetric";
  }
  return "?";
}

GeodesicSpace build_space(const GeodesicSpaceId& id) {
  GeodesicSpace out;
  out.id = id;
  const int a = id.a, b = id.b;
  const char* h = "h";
  const char* m = "l";
  switch (id.family) {
  case SpaceFamily::LplusS:
    require(a >= 1 && b >= 0, id, "spacelike geodesics need p >= 1 and q >= 0");
    require(a + b >= 2, id, "needs p + q >= 2");
    out.algebra = build_so(a + 1, b);
    h = "h+";
    m = "m+";
    out.expected = sphere_row(true, a, b);
    out.coset = "SO(" + std::to_string(a + 1) + "," + std::to_string(b) + ")/SO(2).SO(" + std::to_string(a - 1) + "," +
                std::to_string(b) + ")";
    out.base_dim = static_cast<std::size_t>(a + b);
    break;
  case SpaceFamily::LminusS:
    require(a >= 0 && b >= 1, id, "timelike geodesics need q >= 1 and p >= 0");
    require(a + b >= 2, id, "needs p + q >= 2");
    out.algebra = build_so(a + 1, b);
    h = "h-";
    m = "m-";
    out.expected = sphere_row(false, a, b);
    out.coset = "SO(" + std::to_string(a + 1) + "," + std::to_string(b) + ")/SO(1,1).SO(" + std::to_string(a) + "," +
                std::to_string(b - 1) + ")";
    out.base_dim = static_cast<std::size_t>(a + b);
    break;
  case SpaceFamily::LminusE:
    require(a >= 1 && b >= 0, id, "needs p1 >= 1 and q >= 0");
    require(a + b >= 2, id, "needs p1 + q >= 2");
    out.algebra = build_e(a, b);
    m = "m";
    out.expected = flat_row(a, b);
    out.coset = "E(" + std::to_string(a) + "," + std::to_string(b) + ")/SO(" + std::to_string(a - 1) + "," +
                std::to_string(b) + ").R+";
    out.base_dim = static_cast<std::size_t>(a + b);
    break;
  case SpaceFamily::LCP:
  case SpaceFamily::LCH:
  case SpaceFamily::LHP:
  case SpaceFamily::LHH: {
    require(a >= 2, id, "needs n >= 2");
    require(b == 0, id, "takes one parameter");
    const bool compact = id.family == SpaceFamily::LCP || id.family == SpaceFamily::LHP;
    const bool cx = id.family == SpaceFamily::LCP || id.family == SpaceFamily::LCH;
    const std::string n = std::to_string(a), n1 = std::to_string(a - 1), np1 = std::to_string(a + 1);
    if (cx) {
      out.algebra = compact ? build_su(a + 1, 0) : build_su(1, a);
      out.coset = (compact ? "SU(" + np1 + ")" : "SU(1," + n + ")") + "/T^2.SU(" + n1 + ")";
      out.base_dim = static_cast<std::size_t>(2 * a);
    } else {
      out.algebra = compact ? build_sp(a + 1, 0) : build_sp(1, a);
      out.coset = (compact ? "Sp(" + np1 + ")" : "Sp(1," + n + ")") + "/T^1.Sp(1).Sp(" + n1 + ")";
      out.base_dim = static_cast<std::size_t>(4 * a);
    }
    out.expected = projective_row(id.family);
    break;
  }
  case SpaceFamily::LOP2:
    require(a == 0 && b == 0, id, "takes no parameters");
    out.algebra = build_f4();
    out.expected = projective_row(SpaceFamily::LOP2);
    out.coset = "F4/SO(2).Spin(7)";
    out.base_dim = 16;
    break;
  }
  out.split = make_split(out.algebra.algebra, out.algebra.subspace(h), out.algebra.subspace(m));
  return out;
}

std::vector<GeodesicSpaceId> generic_battery() {
  using F = SpaceFamily;
  return {{F::LplusS, 4, 0}, {F::LplusS, 2, 2}, {F::LminusS, 2, 2}, {F::LCP, 2, 0}, {F::LCP, 3, 0},
          {F::LCH, 2, 0},    {F::LHP, 2, 0},    {F::LHH, 2, 0},     {F::LOP2, 0, 0}};
}

std::vector<GeodesicSpaceId> convention_battery() {
  using F = SpaceFamily;
  return {{F::LplusS, 3, 0},  {F::LplusS, 2, 1},  {F::LplusS, 1, 2},  {F::LminusS, 0, 3},
          {F::LminusS, 2, 1}, {F::LminusS, 1, 2}, {F::LminusE, 3, 0}};
}

}  // namespace geostruct
