#pragma once

// Registry of the geodesic spaces: coset builders, the stored classification
// table expectations, and the per-space classification pipeline.

#include "geostruct/catalog.hpp"
#include "geostruct/invariants.hpp"

#include <map>

namespace geostruct {

enum class SpaceFamily { LplusS, LminusS, LminusE, LCP, LCH, LHP, LHH, LOP2 };

/// LplusS(p,q), LminusS(p,q): spacelike / timelike geodesics of S^{p,q}.
/// LminusE(p1,q): timelike lines of E^{p1,q}.  LCP(n) ... LHH(n), LOP2.
struct GeodesicSpaceId {
  SpaceFamily family = SpaceFamily::LOP2;
  int a = 0, b = 0;  // (p, q), (p1, q) or (n, 0)

  /// Throws InvalidSpaceId when the text does not follow the grammar.
  static GeodesicSpaceId parse(const std::string& text);
  std::string to_string() const;
  friend bool operator==(const GeodesicSpaceId&, const GeodesicSpaceId&) = default;
};

class InvalidSpaceId : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedParameters : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Engine failure with the space it happened in.
class ClassificationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Spacelike lines of E^{p1,q} as timelike lines of E^{q,p1}, by flipping
/// the sign of the metric.
GeodesicSpaceId plus_flat(int p1, int q);

/// Human-readable grammar, for error messages.
std::string supported_space_grammar();

/// One cell of the classification table.
struct TableCell {
  enum class Kind {
    Unstated,   // no expectation
    Empty,      // no such structure
    Count,      // this many, up to sign (or up to scaling for forms)
    Family,     // a one-parameter family
    Symmetric,  // every invariant form is closed (symmetric space)
  };
  Kind kind = Kind::Unstated;
  std::size_t count = 0;
  std::string citation;

  std::string to_string() const;
};

struct ExpectedRow {
  TableCell symplectic;
  TableCell complex_int, complex_non, para_int, para_non;
  TableCell kahler_int, kahler_non, parakahler_int, parakahler_non;
  /// Stated metric signature of the Kähler pair, compared up to g -> -g.
  std::optional<Signature> kahler_signature;
  std::string kahler_signature_citation;
  /// The para-Kähler metric is stated to be neutral.
  bool parakahler_neutral = false;
  std::string parakahler_neutral_citation;
  /// Whether the coset is stated to be a symmetric space, when it is.
  std::optional<bool> symmetric;
  /// False for parameters outside every table row.
  bool table_row = true;
  std::string row_label;
  /// Columns whose table cell depends on a counting convention the theorems
  /// do not fix; a difference there is reported, not failed.
  bool convention_flag = false;
  std::vector<std::string> convention_columns;
  std::string convention_note;
};

struct GeodesicSpace {
  GeodesicSpaceId id;
  LabeledAlgebra algebra;
  ReductiveSplit split;
  ExpectedRow expected;
  std::string coset;          // G/H presentation
  std::size_t base_dim = 0;   // dimension of the underlying manifold M
};

/// Throws UnsupportedParameters outside the parameter ranges (e.g. timelike
/// geodesics with q = 0).
GeodesicSpace build_space(const GeodesicSpaceId& id);

struct StructureClass {
  int epsilon = -1;
  bool none = false;  // no solution of I^2 = eps Id
  std::string none_reason;
  std::vector<StructureCandidate> structures;          // integrability filled in
  std::vector<StructureCandidate> product_structures;  // eps = +1, unbalanced
  std::optional<FamilyDescriptor> family;

  std::size_t integrable() const;
};

enum class Verdict { Match, MatchUpToConvention, Mismatch, NoExpectation };
std::string to_string(Verdict v);

struct ColumnComparison {
  std::string column;
  std::string expected, observed;
  bool match = true;
  bool convention = false;  // differing, in a flagged column
  std::string citation;
};

struct Comparison {
  Verdict verdict = Verdict::Match;
  std::vector<ColumnComparison> columns;
  std::vector<std::string> differing() const;
};

struct ClassificationReport {
  GeodesicSpaceId id;
  std::string coset;
  std::size_t dim_g = 0, dim_h = 0, dim_m = 0;
  bool symmetric_pair = false;
  std::size_t sym2_dim = 0, alt2_dim = 0, closed_dim = 0;
  std::vector<RationalMatrix> closed_basis;
  std::optional<RationalMatrix> symplectic_sample;
  std::vector<int> sample_coefficients;
  std::size_t commutant_dim = 0;
  bool commutant_commutative = false;
  StructureClass complex, para;
  std::vector<PairRecord> kahler, parakahler;
  /// Observed table cells, in the same column order as the expectation.
  std::map<std::string, TableCell> observed;
  ExpectedRow expected;
  Comparison comparison;
};

ClassificationReport classify(const GeodesicSpaceId& id);
ClassificationReport classify(const GeodesicSpace& space);

/// Column names in table order.
const std::vector<std::string>& table_columns();

struct Table1Summary {
  std::vector<ClassificationReport> reports;
  bool pass = true;  // no MISMATCH
};

Table1Summary table1_compare(const std::vector<GeodesicSpaceId>& rows);

/// The rows with theorem-backed counts and the rows flagged convention-dependent.
std::vector<GeodesicSpaceId> generic_battery();
std::vector<GeodesicSpaceId> convention_battery();

}  // namespace geostruct
