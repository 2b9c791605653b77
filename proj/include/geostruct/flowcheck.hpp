#pragma once

// Floating-point check of the contact geometry of unit sphere bundles and of
// the explicit geodesics of pseudo-spheres.  Nothing here feeds the exact
// classification.

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace geostruct::flow {

using Vec = std::vector<double>;
using Mat = std::vector<Vec>;

class SingularChart : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

struct MetricChart {
  std::string name;
  std::size_t dim = 0;
  int p = 0, q = 0;  // signature of g
  std::function<Mat(const Vec&)> metric;
  Vec lower, upper;  // sampled coordinate box
  /// Replaces the finite-difference Christoffel symbols; used for controls.
  std::function<double(const Vec& x, std::size_t i, std::size_t j, std::size_t k)> christoffel_override;

  /// Gamma^i_jk(x) from central differences of g with step h.
  double christoffel(const Vec& x, std::size_t i, std::size_t j, std::size_t k) const;
};

/// "sphere" (round S^2, polar coordinates), "hyperbolic" (upper half plane),
/// "desitter" (S^{1,1} in (t, phi), Lorentzian).  Throws std::invalid_argument.
MetricChart make_chart(const std::string& name);
std::vector<std::string> chart_names();

constexpr double kStep = 1e-5;

struct ContactResiduals {
  std::size_t samples = 0;
  double max_theta = 0, mean_theta = 0;    // |theta(Gamma) - 1|
  double max_dtheta = 0, mean_dtheta = 0;  // max over a basis of T(SM) of |d theta(Gamma, V)|
  double max_christoffel_asymmetry = 0;
  double tol = 0;
  bool pass = false;
};

/// At random points of the unit sphere bundle (g(y,y) = 1), evaluates the
/// Reeb identities theta(Gamma) = 1 and d theta(Gamma, .) = 0 on T(SM), with
/// theta = g_ij y^i dx^j and Gamma = y^i d_i - Gamma^i_jk y^j y^k d_{y^i}.
/// Throws SingularChart when g is not invertible at a sample.
ContactResiduals contact_residuals(const MetricChart& chart, std::size_t samples, double tol,
                                   unsigned long long seed = 1);

/// Point e of S^{p,q} in E^{p+1,q} with a unit tangent e1, spacelike (+1) or
/// timelike (-1).
struct GeodesicSample {
  int p = 0, q = 0;
  Vec e, e1;
  int causal = 1;
  std::vector<double> grid;
};

/// Scalar product of signature (p+1, q): the first p+1 coordinates positive.
double ambient_dot(const GeodesicSample& s, const Vec& a, const Vec& b);

/// Checks <e,e> = 1, <e,e1> = 0, <e1,e1> = causal to 1e-12; throws
/// std::invalid_argument otherwise.
void validate(const GeodesicSample& s);

/// Random sample on S^{p,q}; needs p >= 1 for spacelike and q >= 1 for timelike.
GeodesicSample random_geodesic_sample(int p, int q, int causal, std::size_t grid_points,
                                      unsigned long long seed = 1);

/// cos(s) e + sin(s) e1 for spacelike, cosh(s) e + sinh(s) e1 for timelike.
Vec geodesic_curve(const GeodesicSample& s, double t);

struct GeodesicResiduals {
  double max_norm_error = 0;      // |<g,g> - 1|
  double max_equation_error = 0;  // |g'' - <g'',g> g| with the second derivative by differences
};

GeodesicResiduals geodesic_residuals(const GeodesicSample& s);

}  // namespace geostruct::flow
