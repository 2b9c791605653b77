#include "geostruct/flowcheck.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace geostruct::flow {

namespace {

// Solves a x = b by partial pivoting; throws SingularChart on a tiny pivot.
Vec solve(Mat a, Vec b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[p][c])) p = r;
    if (std::fabs(a[p][c]) < 1e-12) throw SingularChart("metric is not invertible");
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  Vec x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
    x[i] = s / a[i][i];
  }
  return x;
}

double quad(const Mat& g, const Vec& a, const Vec& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) s += g[i][j] * a[i] * b[j];
  return s;
}

Vec shifted(Vec x, std::size_t k, double h) {
  x[k] += h;
  return x;
}

// d_k g_ij by central differences.
double metric_derivative(const MetricChart& c, const Vec& x, std::size_t k, std::size_t i, std::size_t j) {
  return (c.metric(shifted(x, k, kStep))[i][j] - c.metric(shifted(x, k, -kStep))[i][j]) / (2 * kStep);
}

// Phase-space point z = (x, y), 2n coordinates.
struct PhaseChart {
  const MetricChart& c;
  std::size_t n;

  Vec x(const Vec& z) const { return Vec(z.begin(), z.begin() + static_cast<long>(n)); }
  Vec y(const Vec& z) const { return Vec(z.begin() + static_cast<long>(n), z.end()); }

  // components of theta = g_ij y^i dx^j: (g y, 0)
  Vec theta(const Vec& z) const {
    const auto g = c.metric(x(z));
    const auto yy = y(z);
    Vec out(2 * n, 0.0);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) out[j] += g[i][j] * yy[i];
    return out;
  }

  // d theta_ab = d_a theta_b - d_b theta_a
  Mat dtheta(const Vec& z) const {
    Mat d(2 * n, Vec(2 * n));
    std::vector<Vec> partial(2 * n);
    for (std::size_t a = 0; a < 2 * n; ++a) {
      const auto plus = theta(shifted(z, a, kStep)), minus = theta(shifted(z, a, -kStep));
      partial[a].resize(2 * n);
      for (std::size_t b = 0; b < 2 * n; ++b) partial[a][b] = (plus[b] - minus[b]) / (2 * kStep);
    }
    for (std::size_t a = 0; a < 2 * n; ++a)
      for (std::size_t b = 0; b < 2 * n; ++b) d[a][b] = partial[a][b] - partial[b][a];
    return d;
  }

  Vec spray(const Vec& z) const {
    const auto xx = x(z), yy = y(z);
    Vec out(2 * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = yy[i];
      double s = 0;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) s += c.christoffel(xx, i, j, k) * yy[j] * yy[k];
      out[n + i] = -s;
    }
    return out;
  }

  // dE for E = g(y, y) / 2
  Vec energy_differential(const Vec& z) const {
    const auto xx = x(z), yy = y(z);
    const auto g = c.metric(xx);
    Vec out(2 * n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      double s = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s += metric_derivative(c, xx, k, i, j) * yy[i] * yy[j];
      out[k] = s / 2;
      for (std::size_t i = 0; i < n; ++i) out[n + k] += g[k][i] * yy[i];
    }
    return out;
  }
};

Mat sphere_metric(const Vec& x) {
  const double s = std::sin(x[0]);
  return {{1, 0}, {0, s * s}};
}

Mat hyperbolic_metric(const Vec& x) {
  const double w = 1 / (x[1] * x[1]);
  return {{w, 0}, {0, w}};
}

Mat desitter_metric(const Vec& x) {
  const double c = std::cosh(x[0]);
  return {{-1, 0}, {0, c * c}};
}

}  // namespace

double MetricChart::christoffel(const Vec& x, std::size_t i, std::size_t j, std::size_t k) const {
  if (christoffel_override) return christoffel_override(x, i, j, k);
  // Gamma^i_jk = g^{il} (d_j g_lk + d_k g_lj - d_l g_jk) / 2
  Vec rhs(dim);
  for (std::size_t l = 0; l < dim; ++l)
    rhs[l] = (metric_derivative(*this, x, j, l, k) + metric_derivative(*this, x, k, l, j) -
              metric_derivative(*this, x, l, j, k)) /
             2;
  return solve(metric(x), rhs)[i];
}

MetricChart make_chart(const std::string& name) {
  MetricChart c;
  c.name = name;
  c.dim = 2;
  if (name == "sphere") {
    c.p = 2;
    c.metric = sphere_metric;
    c.lower = {0.3, 0.0};
    c.upper = {M_PI - 0.3, 2 * M_PI};
  } else if (name == "hyperbolic") {
    c.p = 2;
    c.metric = hyperbolic_metric;
    c.lower = {-2.0, 0.5};
    c.upper = {2.0, 2.0};
  } else if (name == "desitter") {
    c.p = 1;
    c.q = 1;
    c.metric = desitter_metric;
    c.lower = {-1.0, 0.0};
    c.upper = {1.0, 2 * M_PI};
  } else {
    throw std::invalid_argument("unknown chart '" + name + "' (sphere, hyperbolic, desitter)");
  }
  return c;
}

std::vector<std::string> chart_names() { return {"sphere", "hyperbolic", "desitter"}; }

ContactResiduals contact_residuals(const MetricChart& chart, std::size_t samples, double tol,
                                   unsigned long long seed) {
  if (samples == 0) throw std::invalid_argument("contact_residuals needs at least one sample");
  const std::size_t n = chart.dim;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  const PhaseChart phase{chart, n};
  ContactResiduals out;
  out.tol = tol;
  out.samples = samples;
  for (std::size_t s = 0; s < samples; ++s) {
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i)
      x[i] = chart.lower[i] + (chart.upper[i] - chart.lower[i]) * std::uniform_real_distribution<double>()(rng);
    const auto g = chart.metric(x);
    Vec y(n);
    double norm = 0;
    // unit vectors with g(y, y) = +1; in indefinite signature redraw until spacelike
    for (int attempt = 0; attempt < 1000 && norm < 1e-3; ++attempt) {
      for (auto& v : y) v = gauss(rng);
      norm = quad(g, y, y);
    }
    if (norm < 1e-3) throw SingularChart("no spacelike direction found at a sample");
    for (auto& v : y) v /= std::sqrt(norm);

    Vec z = x;
    z.insert(z.end(), y.begin(), y.end());
    const auto theta = phase.theta(z);
    const auto spray = phase.spray(z);
    double theta_gamma = 0;
    for (std::size_t a = 0; a < 2 * n; ++a) theta_gamma += theta[a] * spray[a];
    const double theta_err = std::fabs(theta_gamma - 1);

    // basis of T(SM) = ker dE: coordinate vectors minus their dE-component along d/dy
    const auto de = phase.energy_differential(z);
    Vec normal(2 * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) normal[n + i] = y[i];
    double de_normal = 0;
    for (std::size_t a = 0; a < 2 * n; ++a) de_normal += de[a] * normal[a];
    const auto d = phase.dtheta(z);
    double dtheta_err = 0;
    for (std::size_t b = 0; b < 2 * n; ++b) {
      Vec v(2 * n, 0.0);
      v[b] = 1;
      for (std::size_t a = 0; a < 2 * n; ++a) v[a] -= de[b] / de_normal * normal[a];
      double val = 0;
      for (std::size_t a = 0; a < 2 * n; ++a)
        for (std::size_t c = 0; c < 2 * n; ++c) val += d[a][c] * spray[a] * v[c];
      dtheta_err = std::max(dtheta_err, std::fabs(val));
    }

    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          out.max_christoffel_asymmetry =
              std::max(out.max_christoffel_asymmetry, std::fabs(chart.christoffel(x, i, j, k) - chart.christoffel(x, i, k, j)));

    out.max_theta = std::max(out.max_theta, theta_err);
    out.max_dtheta = std::max(out.max_dtheta, dtheta_err);
    out.mean_theta += theta_err / static_cast<double>(samples);
    out.mean_dtheta += dtheta_err / static_cast<double>(samples);
  }
  out.pass = out.max_theta < tol && out.max_dtheta < tol;
  return out;
}

double ambient_dot(const GeodesicSample& s, const Vec& a, const Vec& b) {
  double r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += (static_cast<int>(i) <= s.p ? 1.0 : -1.0) * a[i] * b[i];
  return r;
}

void validate(const GeodesicSample& s) {
  const std::size_t n = static_cast<std::size_t>(s.p + 1 + s.q);
  if (s.e.size() != n || s.e1.size() != n) throw std::invalid_argument("geodesic sample has the wrong dimension");
  if (s.causal != 1 && s.causal != -1) throw std::invalid_argument("causal type must be +1 or -1");
  const double tol = 1e-12;
  if (std::fabs(ambient_dot(s, s.e, s.e) - 1) > tol) throw std::invalid_argument("<e,e> != 1");
  if (std::fabs(ambient_dot(s, s.e, s.e1)) > tol) throw std::invalid_argument("<e,e1> != 0");
  if (std::fabs(ambient_dot(s, s.e1, s.e1) - s.causal) > tol) throw std::invalid_argument("<e1,e1> != causal type");
}

GeodesicSample random_geodesic_sample(int p, int q, int causal, std::size_t grid_points, unsigned long long seed) {
  if (p < 0 || q < 0) throw std::invalid_argument("negative signature");
  if (causal == 1 && p < 1) throw std::invalid_argument("spacelike geodesics need p >= 1");
  if (causal == -1 && q < 1) throw std::invalid_argument("timelike geodesics need q >= 1");
  GeodesicSample s;
  s.p = p;
  s.q = q;
  s.causal = causal;
  const std::size_t n = static_cast<std::size_t>(p + 1 + q);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 0.5);
  // e: rescale a random point with positive norm
  do {
    s.e.assign(n, 0.0);
    for (auto& v : s.e) v = gauss(rng);
    s.e[0] += 2;
  } while (ambient_dot(s, s.e, s.e) < 0.5);
  const double ne = std::sqrt(ambient_dot(s, s.e, s.e));
  for (auto& v : s.e) v /= ne;
  // e1: project a random vector off e and rescale to the requested type
  double n1 = 0;
  do {
    s.e1.assign(n, 0.0);
    for (auto& v : s.e1) v = gauss(rng);
    if (causal == 1)
      s.e1[1] += 2;
    else
      s.e1[n - 1] += 2;
    const double c = ambient_dot(s, s.e1, s.e);
    for (std::size_t i = 0; i < n; ++i) s.e1[i] -= c * s.e[i];
    n1 = ambient_dot(s, s.e1, s.e1) * causal;
  } while (n1 < 0.5);
  for (auto& v : s.e1) v /= std::sqrt(n1);
  for (std::size_t i = 0; i < grid_points; ++i)
    s.grid.push_back(-2.0 + 4.0 * static_cast<double>(i) / static_cast<double>(std::max<std::size_t>(grid_points, 2) - 1));
  validate(s);
  return s;
}

Vec geodesic_curve(const GeodesicSample& s, double t) {
  const double a = s.causal == 1 ? std::cos(t) : std::cosh(t);
  const double b = s.causal == 1 ? std::sin(t) : std::sinh(t);
  Vec out(s.e.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a * s.e[i] + b * s.e1[i];
  return out;
}

GeodesicResiduals geodesic_residuals(const GeodesicSample& s) {
  GeodesicResiduals out;
  // five-point stencil: truncation h^4 and roundoff eps / h^2 both stay far below 1e-6
  const double h = 1e-3;
  for (double t : s.grid) {
    const auto g = geodesic_curve(s, t);
    out.max_norm_error = std::max(out.max_norm_error, std::fabs(ambient_dot(s, g, g) - 1));
    const auto gp = geodesic_curve(s, t + h), gm = geodesic_curve(s, t - h);
    const auto gpp = geodesic_curve(s, t + 2 * h), gmm = geodesic_curve(s, t - 2 * h);
    Vec acc(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
      acc[i] = (-gpp[i] + 16 * gp[i] - 30 * g[i] + 16 * gm[i] - gmm[i]) / (12 * h * h);
    // on the quadric <x,x> = 1 the normal is x itself
    const double normal = ambient_dot(s, acc, g);
    double err = 0;
    for (std::size_t i = 0; i < g.size(); ++i) err = std::max(err, std::fabs(acc[i] - normal * g[i]));
    out.max_equation_error = std::max(out.max_equation_error, err);
  }
  return out;
}

}  // namespace geostruct::flow
