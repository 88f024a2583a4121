#include "focusopt/fields.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "focusopt/errors.hpp"
#include "focusopt/specfun.hpp"

namespace focusopt::fields {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_unit(const Vec3& xi) {
  if (std::abs(norm(xi) - 1.0) > 1e-12)
    throw std::domain_error("ell: input is not a unit vector");
}

// Weighted quadrature sum with the fixed blocked pairwise reduction.
// Runs on the calling thread; used per point by the batch kernels.
template <class T, class F>
T weighted_sum_local(const SphereGrid& g, F&& term) {
  thread_local std::vector<T> scratch;
  static thread_local std::size_t cap = 0;
  if (cap < g.size()) {
    scratch.resize(g.size());
    cap = g.size();
  }
  std::vector<T>& buf = scratch;
  for (std::size_t i = 0; i < g.size(); ++i) buf[i] = g.weights[i] * term(i);
  return par::block_pairwise_sum(buf.data(), g.size());
}

ScalarSample synthesize_point(const ScalarDensity& f, const Vec3& x) {
  const cplx u = weighted_sum_local<cplx>(f.grid, [&](std::size_t i) {
    const double p = dot(x, f.grid.nodes[i]);
    return cplx{std::cos(p), std::sin(p)} * f.values[i];
  });
  return {x, u};
}

VectorSample synthesize_point(const TangentDensity& e, const Vec3& x) {
  struct EB {
    CVec3 E, B;
    friend EB operator+(const EB& a, const EB& b) { return {a.E + b.E, a.B + b.B}; }
    friend EB operator*(double s, const EB& a) { return {s * a.E, s * a.B}; }
  };
  const EB eb = weighted_sum_local<EB>(e.grid, [&](std::size_t i) {
    const Vec3& xi = e.grid.nodes[i];
    const double p = dot(x, xi);
    const cplx phase{std::cos(p), std::sin(p)};
    EB t;
    t.E = phase * e.values[i];
    if (e.grid.d == 3) t.B = cplx{-1.0, 0.0} * (phase * cross(xi, e.values[i]));
    return t;
  });
  return {x, eb.E, eb.B};
}

void check_resolution(const SphereGrid& g, double r) {
  const int need = required_resolution(r);
  if (g.resolution < need) {
    char msg[128];
    std::snprintf(msg, sizeof msg,
                  "synthesize: |x| = %.3f needs resolution >= %d, grid has %d",
                  r, need, g.resolution);
    throw accuracy_error(msg);
  }
}

double max_norm_over(std::span<const Vec3> points) {
  double r = 0.0;
  for (const Vec3& p : points) r = std::max(r, norm(p));
  return r;
}

}  // namespace

double ScalarDensity::norm2() const {
  return quadrature::integrate_sphere(grid, [&](std::size_t i, const Vec3&) {
           return std::norm(values[i]);
         });
}

void ScalarDensity::normalize() {
  const double s = 1.0 / std::sqrt(norm2());
  for (cplx& v : values) v *= s;
}

double TangentDensity::norm2() const {
  return quadrature::integrate_sphere(grid, [&](std::size_t i, const Vec3&) {
           return focusopt::norm2(values[i]);
         });
}

void TangentDensity::normalize() {
  const double s = 1.0 / std::sqrt(norm2());
  for (CVec3& v : values) v = s * v;
}

double TangentDensity::max_radial_component() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i)
    worst = std::max(worst, std::abs(dot(grid.nodes[i], values[i])));
  return worst;
}

Vec3 ell(int d, const Vec3& xi) {
  if (d != 2 && d != 3) throw std::domain_error("ell: d must be 2 or 3");
  check_unit(xi);
  return Vec3{1.0, 0.0, 0.0} - xi[0] * xi;
}

double ell_expansion_check(const SphereGrid& grid) {
  const int d = grid.d;
  double worst = 0.0;
  for (const Vec3& xi : grid.nodes) {
    const Vec3 l = ell(d, xi);
    double quad_sum = 0.0;  // sum_{j>=2} (xi_1^2 - xi_j^2)
    for (int j = 1; j < d; ++j) quad_sum += xi[0] * xi[0] - xi[j] * xi[j];
    Vec3 expansion{(d - 1.0) / d - quad_sum / d, -xi[0] * xi[1], 0.0};
    if (d == 3) expansion[2] = -xi[0] * xi[2];
    for (int c = 0; c < 3; ++c)
      worst = std::max(worst, std::abs(l[c] - expansion[c]));
  }
  return worst;
}

TangentDensity project_tangent(const SphereGrid& grid, std::span<const CVec3> v) {
  if (v.size() != grid.size())
    throw std::invalid_argument("project_tangent: value count != node count");
  TangentDensity out{grid, std::vector<CVec3>(v.size())};
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec3& xi = grid.nodes[i];
    out.values[i] = v[i] - dot(xi, v[i]) * to_cvec(xi);
  }
  return out;
}

TangentDensity ell_density(const SphereGrid& grid) {
  TangentDensity out{grid, std::vector<CVec3>(grid.size())};
  for (std::size_t i = 0; i < grid.size(); ++i)
    out.values[i] = to_cvec(ell(grid.d, grid.nodes[i]));
  return out;
}

int required_resolution(double r) {
  return static_cast<int>(std::ceil(2.0 * r)) + 16;
}

ScalarSample synthesize(const ScalarDensity& f, const Vec3& x) {
  check_resolution(f.grid, norm(x));
  return synthesize_point(f, x);
}

VectorSample synthesize(const TangentDensity& e, const Vec3& x) {
  check_resolution(e.grid, norm(x));
  return synthesize_point(e, x);
}

std::vector<ScalarSample> synthesize_batch(const ScalarDensity& f,
                                           std::span<const Vec3> points) {
  check_resolution(f.grid, max_norm_over(points));
  std::vector<ScalarSample> out(points.size());
  par::parallel_for(static_cast<std::ptrdiff_t>(points.size()),
                    [&](std::size_t i) { out[i] = synthesize_point(f, points[i]); });
  return out;
}

std::vector<VectorSample> synthesize_batch(const TangentDensity& e,
                                           std::span<const Vec3> points) {
  check_resolution(e.grid, max_norm_over(points));
  std::vector<VectorSample> out(points.size());
  par::parallel_for(static_cast<std::ptrdiff_t>(points.size()),
                    [&](std::size_t i) { out[i] = synthesize_point(e, points[i]); });
  return out;
}

std::vector<ScalarSample> synthesize_batch_serial(const ScalarDensity& f,
                                                  std::span<const Vec3> points) {
  check_resolution(f.grid, max_norm_over(points));
  std::vector<ScalarSample> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    out[i] = synthesize_point(f, points[i]);
  return out;
}

std::vector<VectorSample> synthesize_batch_serial(const TangentDensity& e,
                                                  std::span<const Vec3> points) {
  check_resolution(e.grid, max_norm_over(points));
  std::vector<VectorSample> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    out[i] = synthesize_point(e, points[i]);
  return out;
}

namespace {

// Fixed interior probe points for the harmonicity / homogeneity spot check.
constexpr Vec3 kProbePoints[5] = {{0.31, -0.52, 0.77},
                                  {-0.64, 0.12, 0.41},
                                  {0.05, 0.88, -0.33},
                                  {0.47, 0.29, 0.61},
                                  {-0.23, -0.71, -0.18}};

void validate_harmonic(int d, int k, const std::function<double(const Vec3&)>& P) {
  const double h = 1e-3;
  for (Vec3 p : kProbePoints) {
    if (d == 2) p[2] = 0.0;
    // central second differences; exact for polynomial degree <= 3 and
    // O(h^2) otherwise, vs. roundoff ~ eps |P| / h^2
    double lap = 0.0;
    for (int j = 0; j < d; ++j) {
      Vec3 hi = p, lo = p;
      hi[j] += h;
      lo[j] -= h;
      lap += (P(hi) - 2.0 * P(p) + P(lo)) / (h * h);
    }
    const double scale = 1.0 + std::abs(P(p));
    if (std::abs(lap) > 1e-4 * scale)
      throw std::domain_error("harmonic_field: polynomial fails the Laplace check");
    const Vec3 p2 = 2.0 * p;
    if (std::abs(P(p2) - std::pow(2.0, k) * P(p)) > 1e-9 * (1.0 + std::abs(P(p2))))
      throw std::domain_error("harmonic_field: polynomial is not homogeneous of the stated degree");
  }
}

cplx i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

cplx harmonic_field(int d, int k, const std::function<double(const Vec3&)>& P,
                    const Vec3& x) {
  if (d != 2 && d != 3) throw std::domain_error("harmonic_field: d must be 2 or 3");
  if (k < 0) throw std::domain_error("harmonic_field: degree k >= 0");
  validate_harmonic(d, k, P);

  const double r = norm(x);
  if (r == 0.0) {
    if (k > 0) return {0.0, 0.0};
    return cplx{specfun::surface_area(d) * P(Vec3{1.0, 0.0, 0.0}), 0.0};
  }
  const specfun::BesselOrder order((d + 2.0 * k - 2.0) / 2.0);
  const double J = specfun::bessel_j(order, r);
  const double radial = std::pow(2.0 * kPi, 0.5 * d) * std::pow(r, -0.5 * (d - 2)) * J;
  return i_power(k) * radial * P((1.0 / r) * x);
}

double origin_bound(int d, BoundKind kind) {
  const double s = specfun::surface_area(d);
  if (kind == BoundKind::scalar) return std::sqrt(s);
  return std::sqrt(s * (d - 1.0) / d);
}

MaskedOptimum masked_optimum(int d, const std::function<bool(const Vec3&)>& mask,
                             const SphereGrid& grid) {
  if (d != grid.d) throw std::domain_error("masked_optimum: dimension mismatch");
  TangentDensity density{grid, std::vector<CVec3>(grid.size())};
  bool any = false;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (mask(grid.nodes[i])) {
      density.values[i] = to_cvec(ell(d, grid.nodes[i]));
      any = true;
    }
  }
  if (!any) throw std::domain_error("masked_optimum: mask selects no node");
  density.normalize();
  const CVec3 e0 = quadrature::integrate_sphere(
      grid, std::span<const CVec3>(density.values));
  return {std::move(density), std::sqrt(focusopt::norm2(e0))};
}

FarFieldReport far_field_check(const TangentDensity& e, double r) {
  if (r < 50.0) throw std::domain_error("far_field_check: requires r >= 50");
  check_resolution(e.grid, r);
  const int d = e.grid.d;

  // Radii at extrema of sin(r): the angular profile is cleanest there.
  const int m_hi = static_cast<int>(std::floor(r / kPi - 0.5));
  const int m_lo = std::max(1, m_hi - 5);
  std::vector<double> radii;
  for (int m = m_lo; m <= m_hi; ++m) radii.push_back((m + 0.5) * kPi);

  const SphereGrid dirs = quadrature::sphere_grid(d, 6);
  std::vector<Vec3> points;
  points.reserve(radii.size() * dirs.size());
  for (double rad : radii)
    for (const Vec3& u : dirs.nodes) points.push_back(rad * u);
  const std::vector<VectorSample> samples = synthesize_batch(e, points);

  double l2 = 0.0;
  std::vector<CVec3> lvals(dirs.size());
  for (std::size_t j = 0; j < dirs.size(); ++j) {
    lvals[j] = to_cvec(ell(d, dirs.nodes[j]));
    l2 += focusopt::norm2(lvals[j]);
  }

  double worst_corr = 1.0;
  cplx amp_sum = 0.0;
  std::vector<double> log_r, log_a;
  for (std::size_t k = 0; k < radii.size(); ++k) {
    cplx s = 0.0;
    double e2 = 0.0;
    for (std::size_t j = 0; j < dirs.size(); ++j) {
      const CVec3& E = samples[k * dirs.size() + j].E;
      s += cdot(lvals[j], E);
      e2 += focusopt::norm2(E);
    }
    const double corr = std::abs(s) / std::sqrt(e2 * l2);
    worst_corr = std::min(worst_corr, corr);
    const double sr = std::sin(radii[k]);  // +-1 up to O(1/m) placement error
    amp_sum += radii[k] * s / (sr * l2);
    log_r.push_back(std::log(radii[k]));
    log_a.push_back(0.5 * std::log(e2 / static_cast<double>(dirs.size())));
  }

  // least-squares slope of log|E| vs log r
  const std::size_t n = log_r.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += log_r[i];
    my += log_a[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (log_r[i] - mx) * (log_r[i] - mx);
    sxy += (log_r[i] - mx) * (log_a[i] - my);
  }
  const double slope = sxy / sxx;

  FarFieldReport rep;
  rep.decay_exponent = -slope;
  rep.angular_correlation = worst_corr;
  rep.amplitude = amp_sum / static_cast<double>(radii.size());
  rep.radii = std::move(radii);
  rep.directions = static_cast<int>(dirs.size());
  return rep;
}

namespace {

int alpha_order(const std::array<int, 3>& alpha) {
  for (int a : alpha)
    if (a < 0) throw std::domain_error("derivative_bound_check: negative multi-index");
  return alpha[0] + alpha[1] + alpha[2];
}

// One central-difference evaluation of d^alpha field at step h, where
// field(x) returns a squared-magnitude-capable value via a callback that
// yields the full complex vector (or scalar boxed into CVec3).
template <class Eval>
CVec3 stencil(const Eval& at, const Vec3& x, const std::array<int, 3>& alpha, double h) {
  const int total = alpha_order(alpha);
  if (total == 0) return at(x);
  if (total == 1) {
    int axis = 0;
    while (alpha[axis] == 0) ++axis;
    Vec3 hi = x, lo = x;
    hi[axis] += h;
    lo[axis] -= h;
    return (1.0 / (2.0 * h)) * (at(hi) - at(lo));
  }
  // total == 2: pure or mixed
  int a1 = -1, a2 = -1;
  for (int a = 0; a < 3; ++a) {
    if (alpha[a] == 2) a1 = a2 = a;
    if (alpha[a] == 1) {
      if (a1 < 0)
        a1 = a;
      else
        a2 = a;
    }
  }
  if (a1 == a2) {
    Vec3 hi = x, lo = x;
    hi[a1] += h;
    lo[a1] -= h;
    return (1.0 / (h * h)) * (at(hi) - 2.0 * at(x) + at(lo));
  }
  Vec3 pp = x, pm = x, mp = x, mm = x;
  pp[a1] += h; pp[a2] += h;
  pm[a1] += h; pm[a2] -= h;
  mp[a1] -= h; mp[a2] += h;
  mm[a1] -= h; mm[a2] -= h;
  return (1.0 / (4.0 * h * h)) * (at(pp) - at(pm) - at(mp) + at(mm));
}

template <class Eval>
double derivative_magnitude(const Eval& at, const Vec3& x,
                            const std::array<int, 3>& alpha, double h) {
  if (alpha_order(alpha) > 2)
    throw std::domain_error("derivative_bound_check: |alpha| <= 2");
  const CVec3 coarse = stencil(at, x, alpha, h);
  const CVec3 fine = stencil(at, x, alpha, 0.5 * h);
  // Richardson: both stencils are O(h^2)
  const CVec3 extrap = (1.0 / 3.0) * (4.0 * fine - coarse);
  return std::sqrt(focusopt::norm2(extrap));
}

}  // namespace

bool derivative_bound_check(const TangentDensity& e, const Vec3& x,
                            const std::array<int, 3>& alpha, double step,
                            double* observed) {
  auto at = [&](const Vec3& p) { return synthesize(e, p).E; };
  const double mag = derivative_magnitude(at, x, alpha, step);
  if (observed) *observed = mag;
  const double bound = origin_bound(e.grid.d, BoundKind::maxwell) * std::sqrt(e.norm2());
  return mag <= bound * (1.0 + 1e-6);
}

bool derivative_bound_check(const ScalarDensity& f, const Vec3& x,
                            const std::array<int, 3>& alpha, double step,
                            double* observed) {
  auto at = [&](const Vec3& p) {
    CVec3 boxed;
    boxed[0] = synthesize(f, p).u;
    return boxed;
  };
  const double mag = derivative_magnitude(at, x, alpha, step);
  if (observed) *observed = mag;
  const double bound = origin_bound(f.grid.d, BoundKind::scalar) * std::sqrt(f.norm2());
  return mag <= bound * (1.0 + 1e-6);
}

std::vector<HarmonicPolynomial> standard_harmonics(int d, int max_degree) {
  if (d != 2 && d != 3) throw std::domain_error("standard_harmonics: d must be 2 or 3");
  std::vector<HarmonicPolynomial> out;
  out.push_back({0, "1", [](const Vec3&) { return 1.0; }});
  if (max_degree < 1) return out;
  for (int j = 0; j < d; ++j)
    out.push_back({1, std::string("xi") + std::to_string(j + 1),
                   [j](const Vec3& p) { return p[j]; }});
  if (max_degree < 2) return out;
  for (int j = 1; j < d; ++j)
    out.push_back({2, "xi1^2-xi" + std::to_string(j + 1) + "^2",
                   [j](const Vec3& p) { return p[0] * p[0] - p[j] * p[j]; }});
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b)
      out.push_back({2, "xi" + std::to_string(a + 1) + "xi" + std::to_string(b + 1),
                     [a, b](const Vec3& p) { return p[a] * p[b]; }});
  if (max_degree < 3) return out;
  if (d == 3) {
    out.push_back({3, "xi1xi2xi3",
                   [](const Vec3& p) { return p[0] * p[1] * p[2]; }});
    out.push_back({3, "xi1(xi2^2-xi3^2)",
                   [](const Vec3& p) { return p[0] * (p[1] * p[1] - p[2] * p[2]); }});
  } else {
    out.push_back({3, "xi1^3-3xi1xi2^2",
                   [](const Vec3& p) { return p[0] * (p[0] * p[0] - 3.0 * p[1] * p[1]); }});
  }
  return out;
}

}  // namespace focusopt::fields
