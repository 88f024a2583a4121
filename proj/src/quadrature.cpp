#include "focusopt/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "focusopt/specfun.hpp"

namespace focusopt::quadrature {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw std::domain_error("gauss_legendre: requires n >= 1");
  GaussLegendre out;
  out.nodes.resize(n);
  out.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess, then Newton on P_n
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) {
        // one polishing step after convergence
        p0 = 1.0;
        p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        x -= p1 / dp;
        break;
      }
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    out.nodes[i] = -x;  // ascending order
    out.weights[i] = w;
    out.nodes[n - 1 - i] = x;
    out.weights[n - 1 - i] = w;
  }
  return out;
}

SphereGrid sphere_grid(int d, int resolution) {
  if (d != 2 && d != 3) throw std::domain_error("sphere_grid: d must be 2 or 3");
  if (resolution < 4) throw std::domain_error("sphere_grid: resolution >= 4");

  SphereGrid g;
  g.d = d;
  g.resolution = resolution;

  if (d == 2) {
    const int n = resolution;
    g.exactness = n - 1;
    g.nodes.reserve(n);
    g.weights.assign(n, 2.0 * kPi / n);
    for (int i = 0; i < n; ++i) {
      const double th = 2.0 * kPi * i / n;
      g.nodes.push_back({std::cos(th), std::sin(th), 0.0});
    }
    return g;
  }

  const GaussLegendre gl = gauss_legendre(resolution);
  const int nphi = 2 * resolution;
  const double wphi = 2.0 * kPi / nphi;
  g.exactness = 2 * resolution - 1;
  g.nodes.reserve(static_cast<std::size_t>(resolution) * nphi);
  g.weights.reserve(g.nodes.capacity());
  for (int i = 0; i < resolution; ++i) {
    const double c = gl.nodes[i];
    const double s = std::sqrt(1.0 - c * c);
    for (int j = 0; j < nphi; ++j) {
      const double phi = 2.0 * kPi * j / nphi;
      g.nodes.push_back({c, s * std::cos(phi), s * std::sin(phi)});
      g.weights.push_back(gl.weights[i] * wphi);
    }
  }
  return g;
}

BallGrid ball_grid(int d, double R, int radial_points, SphereGrid sphere) {
  if (d != sphere.d)
    throw std::domain_error("ball_grid: dimension mismatch with sphere grid");
  if (R <= 0.0) throw std::domain_error("ball_grid: requires R > 0");
  if (radial_points < 4) throw std::domain_error("ball_grid: radial_points >= 4");

  BallGrid b;
  b.d = d;
  b.R = R;
  b.sphere = std::move(sphere);

  const GaussLegendre gl = gauss_legendre(radial_points);
  b.radial_nodes.resize(radial_points);
  b.radial_weights.resize(radial_points);
  for (int i = 0; i < radial_points; ++i) {
    const double r = 0.5 * R * (gl.nodes[i] + 1.0);
    b.radial_nodes[i] = r;
    b.radial_weights[i] = 0.5 * R * gl.weights[i] * std::pow(r, d - 1);
  }

  b.nodes.reserve(b.radial_nodes.size() * b.sphere.size());
  b.weights.reserve(b.nodes.capacity());
  for (int i = 0; i < radial_points; ++i) {
    for (std::size_t j = 0; j < b.sphere.size(); ++j) {
      b.nodes.push_back(b.radial_nodes[i] * b.sphere.nodes[j]);
      b.weights.push_back(b.radial_weights[i] * b.sphere.weights[j]);
    }
  }
  return b;
}

std::complex<double> integrate_sphere(const SphereGrid& grid,
                                      std::span<const std::complex<double>> values) {
  if (values.size() != grid.size())
    throw std::invalid_argument("integrate_sphere: value count != node count");
  return integrate_sphere(grid, [&](std::size_t i, const Vec3&) { return values[i]; });
}

CVec3 integrate_sphere(const SphereGrid& grid, std::span<const CVec3> values) {
  if (values.size() != grid.size())
    throw std::invalid_argument("integrate_sphere: value count != node count");
  return integrate_sphere(grid, [&](std::size_t i, const Vec3&) { return values[i]; });
}

}  // namespace focusopt::quadrature
