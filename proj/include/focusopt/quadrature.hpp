#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <type_traits>
#include <vector>

#include "focusopt/parallel.hpp"
#include "focusopt/vec.hpp"

namespace focusopt::quadrature {

/// Nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendre gauss_legendre(int n);

/// Quadrature grid on the unit sphere S^{d-1}, d in {2, 3}.
///
/// d = 2: uniform angles with equal weights 2 pi / n (trapezoid rule,
/// spectrally accurate on the circle).  d = 3: Gauss-Legendre in the
/// cosine of the polar angle (measured from the x1 axis) times a uniform
/// azimuth of twice the resolution.  Node ordering is lexicographic in
/// (polar index, azimuth index) so downstream matrices are reproducible
/// bit for bit at fixed resolution.
struct SphereGrid {
  int d = 3;
  int resolution = 0;
  int exactness = 0;  ///< total polynomial degree integrated exactly
  std::vector<Vec3> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

SphereGrid sphere_grid(int d, int resolution);

/// Grid on the ball B_R(0): Gauss-Legendre radii on [0, R] with weights
/// w_i r_i^{d-1}, tensored with a sphere grid.  The radial x spherical
/// product structure stays exposed for diagnostics.
struct BallGrid {
  int d = 3;
  double R = 0.0;
  std::vector<double> radial_nodes;
  std::vector<double> radial_weights;  ///< includes the r^{d-1} factor
  SphereGrid sphere;
  std::vector<Vec3> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

BallGrid ball_grid(int d, double R, int radial_points, SphereGrid sphere);

/// Weighted quadrature sum over the grid.  The reduction is a fixed
/// blocked pairwise cascade, so the result does not depend on the worker
/// count.  The integrand is called as f(i, node_i).
template <class F>
auto integrate_sphere(const SphereGrid& grid, F&& f)
    -> std::invoke_result_t<F, std::size_t, const Vec3&> {
  using T = std::invoke_result_t<F, std::size_t, const Vec3&>;
  const std::size_t n = grid.size();
  std::vector<T> contrib(n);
  par::parallel_for(static_cast<std::ptrdiff_t>(n), [&](std::size_t i) {
    contrib[i] = grid.weights[i] * f(i, grid.nodes[i]);
  });
  return par::block_pairwise_sum(contrib.data(), n);
}

std::complex<double> integrate_sphere(const SphereGrid& grid,
                                      std::span<const std::complex<double>> values);
CVec3 integrate_sphere(const SphereGrid& grid, std::span<const CVec3> values);

}  // namespace focusopt::quadrature
