#pragma once

#include <array>
#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "focusopt/quadrature.hpp"
#include "focusopt/vec.hpp"

namespace focusopt::fields {

using quadrature::SphereGrid;

/// Scalar far-field density f(xi) sampled at the grid nodes.
struct ScalarDensity {
  SphereGrid grid;
  std::vector<cplx> values;

  double norm2() const;  ///< integral of |f|^2 over the sphere
  void normalize();      ///< scales so that norm2() == 1
};

/// Tangent (divergence-free) far-field density e(xi), xi . e(xi) = 0.
struct TangentDensity {
  SphereGrid grid;
  std::vector<CVec3> values;

  double norm2() const;
  void normalize();
  double max_radial_component() const;  ///< max_i |xi_i . e_i|, tangency defect
};

/// l(xi) = (1,0,...,0) - xi_1 xi, the tangential projection of the first
/// basis vector.  Requires |xi| = 1 within 1e-12.
Vec3 ell(int d, const Vec3& xi);

/// Evaluates l at every node and its degree-(0,2) harmonic expansion
///   ( (d-1)/d - sum_{j>=2} (xi_1^2 - xi_j^2)/d , -xi_1 xi_2 , ... )
/// and returns the maximum componentwise discrepancy.  The expansion is
/// an identity on |xi| = 1, so anything above roundoff is a defect.
double ell_expansion_check(const SphereGrid& grid);

/// Node-wise tangential projection e = v - (xi . v) xi.
TangentDensity project_tangent(const SphereGrid& grid, std::span<const CVec3> v);

/// The density with values l(xi): the projection of the constant field
/// (1,0,...,0), and the optimizer of |E(0)| among tangent densities.
TangentDensity ell_density(const SphereGrid& grid);

struct ScalarSample {
  Vec3 x;
  cplx u;
};

/// E and (for d = 3) B at a point; B = -int e^{i x.xi} xi ^ e(xi) dsigma.
struct VectorSample {
  Vec3 x;
  CVec3 E;
  CVec3 B;
};

/// Smallest grid resolution that resolves e^{i x . xi} at |x| = r.
int required_resolution(double r);

/// Field synthesis u(x) = int e^{i x.xi} f(xi) dsigma by grid quadrature.
/// Throws accuracy_error when the grid resolution is below
/// required_resolution(|x|).
ScalarSample synthesize(const ScalarDensity& f, const Vec3& x);
VectorSample synthesize(const TangentDensity& e, const Vec3& x);

std::vector<ScalarSample> synthesize_batch(const ScalarDensity& f,
                                           std::span<const Vec3> points);
std::vector<VectorSample> synthesize_batch(const TangentDensity& e,
                                           std::span<const Vec3> points);

/// Serial reference kernels; bit-identical to the parallel versions.
std::vector<ScalarSample> synthesize_batch_serial(const ScalarDensity& f,
                                                  std::span<const Vec3> points);
std::vector<VectorSample> synthesize_batch_serial(const TangentDensity& e,
                                                  std::span<const Vec3> points);

/// Closed-form field of a homogeneous harmonic polynomial density P of
/// degree k:
///   int e^{i x.xi} P(xi) dsigma
///     = (2 pi)^{d/2} i^k |x|^{-(d-2)/2} J_{(d+2k-2)/2}(|x|) P(x/|x|).
/// P is spot-checked for harmonicity and homogeneity by finite
/// differences before use.
cplx harmonic_field(int d, int k, const std::function<double(const Vec3&)>& P,
                    const Vec3& x);

enum class BoundKind { scalar, maxwell };

/// Sharp constant c so that |field(0)| <= c * ||density||_{L^2}:
/// sqrt(|S^{d-1}|) in the scalar case, sqrt((d-1)/d |S^{d-1}|) for
/// tangent densities.
double origin_bound(int d, BoundKind kind);

struct MaskedOptimum {
  TangentDensity density;  ///< normalized l * indicator
  double achieved;         ///< |E(0)| of the normalized density
};

/// Best tangent density supported in the masked region: l * chi_Omega,
/// normalized.  Throws std::domain_error when no node is masked in.
MaskedOptimum masked_optimum(int d, const std::function<bool(const Vec3&)>& mask,
                             const SphereGrid& grid);

struct FarFieldReport {
  double decay_exponent;       ///< fitted from |E| ~ r^{-(d-1)/2}
  double angular_correlation;  ///< worst-radius correlation with l(x_hat)
  cplx amplitude;              ///< fitted c in r E(r x_hat) ~ c sin(r) l(x_hat)
  std::vector<double> radii;
  int directions;
};

/// Samples the field on large spheres up to radius r (>= 50) and fits
/// the radial decay and the angular profile against l.  The amplitude
/// constant is reported, never asserted.
FarFieldReport far_field_check(const TangentDensity& e, double r);

/// Richardson-extrapolated central differences of the synthesized field;
/// true iff |d^alpha E(x)| <= origin_bound * ||e|| within relative slack
/// 1e-6.  |alpha| <= 2.
bool derivative_bound_check(const TangentDensity& e, const Vec3& x,
                            const std::array<int, 3>& alpha, double step,
                            double* observed = nullptr);
/// Scalar variant; the bound lacks the (d-1)/d factor.
bool derivative_bound_check(const ScalarDensity& f, const Vec3& x,
                            const std::array<int, 3>& alpha, double step,
                            double* observed = nullptr);

/// The shipped low-degree harmonic family: 1; xi_j; xi_1^2 - xi_j^2;
/// xi_i xi_j; and a degree-3 representative per dimension.
struct HarmonicPolynomial {
  int degree;
  std::string name;
  std::function<double(const Vec3&)> eval;
};
std::vector<HarmonicPolynomial> standard_harmonics(int d, int max_degree);

}  // namespace focusopt::fields
