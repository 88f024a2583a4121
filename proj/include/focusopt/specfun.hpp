#pragma once

namespace focusopt::specfun {

/// Gamma function, Lanczos approximation (g = 7, 9 terms).  Relative
/// accuracy better than 1e-13 on [1/2, 20]; reflection handles x < 1/2.
double gamma_fn(double x);

/// |S^{d-1}| = 2 pi^{d/2} / Gamma(d/2), d >= 2.
double surface_area(int d);

/// |B_R(0)| = |S^{d-1}| R^d / d.
double ball_volume(int d, double R);

/// Bessel order nu > -1/2.  Orders with 2*nu an odd integer (1/2, 3/2,
/// 5/2, ...) take the closed-form evaluation path in bessel_j.
class BesselOrder {
 public:
  explicit BesselOrder(double nu);

  double nu() const { return nu_; }

  /// True iff 2*nu is an odd integer >= 1.
  bool half_integer() const;

 private:
  double nu_;
};

/// J_nu(t) for t >= 0.
///
/// Dispatch: half-integer orders up to 21/2 use the closed forms
/// J_{1/2} = sqrt(2/(pi t)) sin t, J_{3/2} = sqrt(2/(pi t)) (sin t / t - cos t)
/// and the upward recurrence J_{nu+1} = (2 nu / t) J_nu - J_{nu-1}.  The
/// recurrence amplifies rounding near t = 0, so below t = 2 sqrt(nu+1)
/// the ascending power series (all terms decreasing) is used instead.
/// Every other order goes through bessel_j_reference.  Recurrence is
/// capped at nu = 21/2; beyond that orders fall back to the reference
/// path as well.
double bessel_j(const BesselOrder& order, double t);

/// Independent evaluation of J_nu(t) by adaptive quadrature of
///
///   J_nu(t) = 2 (t/2)^nu / (Gamma(nu+1/2) Gamma(1/2))
///             * int_0^1 cos(t s) (1 - s^2)^(nu - 1/2) ds,
///
/// with panels geometrically clustered at s = 1 when nu < 1/2 (the
/// integrand has an endpoint singularity there).  Certified absolute
/// error <= 1e-12 for t <= 50; throws accuracy_error when the estimate
/// cannot be met.  This path shares nothing with the closed forms above
/// and serves as their oracle.
double bessel_j_reference(const BesselOrder& order, double t);

}  // namespace focusopt::specfun
