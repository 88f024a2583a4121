#pragma once

#include <functional>
#include <vector>

namespace focusopt::spectrum {

/// Prefactor convention for Lambda_{d,k}(R).
///
/// The operator with kernel e^{i x.xi} forces the prefactor (2 pi)^d
/// (`oracle`, the default): the Nystrom discretization of L*L reproduces
/// these values to machine precision, and the small-R law
/// Lambda_{d,0} -> |S^{d-1}| |B_R| holds exactly.  The `paper` variant
/// (2 pi)^{d/2} |S^{d-1}| is kept selectable so that published tables
/// normalized by 2^{7/2} pi^{5/2} can be reproduced as printed.  All
/// orderings, crossings, criteria and half-max radii are invariant
/// under the choice.
enum class Convention { paper, oracle };

/// Lambda_{d,k}(R) = C(d) * int_0^R r [J_{(d+2k-2)/2}(r)]^2 dr.
///
/// Fixed-panel Gauss-Legendre (16 nodes per panel, width <= pi/4,
/// halved refine_level times), refined once for an error estimate;
/// throws accuracy_error when coarse and refined disagree beyond 1e-10
/// relative (with an absolute floor tied to the certified accuracy of
/// the Bessel evaluation).
double lambda(int d, int k, double R, Convention conv = Convention::oracle,
              int refine_level = 0);

/// Closed-form candidate (Lambda_{d,0} - Lambda_{d,2}) (d-1)/d for the
/// top tangent eigenvalue.  It is a strict lower bound for the exact
/// eigenvalue of the rotated-ell eigenspace (see ell_rotate_eigenvalue,
/// which exceeds it by Lambda_{d,2}/d * d = Lambda_{d,2});
/// the positivity criterion built on it is therefore conservative.
double maxwell_top_eigenvalue(int d, double R, Convention conv = Convention::oracle);

/// Exact eigenvalue of Pi L*L Pi on the span of rotates of ell:
///   Lambda_{d,2} + (Lambda_{d,0} - Lambda_{d,2}) (d-1)/d.
/// Matches the dense tangent oracle to machine precision; derivation in
/// docs/validation.md.
double ell_rotate_eigenvalue(int d, double R, Convention conv = Convention::oracle);

struct CriterionReport {
  int d;
  double R;
  double maxwell_top;  ///< the conservative candidate above
  double lambda1;
  double margin;  ///< maxwell_top - lambda1
  bool satisfied;  ///< margin > 0; certifies the ell-rotates as optimal
};

/// Sufficient criterion for the rotated-ell densities to be the tangent
/// optimizers: (Lambda_{d,0} - Lambda_{d,2})(d-1)/d > Lambda_{d,1}.
/// `satisfied` is convention-independent.
CriterionReport criterion_margin(int d, double R, Convention conv = Convention::oracle);

/// h(R) = 2/3 - (2/3) R^4/(16*36) - R^2/16, the quartic appearing in the
/// classical margin chain at d = 3.  h(2) = 43/108.
double h_poly(double R);

/// Bisection root of f in [a, b] to absolute tolerance tol.  Requires a
/// sign change; throws bracket_error otherwise.  Deterministic.
double find_crossing(const std::function<double(double)>& f, double a, double b,
                     double tol = 1e-8);

enum class DensityMode { scalar, maxwell };

/// Focused energy per unit volume: Lambda_{d,k}(R)/|B_R| for scalar mode
/// k, and maxwell_top_eigenvalue/|B_R| for the tangent optimum.  Warns
/// on stderr for R below 1e-3 where the division is cancellation-prone.
double energy_density(int d, double R, DensityMode mode, int k = 0,
                      Convention conv = Convention::oracle);

/// The R -> 0 limit of the density above (its supremum; the density is
/// decreasing).  |S^{d-1}| for the scalar mode under the oracle
/// convention, times (d-1)/d for maxwell.
double density_small_radius_limit(int d, DensityMode mode,
                                  Convention conv = Convention::oracle);

/// Radius where the energy density has dropped to half its R -> 0 limit.
double half_max_radius(int d, DensityMode mode, Convention conv = Convention::oracle,
                       int refine_level = 0);

struct MonotonicityReport {
  bool ok;
  int violating_k;  ///< first k with Lambda_k <= Lambda_{k+1}; -1 if ok
  double lambda_k;
  double lambda_k1;
};

/// Checks Lambda_{d,0} > Lambda_{d,1} > ... > Lambda_{d,kmax}.
MonotonicityReport check_monotonicity(int d, double R, int kmax,
                                      Convention conv = Convention::oracle);

struct RatioBoundReport {
  double R;
  double ratio10;  ///< Lambda_{3,1}/Lambda_{3,0}
  double ratio21;  ///< Lambda_{3,2}/Lambda_{3,1}
  /// ratio10 < R^2/16 and ratio21 < R^2/36.  False for every R > 0: the
  /// true small-R limits are R^2/15 and R^2/35 (docs/validation.md).
  bool within_16_36;
  /// ratio10 < R^2/4 and ratio21 < R^2/16, the bounds that the
  /// J_{k+1}/J_k < r/(2k+1) estimate actually yields.  Holds on (0, pi/2].
  bool within_4_16;
};

/// Ratio diagnostics at d = 3 for 0 < R <= pi/2.
RatioBoundReport ratio_bounds(double R, Convention conv = Convention::oracle);

/// True iff the 16/36 inequalities hold numerically (they do not; kept
/// as the literal check).
bool ratio_bound_check(double R);

/// Lambda values over a (k, R) lattice; immutable once built.
struct SpectralTable {
  int d;
  Convention convention;
  int kmax;
  std::vector<double> radii;
  std::vector<double> values;  ///< values[k * radii.size() + ir]

  double at(int k, std::size_t ir) const { return values[k * radii.size() + ir]; }
};

SpectralTable build_spectral_table(int d, int kmax, const std::vector<double>& radii,
                                   Convention conv = Convention::oracle);
/// Serial reference; bit-identical to the parallel builder.
SpectralTable build_spectral_table_serial(int d, int kmax,
                                          const std::vector<double>& radii,
                                          Convention conv = Convention::oracle);

}  // namespace focusopt::spectrum
