#include "focusopt/spectrum.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "focusopt/errors.hpp"
#include "focusopt/parallel.hpp"
#include "focusopt/quadrature.hpp"
#include "focusopt/specfun.hpp"

namespace focusopt::spectrum {

namespace {

constexpr double kPi = 3.14159265358979323846;

double prefactor(int d, Convention conv) {
  if (conv == Convention::oracle) return std::pow(2.0 * kPi, d);
  return std::pow(2.0 * kPi, 0.5 * d) * specfun::surface_area(d);
}

// int_0^R r J_nu(r)^2 dr on Gauss-Legendre panels of width <= pi/4 / 2^level.
double radial_integral(const specfun::BesselOrder& order, double R, int level) {
  static const quadrature::GaussLegendre gl = quadrature::gauss_legendre(16);
  const double max_width = kPi / 4.0 / static_cast<double>(1 << level);
  const int panels = std::max(1, static_cast<int>(std::ceil(R / max_width)));
  const double width = R / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double a = p * width;
    double acc = 0.0;
    for (int i = 0; i < 16; ++i) {
      const double r = a + 0.5 * width * (gl.nodes[i] + 1.0);
      const double J = specfun::bessel_j(order, r);
      acc += gl.weights[i] * r * J * J;
    }
    total += 0.5 * width * acc;
  }
  return total;
}

}  // namespace

double lambda(int d, int k, double R, Convention conv, int refine_level) {
  if (d < 2) throw std::domain_error("lambda: requires d >= 2");
  if (k < 0) throw std::domain_error("lambda: requires k >= 0");
  if (R <= 0.0) throw std::domain_error("lambda: requires R > 0");
  if (refine_level < 0 || refine_level > 8)
    throw std::domain_error("lambda: refine_level out of range");

  const specfun::BesselOrder order((d + 2.0 * k - 2.0) / 2.0);
  double coarse = radial_integral(order, R, refine_level);
  double fine = radial_integral(order, R, refine_level + 1);
  // Absolute floor: each Bessel evaluation is certified to 1e-12, which
  // bounds the attainable agreement for very small integrals.
  const double floor = 2e-12 * R * R;
  for (int extra = 0; extra < 2; ++extra) {
    if (std::abs(fine - coarse) <= std::max(1e-10 * std::abs(fine), floor)) {
      return prefactor(d, conv) * fine;
    }
    coarse = fine;
    fine = radial_integral(order, R, refine_level + 2 + extra);
  }
  char msg[128];
  std::snprintf(msg, sizeof msg,
                "lambda(d=%d, k=%d, R=%g): radial quadrature did not converge", d, k, R);
  throw accuracy_error(msg);
}

double maxwell_top_eigenvalue(int d, double R, Convention conv) {
  return (lambda(d, 0, R, conv) - lambda(d, 2, R, conv)) * (d - 1.0) / d;
}

double ell_rotate_eigenvalue(int d, double R, Convention conv) {
  const double l0 = lambda(d, 0, R, conv);
  const double l2 = lambda(d, 2, R, conv);
  return l2 + (l0 - l2) * (d - 1.0) / d;
}

CriterionReport criterion_margin(int d, double R, Convention conv) {
  CriterionReport rep;
  rep.d = d;
  rep.R = R;
  rep.maxwell_top = maxwell_top_eigenvalue(d, R, conv);
  rep.lambda1 = lambda(d, 1, R, conv);
  rep.margin = rep.maxwell_top - rep.lambda1;
  rep.satisfied = rep.margin > 0.0;
  return rep;
}

double h_poly(double R) {
  const double R2 = R * R;
  return 2.0 / 3.0 - (2.0 / 3.0) * R2 * R2 / (16.0 * 36.0) - R2 / 16.0;
}

double find_crossing(const std::function<double(double)>& f, double a, double b,
                     double tol) {
  if (!(a < b)) throw std::domain_error("find_crossing: requires a < b");
  if (!(tol > 0.0)) throw std::domain_error("find_crossing: requires tol > 0");
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0))
    throw bracket_error("find_crossing: no sign change in bracket");
  for (int it = 0; it < 200 && (b - a) > 2.0 * tol; ++it) {
    const double mid = 0.5 * (a + b);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (fa > 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

double energy_density(int d, double R, DensityMode mode, int k, Convention conv) {
  if (R <= 0.0) throw std::domain_error("energy_density: requires R > 0");
  if (R < 1e-3)
    std::fprintf(stderr,
                 "focusopt: warning: energy density at R = %g divides by a "
                 "近-zero ball volume; expect cancellation\n",
                 R);
  const double vol = specfun::ball_volume(d, R);
  if (mode == DensityMode::scalar) return lambda(d, k, R, conv) / vol;
  return maxwell_top_eigenvalue(d, R, conv) / vol;
}

double density_small_radius_limit(int d, DensityMode mode, Convention conv) {
  const double base =
      specfun::surface_area(d) * prefactor(d, conv) / std::pow(2.0 * kPi, d);
  if (mode == DensityMode::scalar) return base;
  return base * (d - 1.0) / d;
}

double half_max_radius(int d, DensityMode mode, Convention conv, int refine_level) {
  const double target = 0.5 * density_small_radius_limit(d, mode, conv);
  auto f = [&](double R) {
    const double vol = specfun::ball_volume(d, R);
    const double num = (mode == DensityMode::scalar)
                           ? lambda(d, 0, R, conv, refine_level)
                           : (lambda(d, 0, R, conv, refine_level) -
                              lambda(d, 2, R, conv, refine_level)) *
                                 (d - 1.0) / d;
    return num / vol - target;
  };
  return find_crossing(f, 0.25, 3.0, 1e-8);
}

MonotonicityReport check_monotonicity(int d, double R, int kmax, Convention conv) {
  if (kmax < 1) throw std::domain_error("check_monotonicity: requires kmax >= 1");
  MonotonicityReport rep{true, -1, 0.0, 0.0};
  double prev = lambda(d, 0, R, conv);
  for (int k = 1; k <= kmax; ++k) {
    const double cur = lambda(d, k, R, conv);
    if (!(prev > cur)) {
      rep.ok = false;
      rep.violating_k = k - 1;
      rep.lambda_k = prev;
      rep.lambda_k1 = cur;
      return rep;
    }
    prev = cur;
  }
  return rep;
}

RatioBoundReport ratio_bounds(double R, Convention conv) {
  if (!(R > 0.0) || R > kPi / 2.0 + 1e-12)
    throw std::domain_error("ratio_bounds: requires 0 < R <= pi/2");
  RatioBoundReport rep;
  rep.R = R;
  const double l0 = lambda(3, 0, R, conv);
  const double l1 = lambda(3, 1, R, conv);
  const double l2 = lambda(3, 2, R, conv);
  rep.ratio10 = l1 / l0;
  rep.ratio21 = l2 / l1;
  const double R2 = R * R;
  rep.within_16_36 = rep.ratio10 < R2 / 16.0 && rep.ratio21 < R2 / 36.0;
  rep.within_4_16 = rep.ratio10 < R2 / 4.0 && rep.ratio21 < R2 / 16.0;
  return rep;
}

bool ratio_bound_check(double R) { return ratio_bounds(R).within_16_36; }

namespace {

SpectralTable table_shell(int d, int kmax, const std::vector<double>& radii,
                          Convention conv) {
  if (kmax < 0) throw std::domain_error("build_spectral_table: kmax >= 0");
  for (double R : radii)
    if (!(R > 0.0)) throw std::domain_error("build_spectral_table: radii > 0");
  SpectralTable t;
  t.d = d;
  t.convention = conv;
  t.kmax = kmax;
  t.radii = radii;
  t.values.assign(static_cast<std::size_t>(kmax + 1) * radii.size(), 0.0);
  return t;
}

}  // namespace

SpectralTable build_spectral_table(int d, int kmax, const std::vector<double>& radii,
                                   Convention conv) {
  SpectralTable t = table_shell(d, kmax, radii, conv);
  const std::size_t nr = radii.size();
  par::parallel_for(static_cast<std::ptrdiff_t>(t.values.size()), [&](std::size_t idx) {
    const int k = static_cast<int>(idx / nr);
    const double R = t.radii[idx % nr];
    t.values[idx] = lambda(d, k, R, conv);
  });
  return t;
}

SpectralTable build_spectral_table_serial(int d, int kmax,
                                          const std::vector<double>& radii,
                                          Convention conv) {
  SpectralTable t = table_shell(d, kmax, radii, conv);
  const std::size_t nr = radii.size();
  for (std::size_t idx = 0; idx < t.values.size(); ++idx) {
    const int k = static_cast<int>(idx / nr);
    const double R = t.radii[idx % nr];
    t.values[idx] = lambda(d, k, R, conv);
  }
  return t;
}

}  // namespace focusopt::spectrum
