#pragma once

#include <limits>
#include <utility>

#include "clg/linalg.hpp"

namespace clg {

enum class DensityKind {
  MuElliptic,  // g''(t) = (1+t)^(-mu), integrated twice from 0
  MinSurface,  // g(t)  = sqrt(eps^2 + t^2) - eps
};

/// Convex even integrand of linear growth, represented through its radial
/// profile g: [0,inf) -> [0,inf) with g(0) = g'(0) = 0 and g'' > 0.
/// The lifted density on vectors or matrices is p |-> g(|p|).
///
/// Two families are provided. The mu-elliptic family has
/// g''(t) = (1+t)^(-mu) exactly, so its Hessian satisfies the two-sided
/// decay bounds with the given ellipticity exponent mu. The minimal-surface
/// family sqrt(eps^2+t^2)-eps is 3-elliptic.
class RadialDensity {
 public:
  /// mu > 1 required (linear growth fails otherwise). mu == 2 uses the
  /// logarithmic antiderivative g(t) = t - log(1+t), the pointwise limit
  /// of the general closed form, so the family is continuous in mu.
  static RadialDensity mu_elliptic(double mu);

  /// eps > 0 required.
  static RadialDensity min_surface(double eps);

  DensityKind kind() const noexcept { return kind_; }

  /// Family parameter: mu for MuElliptic, eps for MinSurface.
  double parameter() const noexcept { return param_; }

  /// lim_{t->inf} g(t)/t. Also the sharp bound on |g'| and hence on the
  /// norm of the lifted gradient (the constant c in the derivative bound).
  double recession_slope() const noexcept { return slope_; }

  /// Ellipticity exponent of the family: mu for MuElliptic, 3 for
  /// MinSurface.
  double ellipticity() const noexcept;

  double value(double t) const;      // g(t)
  double slope_at(double t) const;   // g'(t), in [0, recession_slope)
  double curvature(double t) const;  // g''(t), > 0

  struct Derivs {
    double g;
    double g1;
    double g2;
  };
  /// Value and first two derivatives at t. Throws std::domain_error for
  /// negative or non-finite t.
  Derivs derivs(double t) const;

  /// One-dimensional convex conjugate g*(s) = sup_{t>=0} (s t - g(t)).
  /// Finite for s < recession_slope. At s == recession_slope returns the
  /// limit value from below when that limit is finite (MinSurface: eps;
  /// MuElliptic with mu > 2: 1/((mu-1)(mu-2))), +infinity otherwise.
  /// Throws std::domain_error for s < 0 or non-finite s.
  double conjugate(double s) const;

  /// Inverse of g' on [0, recession_slope): the t with g'(t) = s.
  /// Closed form for MuElliptic, Newton with bisection safeguard otherwise
  /// (|g'(t) - s| <= 1e-12, at most 100 iterations).
  double slope_inverse(double s) const;

  /// Constants of the linear-growth lower bound
  /// g(t) >= c1 t - c2 for all t >= 0, with c1 = recession_slope / 2.
  struct GrowthBound {
    double c1;
    double c2;
  };
  GrowthBound linear_growth_bound() const;

 private:
  RadialDensity(DensityKind k, double p, double s)
      : kind_(k), param_(p), slope_(s) {}

  DensityKind kind_;
  double param_;
  double slope_;
};

RadialDensity make_mu_elliptic(double mu);
RadialDensity make_min_surface(double eps);

/// Gradient of the lifted density p |-> g(|p|): g'(|p|) p/|p|, zero at the
/// origin. Magnitude is strictly below recession_slope.
Vec2 lift_gradient(const RadialDensity& d, Vec2 p);
Mat2 lift_gradient(const RadialDensity& d, Mat2 p);

/// Hessian quadratic form of the lifted density:
///   g''(|p|) (<p,q>/|p|)^2 + g'(|p|)/|p| (|q|^2 - (<p,q>/|p|)^2),
/// and g''(0) |q|^2 at p = 0. Positive for q != 0.
double lift_hessian_quadform(const RadialDensity& d, Vec2 p, Vec2 q);
double lift_hessian_quadform(const RadialDensity& d, Mat2 p, Mat2 q);

/// Empirical check of the two-sided Hessian decay bounds. Samples pairs
/// (p, q) with |p| log-uniform in [1e-2, 1e3], alternating q parallel to p
/// with q in a random direction, and records
///   lower ratio: Q (1+|p|)^mu_claimed / |q|^2   (must stay above a floor)
///   upper ratio: Q (1+|p|)         / |q|^2       (must stay below a cap).
/// Deterministic for a given n_samples. n_samples == 0 passes vacuously.
struct EllipticityReport {
  int samples = 0;
  double min_lower_ratio = std::numeric_limits<double>::infinity();
  double max_lower_ratio = -std::numeric_limits<double>::infinity();
  double min_upper_ratio = std::numeric_limits<double>::infinity();
  double max_upper_ratio = -std::numeric_limits<double>::infinity();
  bool pass = true;

  static constexpr double kLowerFloor = 0.05;
  static constexpr double kUpperCap = 25.0;
};
EllipticityReport ellipticity_probe(const RadialDensity& d, double mu_claimed,
                                    int n_samples);

enum class DataKind {
  Quadratic,     // phi(t) = w t^2
  Power,         // phi(t) = w t^p, p > 1
  LinearGrowth,  // phi(t) = w (sqrt(1+t^2) - 1)
};

/// Fidelity profile phi: [0,inf) -> [0,inf), convex, increasing,
/// differentiable, phi(0) = 0. Applied to |u - f| on observed pixels.
class DataTerm {
 public:
  static DataTerm quadratic(double weight = 1.0);
  static DataTerm power(double exponent, double weight = 1.0);
  static DataTerm linear_growth(double weight = 1.0);

  DataKind kind() const noexcept { return kind_; }
  double weight() const noexcept { return weight_; }
  double exponent() const noexcept { return exponent_; }

  double value(double t) const;  // phi(t), t >= 0
  double deriv(double t) const;  // phi'(t)

  /// One-dimensional conjugate phi*(s) = sup_{t>=0} (s t - phi(t)).
  /// +infinity for LinearGrowth when s > weight. Computed by the same
  /// Newton/bisection slope inversion as the densities, except for the
  /// quadratic closed form.
  double conjugate(double s) const;

 private:
  DataTerm(DataKind k, double e, double w)
      : kind_(k), exponent_(e), weight_(w) {}

  DataKind kind_;
  double exponent_;
  double weight_;
};

/// (phi(t), phi'(t)). Throws std::domain_error for t < 0.
std::pair<double, double> data_term_eval(double t, const DataTerm& data);

}  // namespace clg
