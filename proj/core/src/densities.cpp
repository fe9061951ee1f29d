#include "clg/densities.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace clg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_sample_point(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw std::domain_error("radial density: argument must be finite and >= 0");
  }
}

// Solves g1(t) = s for t >= 0 given the strictly increasing slope g1 and its
// derivative g2. Expects 0 <= s < sup g1. Newton with a maintained bracket;
// falls back to bisection whenever a step leaves the bracket.
template <typename F1, typename F2>
double invert_increasing_slope(F1&& g1, F2&& g2, double s) {
  if (s <= 0.0) return 0.0;
  double lo = 0.0;
  double hi = 1.0;
  while (g1(hi) < s) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e300) break;
  }
  double t = 0.5 * (lo + hi);
  for (int it = 0; it < 100; ++it) {
    const double f = g1(t) - s;
    if (std::abs(f) <= 1e-12) return t;
    if (f < 0.0) {
      lo = t;
    } else {
      hi = t;
    }
    const double df = g2(t);
    double next = t - f / df;
    if (!(next > lo) || !(next < hi) || !std::isfinite(next)) {
      next = 0.5 * (lo + hi);
    }
    t = next;
  }
  return t;
}

}  // namespace

RadialDensity RadialDensity::mu_elliptic(double mu) {
  if (!(mu > 1.0) || !std::isfinite(mu)) {
    throw std::domain_error(
        "mu_elliptic: mu must be a finite value > 1 (linear growth fails "
        "otherwise)");
  }
  return RadialDensity(DensityKind::MuElliptic, mu, 1.0 / (mu - 1.0));
}

RadialDensity RadialDensity::min_surface(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw std::domain_error("min_surface: eps must be a finite value > 0");
  }
  return RadialDensity(DensityKind::MinSurface, eps, 1.0);
}

RadialDensity make_mu_elliptic(double mu) {
  return RadialDensity::mu_elliptic(mu);
}
RadialDensity make_min_surface(double eps) {
  return RadialDensity::min_surface(eps);
}

double RadialDensity::ellipticity() const noexcept {
  return kind_ == DensityKind::MuElliptic ? param_ : 3.0;
}

double RadialDensity::value(double t) const {
  require_sample_point(t);
  if (kind_ == DensityKind::MuElliptic) {
    const double mu = param_;
    if (mu == 2.0) return t - std::log1p(t);
    // t/(mu-1) - ((1+t)^(2-mu) - 1) / ((mu-1)(2-mu)), written with expm1
    // to avoid cancellation for small t.
    const double num = std::expm1((2.0 - mu) * std::log1p(t));
    return t / (mu - 1.0) - num / ((mu - 1.0) * (2.0 - mu));
  }
  const double eps = param_;
  if (t > eps) {
    // Overflow-safe form for large t.
    const double r = eps / t;
    return t * std::sqrt(1.0 + r * r) - eps;
  }
  // sqrt(eps^2 + t^2) - eps without cancellation at small t.
  return t * t / (std::sqrt(eps * eps + t * t) + eps);
}

double RadialDensity::slope_at(double t) const {
  require_sample_point(t);
  if (kind_ == DensityKind::MuElliptic) {
    const double mu = param_;
    return -std::expm1((1.0 - mu) * std::log1p(t)) / (mu - 1.0);
  }
  const double eps = param_;
  if (t > eps) {
    const double r = eps / t;
    return 1.0 / std::sqrt(1.0 + r * r);
  }
  return t / std::sqrt(eps * eps + t * t);
}

double RadialDensity::curvature(double t) const {
  require_sample_point(t);
  if (kind_ == DensityKind::MuElliptic) {
    return std::pow(1.0 + t, -param_);
  }
  const double eps = param_;
  const double r2 = eps * eps + t * t;
  return eps * eps / (r2 * std::sqrt(r2));
}

RadialDensity::Derivs RadialDensity::derivs(double t) const {
  return {value(t), slope_at(t), curvature(t)};
}

double RadialDensity::slope_inverse(double s) const {
  if (!(s >= 0.0) || !std::isfinite(s)) {
    throw std::domain_error("slope_inverse: s must be finite and >= 0");
  }
  if (s >= slope_) {
    throw std::domain_error("slope_inverse: s must be below recession slope");
  }
  if (kind_ == DensityKind::MuElliptic) {
    const double mu = param_;
    // (1+t)^(1-mu) = 1 - (mu-1) s
    return std::pow(1.0 - (mu - 1.0) * s, 1.0 / (1.0 - mu)) - 1.0;
  }
  return invert_increasing_slope([this](double t) { return slope_at(t); },
                                 [this](double t) { return curvature(t); }, s);
}

double RadialDensity::conjugate(double s) const {
  if (!(s >= 0.0) || !std::isfinite(s)) {
    throw std::domain_error("conjugate: s must be finite and >= 0");
  }
  if (s > slope_) return kInf;
  if (s == slope_) {
    // Limit of s t(s) - g(t(s)) as s increases to the recession slope.
    if (kind_ == DensityKind::MinSurface) return param_;
    const double mu = param_;
    if (mu > 2.0) return 1.0 / ((mu - 1.0) * (mu - 2.0));
    return kInf;
  }
  const double t = slope_inverse(s);
  return s * t - value(t);
}

RadialDensity::GrowthBound RadialDensity::linear_growth_bound() const {
  // g - (slope/2) t is decreasing until g' reaches slope/2 and increasing
  // afterwards, so c2 = (slope/2) t_half dominates the dip (g >= 0).
  const double c1 = 0.5 * slope_;
  const double t_half = slope_inverse(c1);
  return {c1, c1 * t_half};
}

namespace {

template <typename T>
T lift_gradient_impl(const RadialDensity& d, T p) {
  if (!all_finite(p)) {
    throw std::domain_error("lift_gradient: non-finite entries");
  }
  const double n = norm(p);
  if (n == 0.0) return T{};
  return (d.slope_at(n) / n) * p;
}

template <typename T>
double lift_hessian_quadform_impl(const RadialDensity& d, T p, T q) {
  if (!all_finite(p) || !all_finite(q)) {
    throw std::domain_error("lift_hessian_quadform: non-finite entries");
  }
  const double n = norm(p);
  const double q2 = dot(q, q);
  if (n == 0.0) return d.curvature(0.0) * q2;
  const double radial = dot(p, q) / n;
  return d.curvature(n) * radial * radial +
         d.slope_at(n) / n * (q2 - radial * radial);
}

}  // namespace

Vec2 lift_gradient(const RadialDensity& d, Vec2 p) {
  return lift_gradient_impl(d, p);
}
Mat2 lift_gradient(const RadialDensity& d, Mat2 p) {
  return lift_gradient_impl(d, p);
}
double lift_hessian_quadform(const RadialDensity& d, Vec2 p, Vec2 q) {
  return lift_hessian_quadform_impl(d, p, q);
}
double lift_hessian_quadform(const RadialDensity& d, Mat2 p, Mat2 q) {
  return lift_hessian_quadform_impl(d, p, q);
}

EllipticityReport ellipticity_probe(const RadialDensity& d, double mu_claimed,
                                    int n_samples) {
  EllipticityReport rep;
  if (n_samples <= 0) return rep;

  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  for (int i = 0; i < n_samples; ++i) {
    const double mag = std::pow(10.0, -2.0 + 5.0 * unit(rng));
    const double ap = 2.0 * M_PI * unit(rng);
    const Vec2 p{mag * std::cos(ap), mag * std::sin(ap)};
    Vec2 q;
    if (i % 2 == 0) {
      q = {std::cos(ap), std::sin(ap)};  // aligned: probes the radial decay
    } else {
      const double aq = 2.0 * M_PI * unit(rng);
      q = {std::cos(aq), std::sin(aq)};
    }
    const double quad = lift_hessian_quadform(d, p, q);
    const double q2 = dot(q, q);
    const double lower = quad * std::pow(1.0 + mag, mu_claimed) / q2;
    const double upper = quad * (1.0 + mag) / q2;
    rep.min_lower_ratio = std::min(rep.min_lower_ratio, lower);
    rep.max_lower_ratio = std::max(rep.max_lower_ratio, lower);
    rep.min_upper_ratio = std::min(rep.min_upper_ratio, upper);
    rep.max_upper_ratio = std::max(rep.max_upper_ratio, upper);
    ++rep.samples;
  }
  rep.pass = rep.min_lower_ratio >= EllipticityReport::kLowerFloor &&
             rep.max_upper_ratio <= EllipticityReport::kUpperCap;
  return rep;
}

DataTerm DataTerm::quadratic(double weight) {
  if (!(weight > 0.0) || !std::isfinite(weight)) {
    throw std::domain_error("data term: weight must be finite and > 0");
  }
  return DataTerm(DataKind::Quadratic, 2.0, weight);
}

DataTerm DataTerm::power(double exponent, double weight) {
  if (!(weight > 0.0) || !std::isfinite(weight)) {
    throw std::domain_error("data term: weight must be finite and > 0");
  }
  if (!(exponent > 1.0) || !std::isfinite(exponent)) {
    throw std::domain_error("data term: power exponent must be > 1");
  }
  return DataTerm(DataKind::Power, exponent, weight);
}

DataTerm DataTerm::linear_growth(double weight) {
  if (!(weight > 0.0) || !std::isfinite(weight)) {
    throw std::domain_error("data term: weight must be finite and > 0");
  }
  return DataTerm(DataKind::LinearGrowth, 1.0, weight);
}

double DataTerm::value(double t) const {
  require_sample_point(t);
  switch (kind_) {
    case DataKind::Quadratic:
      return weight_ * t * t;
    case DataKind::Power:
      return weight_ * std::pow(t, exponent_);
    case DataKind::LinearGrowth:
      return weight_ * (t * t / (std::sqrt(1.0 + t * t) + 1.0));
  }
  return 0.0;
}

double DataTerm::deriv(double t) const {
  require_sample_point(t);
  switch (kind_) {
    case DataKind::Quadratic:
      return 2.0 * weight_ * t;
    case DataKind::Power:
      return weight_ * exponent_ * std::pow(t, exponent_ - 1.0);
    case DataKind::LinearGrowth:
      return weight_ * t / std::sqrt(1.0 + t * t);
  }
  return 0.0;
}

double DataTerm::conjugate(double s) const {
  if (!(s >= 0.0) || !std::isfinite(s)) {
    throw std::domain_error("data term conjugate: s must be finite and >= 0");
  }
  if (s == 0.0) return 0.0;
  if (kind_ == DataKind::Quadratic) {
    return s * s / (4.0 * weight_);
  }
  if (kind_ == DataKind::LinearGrowth) {
    if (s > weight_) return kInf;
    if (s == weight_) return weight_;
  }
  const double t =
      invert_increasing_slope([this](double u) { return deriv(u); },
                              [this](double u) {
                                // second derivative of phi
                                if (kind_ == DataKind::Power) {
                                  return weight_ * exponent_ *
                                         (exponent_ - 1.0) *
                                         std::pow(u, exponent_ - 2.0);
                                }
                                const double r2 = 1.0 + u * u;
                                return weight_ / (r2 * std::sqrt(r2));
                              },
                              s);
  return s * t - value(t);
}

std::pair<double, double> data_term_eval(double t, const DataTerm& data) {
  return {data.value(t), data.deriv(t)};
}

}  // namespace clg
