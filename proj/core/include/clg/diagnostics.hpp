#pragma once

#include <span>
#include <utility>
#include <vector>

#include "clg/energy.hpp"

namespace clg {

/// Pointwise (1 + |gradient|)^exponent of the field's forward-difference
/// gradient. Positive exponents weight steep regions, negative exponents
/// damp them; the exponent is the caller's choice of regularity surrogate.
ScalarField gradient_power_field(const ScalarField& u, double exponent);
ScalarField gradient_power_field(const VectorField2& v, double exponent);

/// Pointwise square root of the weighted second-order energy of v:
///   sum_i [ delta |d_i grad v|^2 + alpha * D2F(grad v)(d_i grad v, .) ]
/// with forward-of-forward second differences; the last two rows and
/// columns are excluded (set to zero) since the stencil is not meaningful
/// there.
ScalarField leading_curvature_field(const VectorField2& v,
                                    const EnergyParams& params);

/// Same construction on the u side, with the coupling density evaluated at
/// grad u - v and second differences of u:
///   sum_i [ delta |d_i grad u|^2 + beta * D2G(grad u - v)(d_i grad u, .) ].
ScalarField coupling_curvature_field(const ScalarField& u,
                                     const VectorField2& v,
                                     const EnergyParams& params);

/// spacing-weighted l^p norms of the gradient magnitude over an interior
/// window (a fraction of each dimension is cropped on every side; the
/// default 10% mirrors interior estimates). Throws std::domain_error for
/// p < 1.
std::vector<std::pair<double, double>> lp_gradient_norms(
    const ScalarField& u, std::span<const double> ps, double crop = 0.1);
std::vector<std::pair<double, double>> lp_gradient_norms(
    const VectorField2& v, std::span<const double> ps, double crop = 0.1);

/// Fraction of interior pixels sitting on a plateau inside a slope: the
/// gradient magnitude is below flat_tol while the surrounding 5x5 window
/// spans a value range above 10*flat_tol. Throws std::invalid_argument for
/// flat_tol <= 0.
double staircase_metric(const ScalarField& u, double flat_tol);

/// Empirical lower bound on the discrete weighted-mean Poincare constant:
/// max over random smooth trial fields of ||u - <bump, u>||_1 / ||grad u||_1
/// with a normalized bump supported on observed pixels (centered at the
/// observed pixel deepest inside the observed set). Deterministic per seed.
double poincare_probe(const Mask& mask, int trials, unsigned seed);

struct DiagnosticsConfig {
  double crop = 0.1;
  double staircase_flat_tol = 0.01;
  int poincare_trials = 20;
  unsigned poincare_seed = 1234;
};

/// One row of the per-stage observables table.
struct DiagnosticsReport {
  double phi_w12 = 0.0;        // W^{1,2} seminorm of (1+|grad v|)^(1-mu/2)
  double phi_tilde_w12 = 0.0;  // same for u with exponent 1-nu/2
  double omega_w12 = 0.0;      // exponent mu/2
  double omega_tilde_w12 = 0.0;  // exponent nu/2
  double theta_l2 = 0.0;       // interior l2 norm of the leading curvature
  std::vector<std::pair<double, double>> lp_grad_u;  // p in {1,2,4,8}
  std::vector<std::pair<double, double>> lp_grad_v;
  double staircase_fraction = 0.0;
  double poincare_ratio = 0.0;
};

DiagnosticsReport compute_diagnostics(const ScalarField& u,
                                      const VectorField2& v, const Mask& mask,
                                      const EnergyParams& params,
                                      const DiagnosticsConfig& cfg = {});

}  // namespace clg
