#pragma once

#include "clg/energy.hpp"

namespace clg {

/// Dual fields paired against the two slots of the coupled operator:
/// rho against grad(u) - v, sigma against grad(v). Extracted pairs carry
/// the feasibility residuals of the discrete dual constraints.
struct DualPair {
  VectorField2 rho;
  MatrixField2x2 sigma;
  double r1 = 0.0;  // sup of |div rho| over unobserved pixels
  double r2 = 0.0;  // sup of |rho + div sigma|
};

/// Dual candidate at (u, v):
///   rho   = delta grad u + beta  DG(grad u - v)
///   sigma = delta grad v + alpha DF(grad v).
/// At a minimizer of the regularized energy the residuals are bounded by a
/// fixed multiple of the gradient sup-norm; the density part is pointwise
/// strictly inside beta (resp. alpha) times the recession slope.
DualPair extract_dual(const ScalarField& u, const VectorField2& v,
                      const Mask& mask, const EnergyParams& params);

/// Pointwise conjugate cost of a dual pair, using the exactly scaled
/// conjugates (beta G)*(rho) = beta g_G*(|rho|/beta) and
/// (alpha F)*(sigma) = alpha g_F*(|sigma|/alpha). Entries are +infinity
/// outside the conjugate domains; no clamping is applied.
ScalarField conjugate_field(const DualPair& pair, const EnergyParams& params);

/// Value of the dual functional: minus the integrated conjugate cost plus
/// the exact pointwise partial minimum of the data coupling,
///   sum over observed pixels of (a f - phi*(|a|)), a = -div rho.
/// Returns -infinity when a feasibility residual exceeds tol_feas or a
/// conjugate is infinite somewhere. Throws std::invalid_argument for
/// tol_feas <= 0.
double dual_value(const DualPair& pair, const Mask& mask,
                  const EnergyParams& params, double tol_feas);

/// Optimality certificate: primal energy (without the delta term), dual
/// value, gap, and gap normalized by 1 + |primal|.
struct GapCertificate {
  double primal = 0.0;
  double dual = 0.0;
  double gap = 0.0;
  double normalized_gap = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
  double delta = 0.0;
  double tol_feas = 0.0;
};

GapCertificate duality_gap(const ScalarField& u, const VectorField2& v,
                           const Mask& mask, const EnergyParams& params,
                           double tol_feas);

}  // namespace clg
