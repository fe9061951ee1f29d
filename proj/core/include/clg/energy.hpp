#pragma once

#include "clg/densities.hpp"
#include "clg/fields.hpp"
#include "clg/operators.hpp"

namespace clg {

/// Full model configuration: leading density F on Jacobians, coupling
/// density G on grad(u) - v, their weights, the data term, and the
/// smoothing weight delta of the regularized problem.
struct EnergyParams {
  double alpha;
  double beta;
  RadialDensity leading;   // F
  RadialDensity coupling;  // G
  DataTerm data;
  double delta = 0.0;

  EnergyParams(double alpha_, double beta_, RadialDensity f, RadialDensity g,
               DataTerm d, double delta_ = 0.0);
};

struct EnergyTerms {
  double leading = 0.0;    // alpha * integral F(grad v)
  double coupling = 0.0;   // beta * integral G(grad u - v)
  double data = 0.0;       // integral phi(|u - f|) over observed pixels
  double dirichlet = 0.0;  // |grad u|^2 + |grad v|^2, spacing-weighted
  double base() const { return leading + coupling + data; }
};

EnergyTerms energy_terms(const ScalarField& u, const VectorField2& v,
                         const Mask& mask, const EnergyParams& params);

/// The unregularized energy E(u, v). delta is ignored.
double energy(const ScalarField& u, const VectorField2& v, const Mask& mask,
              const EnergyParams& params);

/// E(u, v) + (delta/2) (|grad u|^2 + |grad v|^2).
double regularized_energy(const ScalarField& u, const VectorField2& v,
                          const Mask& mask, const EnergyParams& params);

struct EnergyGradient {
  ScalarField du;
  VectorField2 dv;
};

/// Exact gradient of regularized_energy with respect to (u, v), returned as
/// the representer under the spacing^2-weighted pairing, i.e. the pointwise
/// residual of the two coupled Euler-Lagrange equations:
///   du = -div(delta grad u + beta DG(grad u - v)) + phi'(|u-f|) sgn(u-f)
///   dv = -div(delta grad v + alpha DF(grad v)) - beta DG(grad u - v).
EnergyGradient regularized_energy_gradient(const ScalarField& u,
                                           const VectorField2& v,
                                           const Mask& mask,
                                           const EnergyParams& params);

}  // namespace clg
