#pragma once

#include <vector>

#include "clg/energy.hpp"

namespace clg {

/// Piecewise-constant function on [0, length]: value[i] on the interval
/// between breaks[i-1] and breaks[i] (with the outer endpoints 0, length).
struct PiecewiseConstant1D {
  double length = 1.0;
  std::vector<double> breaks;  // strictly increasing, inside (0, length)
  std::vector<double> values;  // breaks.size() + 1 entries

  double at(double x) const;
  void validate() const;  // throws std::domain_error when malformed
};

/// Continuous piecewise-linear function given by node values; xs must run
/// from 0 to the signal length.
struct PiecewiseLinear1D {
  std::vector<double> xs;
  std::vector<double> ys;

  double at(double x) const;
  void validate() const;
};

/// Desk-scale test object: a piecewise-constant u paired with a continuous
/// piecewise-linear surrogate v on the same interval. Since v is continuous
/// its derivative has no singular part; the singular part of u' is the sum
/// of its jumps.
struct PiecewiseSignal1D {
  PiecewiseConstant1D u;
  PiecewiseLinear1D v;
};

/// Analytic evaluation of the relaxed energy for 1-D signals:
///   alpha * int F(v') + beta * [ int G(-v) + sum_jumps slope_G |jump| ]
///   + int phi(|u - f|) over the data support,
/// where slope_G is the recession slope of the coupling density (the
/// per-unit cost the relaxation charges jump parts) and the absolutely
/// continuous part of u' vanishes on constancy intervals. Piecewise-smooth
/// integrands are handled by adaptive Simpson quadrature to 1e-10 per
/// piece; F(v') and the data integrand are piecewise constant and summed
/// exactly. Pass data = nullptr for a pure regularity functional without
/// fidelity term.
double relaxed_energy_1d(const PiecewiseSignal1D& sig,
                         const EnergyParams& params,
                         const PiecewiseConstant1D* data = nullptr);

}  // namespace clg
