#include "clg/energy.hpp"

#include <cmath>
#include <stdexcept>

namespace clg {

EnergyParams::EnergyParams(double alpha_, double beta_, RadialDensity f,
                           RadialDensity g, DataTerm d, double delta_)
    : alpha(alpha_),
      beta(beta_),
      leading(f),
      coupling(g),
      data(d),
      delta(delta_) {
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    throw std::domain_error("energy params: alpha and beta must be > 0");
  }
  if (!(delta >= 0.0) || !std::isfinite(delta)) {
    throw std::domain_error("energy params: delta must be finite and >= 0");
  }
}

namespace {

void require_instance_grids(const ScalarField& u, const VectorField2& v,
                            const Mask& mask) {
  if (!(u.grid() == v.grid()) || !(u.grid() == mask.grid)) {
    throw std::invalid_argument("energy: u, v, mask grids do not match");
  }
}

}  // namespace

EnergyTerms energy_terms(const ScalarField& u, const VectorField2& v,
                         const Mask& mask, const EnergyParams& params) {
  require_instance_grids(u, v, mask);
  const Grid& g = u.grid();
  const VectorField2 gu = grad_scalar(u);
  const MatrixField2x2 gv = grad_vector(v);

  double leading = 0.0, coupling = 0.0, data = 0.0, dirichlet = 0.0;
  for (int y = 0; y < g.height; ++y) {
    for (int x = 0; x < g.width; ++x) {
      const Mat2 jac = gv.at(x, y);
      const Vec2 du = gu.at(x, y);
      const Vec2 w = du - v.at(x, y);
      leading += params.leading.value(norm(jac));
      coupling += params.coupling.value(norm(w));
      dirichlet += dot(du, du) + dot(jac, jac);
      if (mask.is_observed(x, y)) {
        data += params.data.value(std::abs(u(x, y) - mask.f(x, y)));
      }
    }
  }
  const double area = g.cell_area();
  return {params.alpha * leading * area, params.beta * coupling * area,
          data * area, dirichlet * area};
}

double energy(const ScalarField& u, const VectorField2& v, const Mask& mask,
              const EnergyParams& params) {
  return energy_terms(u, v, mask, params).base();
}

double regularized_energy(const ScalarField& u, const VectorField2& v,
                          const Mask& mask, const EnergyParams& params) {
  const EnergyTerms t = energy_terms(u, v, mask, params);
  return t.base() + 0.5 * params.delta * t.dirichlet;
}

EnergyGradient regularized_energy_gradient(const ScalarField& u,
                                           const VectorField2& v,
                                           const Mask& mask,
                                           const EnergyParams& params) {
  require_instance_grids(u, v, mask);
  const Grid& g = u.grid();
  const VectorField2 gu = grad_scalar(u);
  const MatrixField2x2 gv = grad_vector(v);

  // Flux fields: delta grad u + beta DG(grad u - v) on the u side, and
  // delta grad v + alpha DF(grad v) on the v side.
  VectorField2 flux_u(g);
  MatrixField2x2 flux_v(g);
  VectorField2 coupling_grad(g);  // beta DG(grad u - v), reused for dv
  for (int y = 0; y < g.height; ++y) {
    for (int x = 0; x < g.width; ++x) {
      const Vec2 w = gu.at(x, y) - v.at(x, y);
      const Vec2 cg = params.beta * lift_gradient(params.coupling, w);
      coupling_grad.set(x, y, cg);
      flux_u.set(x, y, params.delta * gu.at(x, y) + cg);
      const Mat2 jac = gv.at(x, y);
      flux_v.set(x, y, params.delta * jac +
                           params.alpha * lift_gradient(params.leading, jac));
    }
  }

  ScalarField du = div_vector(flux_u);
  for (double& t : du.values()) t = -t;
  for (int y = 0; y < g.height; ++y) {
    for (int x = 0; x < g.width; ++x) {
      if (mask.is_observed(x, y)) {
        const double r = u(x, y) - mask.f(x, y);
        const double sgn = r > 0.0 ? 1.0 : (r < 0.0 ? -1.0 : 0.0);
        du(x, y) += params.data.deriv(std::abs(r)) * sgn;
      }
    }
  }

  VectorField2 dv = div_matrix(flux_v);
  for (int y = 0; y < g.height; ++y) {
    for (int x = 0; x < g.width; ++x) {
      dv.set(x, y, -dv.at(x, y) - coupling_grad.at(x, y));
    }
  }

  return {std::move(du), std::move(dv)};
}

}  // namespace clg
