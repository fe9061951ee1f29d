#include "clg/duality.hpp"

#include <cmath>
#include <stdexcept>

namespace clg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_instance_grids(const ScalarField& u, const VectorField2& v,
                            const Mask& mask) {
  if (!(u.grid() == v.grid()) || !(u.grid() == mask.grid)) {
    throw std::invalid_argument("duality: u, v, mask grids do not match");
  }
}

struct Residuals {
  double r1;
  double r2;
};

Residuals feasibility_residuals(const DualPair& pair, const Mask& mask) {
  const Grid& g = pair.rho.grid();
  const ScalarField divr = div_vector(pair.rho);
  const VectorField2 divs = div_matrix(pair.sigma);
  double r1 = 0.0, r2 = 0.0;
  for (int y = 0; y < g.height; ++y) {
    for (int x = 0; x < g.width; ++x) {
      r2 = std::max(r2, norm(pair.rho.at(x, y) + divs.at(x, y)));
      if (!mask.is_observed(x, y)) {
        r1 = std::max(r1, std::abs(divr(x, y)));
      }
    }
  }
  return {r1, r2};
}

}  // namespace

DualPair extract_dual(const ScalarField& u, const VectorField2& v,
                      const Mask& mask, const EnergyParams& params) {
  require_instance_grids(u, v, mask);
  const Grid& g = u.grid();
  const VectorField2 gu = grad_scalar(u);
  const MatrixField2x2 gv = grad_vector(v);

  DualPair pair{VectorField2(g), MatrixField2x2(g)};
  for (int y = 0; y < g.height; ++y) {
    for (int x = 0; x < g.width; ++x) {
      const Vec2 w = gu.at(x, y) - v.at(x, y);
      pair.rho.set(x, y, params.delta * gu.at(x, y) +
                             params.beta * lift_gradient(params.coupling, w));
      const Mat2 jac = gv.at(x, y);
      pair.sigma.set(x, y,
                     params.delta * jac +
                         params.alpha * lift_gradient(params.leading, jac));
    }
  }
  const Residuals res = feasibility_residuals(pair, mask);
  pair.r1 = res.r1;
  pair.r2 = res.r2;
  return pair;
}

ScalarField conjugate_field(const DualPair& pair, const EnergyParams& params) {
  const Grid& g = pair.rho.grid();
  ScalarField out(g);
  for (int y = 0; y < g.height; ++y) {
    for (int x = 0; x < g.width; ++x) {
      const double cs = params.beta *
                        params.coupling.conjugate(norm(pair.rho.at(x, y)) /
                                                  params.beta);
      const double ls = params.alpha *
                        params.leading.conjugate(norm(pair.sigma.at(x, y)) /
                                                 params.alpha);
      out(x, y) = cs + ls;
    }
  }
  return out;
}

double dual_value(const DualPair& pair, const Mask& mask,
                  const EnergyParams& params, double tol_feas) {
  if (!(tol_feas > 0.0) || !std::isfinite(tol_feas)) {
    throw std::invalid_argument("dual_value: tol_feas must be > 0");
  }
  if (!(pair.rho.grid() == mask.grid)) {
    throw std::invalid_argument("dual_value: pair/mask grid mismatch");
  }
  const Residuals res = feasibility_residuals(pair, mask);
  if (res.r1 > tol_feas || res.r2 > tol_feas) return -kInf;

  const Grid& g = mask.grid;
  const ScalarField fstar = conjugate_field(pair, params);
  const ScalarField divr = div_vector(pair.rho);

  double conj_sum = 0.0;
  double data_sum = 0.0;
  for (int y = 0; y < g.height; ++y) {
    for (int x = 0; x < g.width; ++x) {
      const double c = fstar(x, y);
      if (!std::isfinite(c)) return -kInf;
      conj_sum += c;
      if (mask.is_observed(x, y)) {
        // inf over w of (a w + phi(|w - f|)) = a f - phi*(|a|), a = -div rho
        const double a = -divr(x, y);
        const double star = params.data.conjugate(std::abs(a));
        if (!std::isfinite(star)) return -kInf;
        data_sum += a * mask.f(x, y) - star;
      }
    }
  }
  return (data_sum - conj_sum) * g.cell_area();
}

GapCertificate duality_gap(const ScalarField& u, const VectorField2& v,
                           const Mask& mask, const EnergyParams& params,
                           double tol_feas) {
  const DualPair pair = extract_dual(u, v, mask, params);
  GapCertificate cert;
  cert.primal = energy(u, v, mask, params);
  cert.dual = dual_value(pair, mask, params, tol_feas);
  cert.gap = cert.primal - cert.dual;  // +inf when the pair is infeasible
  cert.normalized_gap = cert.gap / (1.0 + std::abs(cert.primal));
  cert.r1 = pair.r1;
  cert.r2 = pair.r2;
  cert.delta = params.delta;
  cert.tol_feas = tol_feas;
  return cert;
}

}  // namespace clg
