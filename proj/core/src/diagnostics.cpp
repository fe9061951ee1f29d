#include "clg/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace clg {

namespace {

ScalarField magnitude_of_gradient(const ScalarField& u) {
  const VectorField2 g = grad_scalar(u);
  ScalarField out(u.grid());
  for (int y = 0; y < u.grid().height; ++y) {
    for (int x = 0; x < u.grid().width; ++x) {
      out(x, y) = norm(g.at(x, y));
    }
  }
  return out;
}

ScalarField magnitude_of_gradient(const VectorField2& v) {
  const MatrixField2x2 g = grad_vector(v);
  ScalarField out(v.grid());
  for (int y = 0; y < v.grid().height; ++y) {
    for (int x = 0; x < v.grid().width; ++x) {
      out(x, y) = norm(g.at(x, y));
    }
  }
  return out;
}

ScalarField power_field(ScalarField mag, double exponent) {
  for (double& t : mag.values()) t = std::pow(1.0 + t, exponent);
  return mag;
}

std::vector<std::pair<double, double>> lp_norms_of(
    const ScalarField& mag, std::span<const double> ps, double crop) {
  const Grid& g = mag.grid();
  const int mx = int(std::floor(crop * g.width));
  const int my = int(std::floor(crop * g.height));
  std::vector<std::pair<double, double>> out;
  for (double p : ps) {
    if (!(p >= 1.0)) {
      throw std::domain_error("lp_gradient_norms: p must be >= 1");
    }
    double acc = 0.0;
    for (int y = my; y < g.height - my; ++y) {
      for (int x = mx; x < g.width - mx; ++x) {
        acc += std::pow(mag(x, y), p);
      }
    }
    out.emplace_back(p, std::pow(acc * g.cell_area(), 1.0 / p));
  }
  return out;
}

}  // namespace

ScalarField gradient_power_field(const ScalarField& u, double exponent) {
  return power_field(magnitude_of_gradient(u), exponent);
}

ScalarField gradient_power_field(const VectorField2& v, double exponent) {
  return power_field(magnitude_of_gradient(v), exponent);
}

ScalarField leading_curvature_field(const VectorField2& v,
                                    const EnergyParams& params) {
  const Grid& g = v.grid();
  const MatrixField2x2 gv = grad_vector(v);
  ScalarField out(g);
  for (int y = 0; y + 2 < g.height; ++y) {
    for (int x = 0; x + 2 < g.width; ++x) {
      const Mat2 here = gv.at(x, y);
      const double inv = 1.0 / g.spacing;
      const Mat2 dx = inv * (gv.at(x + 1, y) - here);
      const Mat2 dy = inv * (gv.at(x, y + 1) - here);
      double acc = 0.0;
      acc += params.delta * dot(dx, dx) +
             params.alpha * lift_hessian_quadform(params.leading, here, dx);
      acc += params.delta * dot(dy, dy) +
             params.alpha * lift_hessian_quadform(params.leading, here, dy);
      out(x, y) = std::sqrt(acc);
    }
  }
  return out;
}

ScalarField coupling_curvature_field(const ScalarField& u,
                                     const VectorField2& v,
                                     const EnergyParams& params) {
  if (!(u.grid() == v.grid())) {
    throw std::invalid_argument("coupling_curvature_field: grid mismatch");
  }
  const Grid& g = u.grid();
  const VectorField2 gu = grad_scalar(u);
  ScalarField out(g);
  for (int y = 0; y + 2 < g.height; ++y) {
    for (int x = 0; x + 2 < g.width; ++x) {
      const Vec2 w = gu.at(x, y) - v.at(x, y);
      const double inv = 1.0 / g.spacing;
      const Vec2 dx = inv * (gu.at(x + 1, y) - gu.at(x, y));
      const Vec2 dy = inv * (gu.at(x, y + 1) - gu.at(x, y));
      double acc = 0.0;
      acc += params.delta * dot(dx, dx) +
             params.beta * lift_hessian_quadform(params.coupling, w, dx);
      acc += params.delta * dot(dy, dy) +
             params.beta * lift_hessian_quadform(params.coupling, w, dy);
      out(x, y) = std::sqrt(acc);
    }
  }
  return out;
}

std::vector<std::pair<double, double>> lp_gradient_norms(
    const ScalarField& u, std::span<const double> ps, double crop) {
  return lp_norms_of(magnitude_of_gradient(u), ps, crop);
}

std::vector<std::pair<double, double>> lp_gradient_norms(
    const VectorField2& v, std::span<const double> ps, double crop) {
  return lp_norms_of(magnitude_of_gradient(v), ps, crop);
}

double staircase_metric(const ScalarField& u, double flat_tol) {
  if (!(flat_tol > 0.0) || !std::isfinite(flat_tol)) {
    throw std::invalid_argument("staircase_metric: flat_tol must be > 0");
  }
  constexpr int kRadius = 2;
  const Grid& g = u.grid();
  const ScalarField mag = magnitude_of_gradient(u);
  long flat = 0, interior = 0;
  for (int y = kRadius; y < g.height - kRadius; ++y) {
    for (int x = kRadius; x < g.width - kRadius; ++x) {
      ++interior;
      if (mag(x, y) >= flat_tol) continue;
      double lo = u(x, y), hi = u(x, y);
      for (int dy = -kRadius; dy <= kRadius; ++dy) {
        for (int dx = -kRadius; dx <= kRadius; ++dx) {
          const double t = u(x + dx, y + dy);
          lo = std::min(lo, t);
          hi = std::max(hi, t);
        }
      }
      if (hi - lo > 10.0 * flat_tol) ++flat;
    }
  }
  return interior > 0 ? double(flat) / double(interior) : 0.0;
}

double poincare_probe(const Mask& mask, int trials, unsigned seed) {
  if (trials < 1) {
    throw std::invalid_argument("poincare_probe: trials must be >= 1");
  }
  const Grid& g = mask.grid;

  // Chebyshev distance to the nearest unobserved-or-outside pixel, by a
  // two-pass chamfer sweep. The deepest pixel anchors the bump.
  const int far = g.width + g.height;
  std::vector<int> dist(g.npixels(), 0);
  for (std::size_t i = 0; i < g.npixels(); ++i) {
    dist[i] = mask.observed[i] ? far : 0;
  }
  auto at = [&](int x, int y) {
    return (x >= 0 && x < g.width && y >= 0 && y < g.height)
               ? dist[g.index(x, y)]
               : 0;
  };
  for (int y = 0; y < g.height; ++y) {
    for (int x = 0; x < g.width; ++x) {
      int& d = dist[g.index(x, y)];
      d = std::min({d, at(x - 1, y) + 1, at(x - 1, y - 1) + 1, at(x, y - 1) + 1,
                    at(x + 1, y - 1) + 1});
    }
  }
  for (int y = g.height - 1; y >= 0; --y) {
    for (int x = g.width - 1; x >= 0; --x) {
      int& d = dist[g.index(x, y)];
      d = std::min({d, at(x + 1, y) + 1, at(x + 1, y + 1) + 1, at(x, y + 1) + 1,
                    at(x - 1, y + 1) + 1});
    }
  }
  int best = 0, cx = 0, cy = 0;
  for (int y = 0; y < g.height; ++y) {
    for (int x = 0; x < g.width; ++x) {
      if (dist[g.index(x, y)] > best) {
        best = dist[g.index(x, y)];
        cx = x;
        cy = y;
      }
    }
  }
  if (best < 1) {
    throw std::domain_error("poincare_probe: mask has no observed pixel");
  }

  // Quartic bump of radius best around (cx, cy), normalized to unit mass.
  ScalarField bump(g);
  double mass = 0.0;
  const double r2 = double(best) * double(best);
  for (int y = 0; y < g.height; ++y) {
    for (int x = 0; x < g.width; ++x) {
      const double d2 = double(x - cx) * (x - cx) + double(y - cy) * (y - cy);
      if (d2 < r2) {
        const double t = 1.0 - d2 / r2;
        bump(x, y) = t * t;
        mass += t * t;
      }
    }
  }
  for (double& t : bump.values()) t /= mass * g.cell_area();

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    // Low-frequency cosine mixture; never constant since at least one mode
    // has a nonzero frequency pair.
    ScalarField f(g);
    for (int mode = 0; mode < 4; ++mode) {
      int kx = int(u01(rng) * 4.0);
      int ky = int(u01(rng) * 4.0);
      if (mode == 0 && kx == 0 && ky == 0) kx = 1;
      if (kx == 0 && ky == 0) continue;
      const double amp = 2.0 * u01(rng) - 1.0;
      for (int y = 0; y < g.height; ++y) {
        for (int x = 0; x < g.width; ++x) {
          f(x, y) += amp * std::cos(M_PI * kx * (x + 0.5) / g.width) *
                     std::cos(M_PI * ky * (y + 0.5) / g.height);
        }
      }
    }
    const double mean = inner(bump, f);
    double num = 0.0, den = 0.0;
    const VectorField2 gf = grad_scalar(f);
    for (int y = 0; y < g.height; ++y) {
      for (int x = 0; x < g.width; ++x) {
        num += std::abs(f(x, y) - mean);
        den += norm(gf.at(x, y));
      }
    }
    if (den > 0.0) worst = std::max(worst, num / den / g.spacing);
  }
  return worst;
}

DiagnosticsReport compute_diagnostics(const ScalarField& u,
                                      const VectorField2& v, const Mask& mask,
                                      const EnergyParams& params,
                                      const DiagnosticsConfig& cfg) {
  const double mu = params.leading.ellipticity();
  const double nu = params.coupling.ellipticity();
  const double two[] = {2.0};
  const double ps[] = {1.0, 2.0, 4.0, 8.0};

  DiagnosticsReport rep;
  rep.phi_w12 =
      lp_gradient_norms(gradient_power_field(v, 1.0 - 0.5 * mu), two,
                        cfg.crop)[0]
          .second;
  rep.phi_tilde_w12 =
      lp_gradient_norms(gradient_power_field(u, 1.0 - 0.5 * nu), two,
                        cfg.crop)[0]
          .second;
  rep.omega_w12 =
      lp_gradient_norms(gradient_power_field(v, 0.5 * mu), two, cfg.crop)[0]
          .second;
  rep.omega_tilde_w12 =
      lp_gradient_norms(gradient_power_field(u, 0.5 * nu), two, cfg.crop)[0]
          .second;

  const ScalarField theta = leading_curvature_field(v, params);
  const Grid& g = u.grid();
  const int mx = int(std::floor(cfg.crop * g.width));
  const int my = int(std::floor(cfg.crop * g.height));
  double acc = 0.0;
  for (int y = my; y < g.height - my; ++y) {
    for (int x = mx; x < g.width - mx; ++x) {
      acc += theta(x, y) * theta(x, y);
    }
  }
  rep.theta_l2 = std::sqrt(acc * g.cell_area());

  rep.lp_grad_u = lp_gradient_norms(u, ps, cfg.crop);
  rep.lp_grad_v = lp_gradient_norms(v, ps, cfg.crop);
  rep.staircase_fraction = staircase_metric(u, cfg.staircase_flat_tol);
  rep.poincare_ratio =
      poincare_probe(mask, cfg.poincare_trials, cfg.poincare_seed);
  return rep;
}

}  // namespace clg
