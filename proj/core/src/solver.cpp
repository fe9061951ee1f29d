#include "clg/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>

namespace clg {

std::vector<double> SolverConfig::default_delta_schedule() {
  // 1e-1 * 4^-k, k = 0..5
  std::vector<double> s;
  double d = 1e-1;
  for (int k = 0; k < 6; ++k) {
    s.push_back(d);
    d *= 0.25;
  }
  return s;
}

void SolverConfig::validate() const {
  if (!(grad_tol > 0.0)) {
    throw std::invalid_argument("solver config: grad_tol must be > 0");
  }
  if (max_iters < 0) {
    throw std::invalid_argument("solver config: max_iters must be >= 0");
  }
  if (!(armijo.c > 0.0 && armijo.c < 1.0) ||
      !(armijo.shrink > 0.0 && armijo.shrink < 1.0) ||
      !(armijo.init_step > 0.0)) {
    throw std::invalid_argument("solver config: bad line-search parameters");
  }
  if (delta_schedule.empty()) {
    throw std::invalid_argument("solver config: empty delta schedule");
  }
  for (std::size_t i = 0; i < delta_schedule.size(); ++i) {
    if (!(delta_schedule[i] > 0.0)) {
      throw std::invalid_argument("solver config: schedule entries must be > 0");
    }
    if (i > 0 && !(delta_schedule[i] < delta_schedule[i - 1])) {
      throw std::invalid_argument(
          "solver config: schedule must strictly decrease");
    }
  }
}

const char* to_string(Termination t) {
  switch (t) {
    case Termination::Converged:
      return "converged";
    case Termination::MaxIterations:
      return "max_iterations";
    case Termination::LineSearchBreakdown:
      return "line_search_breakdown";
  }
  return "unknown";
}

namespace {

double grad_sup(const EnergyGradient& g) {
  return std::max(sup_abs(g.du), sup_norm(g.dv));
}

double grad_inner(const EnergyGradient& a, const EnergyGradient& b) {
  return inner(a.du, b.du) + inner(a.dv, b.dv);
}

}  // namespace

SolveResult minimize_stage(const ScalarField& u0, const VectorField2& v0,
                           const Mask& mask, const EnergyParams& params,
                           const SolverConfig& cfg) {
  if (!(params.delta > 0.0)) {
    throw std::invalid_argument("minimize_stage: delta must be > 0");
  }
  if (!all_finite(u0) || !all_finite(v0)) {
    throw std::runtime_error("minimize_stage: non-finite initial fields");
  }
  const auto t_start = std::chrono::steady_clock::now();

  SolveResult res{u0, v0, {}};
  StageReport rep;
  rep.delta = params.delta;

  double e = regularized_energy(res.u, res.v, mask, params);
  if (!std::isfinite(e)) {
    throw std::runtime_error("minimize_stage: non-finite initial energy");
  }
  EnergyGradient g = regularized_energy_gradient(res.u, res.v, mask, params);
  if (!all_finite(g.du) || !all_finite(g.dv)) {
    throw std::runtime_error("minimize_stage: non-finite gradient at start");
  }
  double gsup = grad_sup(g);
  rep.energy_trajectory.push_back(e);

  double last_step = cfg.armijo.init_step;
  bool have_prev = false;
  ScalarField prev_u;
  VectorField2 prev_v;
  EnergyGradient prev_g;

  int it = 0;
  rep.reason = Termination::Converged;
  while (gsup > cfg.grad_tol && it < cfg.max_iters) {
    // Trial step: Barzilai-Borwein estimate from the last accepted move,
    // falling back to growing the previous accepted step.
    double trial =
        it == 0 ? cfg.armijo.init_step : last_step / cfg.armijo.shrink;
    if (have_prev) {
      const ScalarField su = add_scaled(res.u, -1.0, prev_u);
      const VectorField2 sv = add_scaled(res.v, -1.0, prev_v);
      const double ss = inner(su, su) + inner(sv, sv);
      const double sy = inner(su, add_scaled(g.du, -1.0, prev_g.du)) +
                        inner(sv, add_scaled(g.dv, -1.0, prev_g.dv));
      if (std::isfinite(sy) && sy > 0.0 && std::isfinite(ss)) {
        trial = ss / sy;
      }
    }
    trial = std::clamp(trial, 1e-12, 1e8);

    const double slope = -grad_inner(g, g);  // directional derivative along -g
    double step = trial;
    bool accepted = false;
    ScalarField u_t;
    VectorField2 v_t;
    double e_t = 0.0;
    while (step >= 1e-16) {
      u_t = add_scaled(res.u, -step, g.du);
      v_t = add_scaled(res.v, -step, g.dv);
      e_t = regularized_energy(u_t, v_t, mask, params);
      if (e_t <= e + cfg.armijo.c * step * slope) {  // NaN fails this test
        accepted = true;
        break;
      }
      step *= cfg.armijo.shrink;
    }
    if (!accepted) {
      rep.reason = Termination::LineSearchBreakdown;
      break;
    }

    prev_u = std::move(res.u);
    prev_v = std::move(res.v);
    prev_g = std::move(g);
    have_prev = true;
    res.u = std::move(u_t);
    res.v = std::move(v_t);
    e = e_t;
    last_step = step;
    ++it;

    g = regularized_energy_gradient(res.u, res.v, mask, params);
    if (!all_finite(g.du) || !all_finite(g.dv)) {
      throw std::runtime_error("minimize_stage: non-finite gradient at iteration " +
                               std::to_string(it));
    }
    gsup = grad_sup(g);
    rep.energy_trajectory.push_back(e);
  }
  if (rep.reason != Termination::LineSearchBreakdown && gsup > cfg.grad_tol) {
    rep.reason = Termination::MaxIterations;
  }

  rep.iterations = it;
  rep.final_energy = e;
  rep.final_grad_sup = gsup;
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();
  res.stages.push_back(std::move(rep));
  return res;
}

SolveResult continuation_solve_from(const ScalarField& u0,
                                    const VectorField2& v0, const Mask& mask,
                                    const EnergyParams& params,
                                    const SolverConfig& cfg) {
  cfg.validate();
  SolveResult res{u0, v0, {}};
  for (double delta : cfg.delta_schedule) {
    EnergyParams stage_params = params;
    stage_params.delta = delta;
    const ScalarField& su = cfg.warm_start || res.stages.empty() ? res.u : u0;
    const VectorField2& sv = cfg.warm_start || res.stages.empty() ? res.v : v0;
    SolveResult stage = minimize_stage(su, sv, mask, stage_params, cfg);
    res.u = std::move(stage.u);
    res.v = std::move(stage.v);
    StageReport rep = std::move(stage.stages.front());
    rep.certificate = duality_gap(res.u, res.v, mask, stage_params,
                                  cfg.feas_tol_factor * cfg.grad_tol);
    res.stages.push_back(std::move(rep));
  }
  return res;
}

SolveResult continuation_solve(const Mask& mask, const EnergyParams& params,
                               const SolverConfig& cfg) {
  // Observed data extended by its mean keeps the initial energy below the
  // zero-state energy while starting near the data.
  ScalarField u0(mask.grid, mask.observed_mean());
  for (int y = 0; y < mask.grid.height; ++y) {
    for (int x = 0; x < mask.grid.width; ++x) {
      if (mask.is_observed(x, y)) u0(x, y) = mask.f(x, y);
    }
  }
  return continuation_solve_from(u0, VectorField2(mask.grid), mask, params,
                                 cfg);
}

UniquenessReport uniqueness_probe(const Mask& mask, const EnergyParams& params,
                                  const SolverConfig& cfg,
                                  std::span<const unsigned> seeds) {
  UniquenessReport rep;
  std::vector<SolveResult> runs;
  for (unsigned seed : seeds) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    ScalarField u0(mask.grid);
    VectorField2 v0(mask.grid);
    for (double& t : u0.values()) t = u01(rng);
    for (std::size_t i = 0; i < v0.xs().size(); ++i) {
      v0.xs()[i] = u01(rng) - 0.5;
      v0.ys()[i] = u01(rng) - 0.5;
    }
    runs.push_back(continuation_solve_from(u0, v0, mask, params, cfg));
  }
  rep.runs = int(runs.size());

  const Grid& g = mask.grid;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    for (std::size_t j = i + 1; j < runs.size(); ++j) {
      const auto [wi, ji] = lambda_apply(runs[i].u, runs[i].v);
      const auto [wj, jj] = lambda_apply(runs[j].u, runs[j].v);
      for (int y = 0; y < g.height; ++y) {
        for (int x = 0; x < g.width; ++x) {
          const double ud = std::abs(runs[i].u(x, y) - runs[j].u(x, y));
          rep.u_dist_all = std::max(rep.u_dist_all, ud);
          if (mask.is_observed(x, y)) {
            rep.u_dist_observed = std::max(rep.u_dist_observed, ud);
          }
          rep.coupling_dist =
              std::max(rep.coupling_dist, norm(wi.at(x, y) - wj.at(x, y)));
          rep.jacobian_dist =
              std::max(rep.jacobian_dist, norm(ji.at(x, y) - jj.at(x, y)));
        }
      }
    }
  }
  return rep;
}

}  // namespace clg
