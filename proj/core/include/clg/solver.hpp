#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clg/duality.hpp"
#include "clg/energy.hpp"

namespace clg {

struct ArmijoParams {
  double c = 1e-4;        // sufficient-decrease fraction, in (0, 1)
  double shrink = 0.5;    // backtracking factor, in (0, 1)
  double init_step = 1.0; // first trial step of a stage
};

struct SolverConfig {
  double grad_tol = 1e-5;  // sup-norm stopping threshold on the gradient
  int max_iters = 50000;
  ArmijoParams armijo;
  /// Strictly decreasing positive smoothing weights; continuation visits
  /// them in order with warm starts.
  std::vector<double> delta_schedule = default_delta_schedule();
  bool warm_start = true;
  /// Feasibility tolerance of the per-stage certificate, as a multiple of
  /// grad_tol.
  double feas_tol_factor = 10.0;

  static std::vector<double> default_delta_schedule();
  void validate() const;  // throws std::invalid_argument
};

enum class Termination {
  Converged,            // gradient sup-norm reached grad_tol
  MaxIterations,        // iteration budget exhausted
  LineSearchBreakdown,  // step shrank below 1e-16; conditioning problem
};

const char* to_string(Termination t);

struct StageReport {
  double delta = 0.0;
  int iterations = 0;
  double final_energy = 0.0;    // regularized energy at the stage output
  double final_grad_sup = 0.0;
  double wall_seconds = 0.0;
  Termination reason = Termination::Converged;
  std::vector<double> energy_trajectory;  // accepted iterates, nonincreasing
  std::optional<GapCertificate> certificate;
};

struct SolveResult {
  ScalarField u;
  VectorField2 v;
  std::vector<StageReport> stages;
};

/// Minimizes the regularized energy at the fixed delta in params by
/// monotone descent: steepest-descent directions with Armijo backtracking,
/// trial steps seeded by a Barzilai-Borwein estimate (a plain monotone
/// first-order scheme; the stopping rule is the gradient sup-norm).
/// Requires params.delta > 0. Throws std::runtime_error when a non-finite
/// energy or gradient is encountered.
SolveResult minimize_stage(const ScalarField& u0, const VectorField2& v0,
                           const Mask& mask, const EnergyParams& params,
                           const SolverConfig& cfg);

/// Runs minimize_stage along cfg.delta_schedule with warm starts,
/// initialized at (f extended by its observed mean, 0). Each stage report
/// carries a duality-gap certificate at the stage's delta.
SolveResult continuation_solve(const Mask& mask, const EnergyParams& params,
                               const SolverConfig& cfg);

/// continuation_solve from an explicit starting point.
SolveResult continuation_solve_from(const ScalarField& u0,
                                    const VectorField2& v0, const Mask& mask,
                                    const EnergyParams& params,
                                    const SolverConfig& cfg);

/// Pairwise agreement of solves started from independent random
/// initializations: sup-distances of u on observed pixels (and on all
/// pixels, reported for inspection), of grad(u) - v, and of grad(v).
struct UniquenessReport {
  int runs = 0;
  double u_dist_observed = 0.0;
  double u_dist_all = 0.0;
  double coupling_dist = 0.0;
  double jacobian_dist = 0.0;
};

UniquenessReport uniqueness_probe(const Mask& mask, const EnergyParams& params,
                                  const SolverConfig& cfg,
                                  std::span<const unsigned> seeds);

}  // namespace clg
