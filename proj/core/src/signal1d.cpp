#include "clg/signal1d.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace clg {

namespace {

bool strictly_increasing(const std::vector<double>& xs) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) return false;
  }
  return true;
}

// Adaptive Simpson with absolute tolerance. The integrands are smooth per
// piece, so the classic recursion converges quickly.
double simpson(const std::function<double(double)>& f, double a, double fa,
               double b, double fb, double m, double fm, double whole,
               double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         simpson(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  if (!(b > a)) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson(f, a, fa, b, fb, m, fm, whole, tol, 40);
}

constexpr double kQuadTol = 1e-10;

}  // namespace

void PiecewiseConstant1D::validate() const {
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw std::domain_error("piecewise signal: length must be > 0");
  }
  if (values.size() != breaks.size() + 1) {
    throw std::domain_error(
        "piecewise signal: need one value per interval (breaks + 1)");
  }
  if (!strictly_increasing(breaks)) {
    throw std::domain_error("piecewise signal: breaks must strictly increase");
  }
  if (!breaks.empty() && (breaks.front() <= 0.0 || breaks.back() >= length)) {
    throw std::domain_error(
        "piecewise signal: breaks must lie strictly inside (0, length)");
  }
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw std::domain_error("piecewise signal: non-finite value");
    }
  }
}

double PiecewiseConstant1D::at(double x) const {
  std::size_t i =
      std::upper_bound(breaks.begin(), breaks.end(), x) - breaks.begin();
  return values[i];
}

void PiecewiseLinear1D::validate() const {
  if (xs.size() < 2 || xs.size() != ys.size()) {
    throw std::domain_error("piecewise linear: need matching xs/ys, >= 2");
  }
  if (!strictly_increasing(xs)) {
    throw std::domain_error("piecewise linear: xs must strictly increase");
  }
  for (double v : ys) {
    if (!std::isfinite(v)) {
      throw std::domain_error("piecewise linear: non-finite value");
    }
  }
}

double PiecewiseLinear1D::at(double x) const {
  if (x <= xs.front()) return ys.front();
  if (x >= xs.back()) return ys.back();
  std::size_t i = std::upper_bound(xs.begin(), xs.end(), x) - xs.begin();
  const double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
  return ys[i - 1] + t * (ys[i] - ys[i - 1]);
}

double relaxed_energy_1d(const PiecewiseSignal1D& sig,
                         const EnergyParams& params,
                         const PiecewiseConstant1D* data) {
  sig.u.validate();
  sig.v.validate();
  const double length = sig.u.length;
  if (std::abs(sig.v.xs.front()) > 1e-12 ||
      std::abs(sig.v.xs.back() - length) > 1e-12) {
    throw std::domain_error("piecewise signal: v must span [0, length]");
  }
  if (data) {
    data->validate();
    if (data->length != length) {
      throw std::domain_error("piecewise signal: data length mismatch");
    }
  }

  // Leading term: v' is constant per node interval.
  double leading = 0.0;
  for (std::size_t i = 1; i < sig.v.xs.size(); ++i) {
    const double len = sig.v.xs[i] - sig.v.xs[i - 1];
    const double slope = (sig.v.ys[i] - sig.v.ys[i - 1]) / len;
    leading += params.leading.value(std::abs(slope)) * len;
  }

  // Absolutely continuous coupling part: u' = 0 between jumps, so the
  // integrand is G(|v|), smooth per v-piece.
  double coupling_ac = 0.0;
  for (std::size_t i = 1; i < sig.v.xs.size(); ++i) {
    coupling_ac += integrate(
        [&](double x) { return params.coupling.value(std::abs(sig.v.at(x))); },
        sig.v.xs[i - 1], sig.v.xs[i], kQuadTol);
  }

  // Jump part: each jump of u is charged at the recession slope of G.
  double coupling_jump = 0.0;
  for (std::size_t i = 0; i < sig.u.breaks.size(); ++i) {
    coupling_jump += params.coupling.recession_slope() *
                     std::abs(sig.u.values[i + 1] - sig.u.values[i]);
  }

  // Data term: u and f are piecewise constant; sum overlaps exactly.
  double fidelity = 0.0;
  if (data) {
    std::vector<double> cuts{0.0};
    cuts.insert(cuts.end(), sig.u.breaks.begin(), sig.u.breaks.end());
    cuts.insert(cuts.end(), data->breaks.begin(), data->breaks.end());
    cuts.push_back(length);
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t i = 1; i < cuts.size(); ++i) {
      const double len = cuts[i] - cuts[i - 1];
      if (len <= 0.0) continue;
      const double mid = 0.5 * (cuts[i] + cuts[i - 1]);
      fidelity +=
          params.data.value(std::abs(sig.u.at(mid) - data->at(mid))) * len;
    }
  }

  return params.alpha * leading +
         params.beta * (coupling_ac + coupling_jump) + fidelity;
}

}  // namespace clg
