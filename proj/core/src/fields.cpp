#include "clg/fields.hpp"

#include <cmath>
#include <stdexcept>

namespace clg {

Grid::Grid(int w, int h, double sp) : width(w), height(h), spacing(sp) {
  if (w < 1 || h < 1) {
    throw std::invalid_argument("grid: width and height must be >= 1");
  }
  if (!(sp > 0.0) || !std::isfinite(sp)) {
    throw std::invalid_argument("grid: spacing must be finite and > 0");
  }
}

Mask Mask::all_observed(const ScalarField& data) {
  Mask m;
  m.grid = data.grid();
  m.observed.assign(m.grid.npixels(), 1);
  m.f = data;
  return m;
}

Mask Mask::from_indicator(const ScalarField& data,
                          const ScalarField& indicator) {
  if (!(data.grid() == indicator.grid())) {
    throw std::invalid_argument("mask: indicator grid does not match data");
  }
  Mask m;
  m.grid = data.grid();
  m.observed.assign(m.grid.npixels(), 0);
  std::size_t count = 0;
  for (std::size_t i = 0; i < m.grid.npixels(); ++i) {
    if (indicator.values()[i] > 0.0) {
      m.observed[i] = 1;
      ++count;
    }
  }
  if (count == 0) {
    throw std::domain_error("mask: at least one pixel must be observed");
  }
  m.f = data;
  return m;
}

std::size_t Mask::observed_count() const {
  std::size_t n = 0;
  for (auto o : observed) n += (o != 0);
  return n;
}

double Mask::observed_mean() const {
  double sum = 0.0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (observed[i]) {
      sum += f.values()[i];
      ++n;
    }
  }
  return n ? sum / double(n) : 0.0;
}

}  // namespace clg
