#include "clg/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace clg {

SynthKind parse_synth_kind(const std::string& name) {
  if (name == "ramp") return SynthKind::Ramp;
  if (name == "step") return SynthKind::Step;
  if (name == "staircase") return SynthKind::Staircase;
  if (name == "disk") return SynthKind::Disk;
  throw std::invalid_argument("unknown synthetic pattern '" + name +
                              "' (ramp|step|staircase|disk)");
}

SynthResult synth(SynthKind kind, int size, double noise_sigma,
                  unsigned seed) {
  if (size < 4) {
    throw std::domain_error("synth: size must be >= 4");
  }
  const Grid g(size, size);
  ScalarField clean(g);
  for (int y = 0; y < size; ++y) {
    for (int x = 0; x < size; ++x) {
      double v = 0.0;
      switch (kind) {
        case SynthKind::Ramp:
          v = double(x) / (size - 1);
          break;
        case SynthKind::Step:
          v = x < size / 2 ? 0.25 : 0.75;
          break;
        case SynthKind::Staircase: {
          const int level = std::min(3, 4 * x / size);
          v = level / 3.0;
          break;
        }
        case SynthKind::Disk: {
          const double cx = 0.5 * (size - 1), cy = 0.5 * (size - 1);
          const double r = 0.25 * size;
          const double d = std::hypot(x - cx, y - cy);
          v = d <= r ? 0.85 : 0.15;
          break;
        }
      }
      clean(x, y) = v;
    }
  }

  ScalarField noisy = clean;
  if (noise_sigma > 0.0) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, noise_sigma);
    for (double& t : noisy.values()) {
      t = std::clamp(t + gauss(rng), 0.0, 1.0);
    }
  }
  return {std::move(noisy), std::move(clean)};
}

}  // namespace clg
