#pragma once

#include <string>

#include "clg/fields.hpp"

namespace clg {

enum class SynthKind {
  Ramp,       // horizontal linear ramp 0 -> 1
  Step,       // two half-planes at 0.25 / 0.75
  Staircase,  // four vertical plateaus over the ramp's span
  Disk,       // bright disk on a dark background
};

SynthKind parse_synth_kind(const std::string& name);  // throws on bad name

struct SynthResult {
  ScalarField noisy;
  ScalarField clean;
};

/// Deterministic clean pattern of size x size pixels plus seeded Gaussian
/// noise, clamped to [0, 1]. noise_sigma == 0 returns the clean pattern in
/// both slots. Throws std::domain_error for size < 4.
SynthResult synth(SynthKind kind, int size, double noise_sigma, unsigned seed);

}  // namespace clg
