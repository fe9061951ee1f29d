#pragma once

#include <string>

#include "clg/fields.hpp"

namespace clg {

/// Loads an 8-bit grayscale image (PGM P2/P5 or PNG, chosen by content)
/// and scales sample values to [0, 1]. Throws std::runtime_error with a
/// format detail on unreadable or unsupported files.
ScalarField load_image(const std::string& path);

/// Clamps to [0, 1], quantizes to 8 bits (round half up) and writes PGM or
/// PNG according to the file extension (.png writes PNG, anything else
/// PGM P5). A load of the result differs from the clamped field by at most
/// 1/510 per pixel.
void save_image(const ScalarField& field, const std::string& path);

/// Reads a mask image of the same dimensions as f: byte 0 marks a missing
/// pixel, anything brighter an observed one; observed data is taken from f.
/// Throws std::invalid_argument on dimension mismatch and
/// std::domain_error when every pixel is masked out.
Mask load_mask(const std::string& path, const ScalarField& f);

}  // namespace clg
