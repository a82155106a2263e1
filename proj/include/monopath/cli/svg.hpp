#pragma once

#include <string>
#include <vector>

#include "monopath/arrangements.hpp"

namespace monopath::cli {

// A hyperplane of a d = 3 arrangement cut by x_1 + x_2 + x_3 = 0, expressed in
// the basis u_1 = (1,-1,0)/sqrt2, u_2 = (1,1,-2)/sqrt6 and clipped to the
// square [-half_width, half_width]^2.
struct SliceSegment {
  Hyperplane hyperplane;
  double x1, y1, x2, y2;
};

// Throws UnsupportedDimension unless d = 3. Hyperplanes missing the window are
// dropped.
std::vector<SliceSegment> slice_segments(const Composition& lambda, double half_width);

// One <line> per segment; coordinates rounded to 6 decimals.
std::string slice_svg(const Composition& lambda, double half_width);

}  // namespace monopath::cli
