#pragma once

#include <array>

#include "gwgif/image.hpp"

namespace gwgif {

// Forward differences along x and y.
struct GradientXY {
  Image gx;
  Image gy;
};

// Neighbor-minus-center differences in the four axis directions and their
// combined magnitude sqrt(up^2 + down^2 + left^2 + right^2).
struct GradientField {
  enum Direction { kUp = 0, kDown = 1, kLeft = 2, kRight = 3 };

  Image magnitude;
  std::array<Image, 4> components;
};

// gx(x, y) = f(x + 1, y) - f(x, y), gy(x, y) = f(x, y + 1) - f(x, y). The last
// column of gx and the last row of gy are zero.
GradientXY gradient_xy(const Image& img);

// Whole-image shift-and-subtract in four directions. A difference whose
// neighbor falls outside the image is zero.
GradientField gradient_4dir(const Image& img);

}  // namespace gwgif
