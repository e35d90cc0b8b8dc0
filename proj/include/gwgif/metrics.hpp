#pragma once

#include "gwgif/image.hpp"

namespace gwgif {

struct MetricsReport {
  double psnr;  // dB, +infinity for identical images
  double ssim;
  double avg_gradient;
};

// 10 log10(1 / MSE) on the [0, 1] scale; +infinity when MSE == 0.
// Throws DimensionError on a shape mismatch.
double psnr(const Image& a, const Image& b);

// Single-scale SSIM: 11x11 Gaussian window with sigma 1.5, C1 = 0.01^2,
// C2 = 0.03^2, averaged over every position where the window fits inside the
// image. Throws DimensionError on a shape mismatch or an image smaller than
// 11x11.
double ssim(const Image& a, const Image& b);

// Mean of sqrt((gx^2 + gy^2) / 2) over pixels with both forward neighbors
// (x < width - 1, y < height - 1). Zero when there is no such pixel.
double average_gradient(const Image& img);

// Scores `output` against `reference`; avg_gradient is that of `output`.
MetricsReport evaluate(const Image& output, const Image& reference);

}  // namespace gwgif
