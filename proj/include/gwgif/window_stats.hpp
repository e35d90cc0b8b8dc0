#pragma once

#include "gwgif/image.hpp"

namespace gwgif {

// Windowed statistics over clamped square windows. A window near the border
// keeps only its in-bounds pixels and divides by that pixel count. All of
// these run in O(N) independent of the radius (running sums along rows,
// then along columns).

// Sum of the in-bounds pixels of the window centered on each pixel.
Image box_sum(const Image& img, WindowSpec window);

// Number of in-bounds pixels of the window centered on each pixel.
Image window_count(int width, int height, WindowSpec window);

Image window_mean(const Image& img, WindowSpec window);

// E[a b] - E[a] E[b] per window. Throws DimensionError on a shape mismatch.
Image window_covariance(const Image& a, const Image& b, WindowSpec window);

// E[x^2] - E[x]^2 per window. Values at or below the rounding floor of the
// running sums (16 ulp of the image-wide sum of squares, spread over the
// window) are reported as exactly zero, so flat windows stay flat. Elsewhere
// bit-identical to window_covariance(img, img).
Image window_variance(const Image& img, WindowSpec window);

}  // namespace gwgif
