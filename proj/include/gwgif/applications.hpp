#pragma once

#include <cstdint>

#include "gwgif/filters.hpp"
#include "gwgif/image.hpp"

namespace gwgif {

struct EnhanceParams {
  FilterParams filter;
  double theta = 5.0;  // detail amplification
};

// Additive white Gaussian noise, sigma on the 8-bit scale.
struct NoiseSpec {
  double sigma = 25.0;
  std::uint64_t seed = 1;
};

// Self-guided base/detail split: output = clip(X + theta (X - filter(X, X)), 0, 1).
Image detail_enhance(const Image& input, const EnhanceParams& params, FilterKind kind);

// Raw noise samples on the 8-bit scale, before scaling or clipping.
//
// Samples come from std::mt19937_64 seeded with `seed`. Each pair of 64-bit
// draws (x1, x2) becomes two uniforms u = (x >> 11) * 2^-53 and then two
// normals by Box-Muller:
//   r = sqrt(-2 ln(1 - u1)), z0 = r cos(2 pi u2), z1 = r sin(2 pi u2).
// Pixels are filled in row-major order with z0, z1, z0, z1, ...
Image gaussian_noise_field(int width, int height, const NoiseSpec& noise);

// clip(X + gaussian_noise_field / 255, 0, 1). Throws ParameterError if
// sigma < 0.
Image add_gaussian_noise(const Image& input, const NoiseSpec& noise);

// Self-guided filtering of a noisy image.
Image denoise(const Image& noisy, const FilterParams& params, FilterKind kind);

}  // namespace gwgif
