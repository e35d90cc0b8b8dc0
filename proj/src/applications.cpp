#include "gwgif/applications.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "gwgif/errors.hpp"

namespace gwgif {
namespace {

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Image detail_enhance(const Image& input, const EnhanceParams& params, FilterKind kind) {
  if (!std::isfinite(params.theta)) throw ParameterError("theta must be finite");
  const Image base = apply_filter(kind, input, input, params.filter);
  Image out = input;
  auto o = out.pixels();
  auto z = base.pixels();
  for (std::size_t i = 0; i < o.size(); ++i) {
    o[i] = std::clamp(o[i] + params.theta * (o[i] - z[i]), 0.0, 1.0);
  }
  return out;
}

Image gaussian_noise_field(int width, int height, const NoiseSpec& noise) {
  if (!(noise.sigma >= 0.0) || !std::isfinite(noise.sigma)) {
    throw ParameterError("noise sigma must be finite and >= 0");
  }
  Image field(width, height);
  std::mt19937_64 rng(noise.seed);
  auto px = field.pixels();
  for (std::size_t i = 0; i < px.size(); i += 2) {
    const double u1 = unit_uniform(rng);
    const double u2 = unit_uniform(rng);
    const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    px[i] = noise.sigma * r * std::cos(angle);
    if (i + 1 < px.size()) px[i + 1] = noise.sigma * r * std::sin(angle);
  }
  return field;
}

Image add_gaussian_noise(const Image& input, const NoiseSpec& noise) {
  const Image field = gaussian_noise_field(input.width(), input.height(), noise);
  Image out = input;
  auto o = out.pixels();
  auto n = field.pixels();
  for (std::size_t i = 0; i < o.size(); ++i) {
    o[i] = std::clamp(o[i] + n[i] / 255.0, 0.0, 1.0);
  }
  return out;
}

Image denoise(const Image& noisy, const FilterParams& params, FilterKind kind) {
  return apply_filter(kind, noisy, noisy, params);
}

}  // namespace gwgif
