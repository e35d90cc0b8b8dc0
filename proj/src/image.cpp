#include "gwgif/image.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gwgif/errors.hpp"

namespace gwgif {
namespace {

void check_dimensions(int width, int height) {
  if (width < 1 || height < 1) {
    throw DimensionError("image dimensions must be positive, got " + std::to_string(width) +
                         "x" + std::to_string(height));
  }
}

}  // namespace

Image::Image(int width, int height, double fill) : width_(width), height_(height) {
  check_dimensions(width, height);
  if (!std::isfinite(fill)) throw ParameterError("image fill value must be finite");
  data_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
}

Image::Image(int width, int height, std::vector<double> data)
    : width_(width), height_(height), data_(std::move(data)) {
  check_dimensions(width, height);
  if (data_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw DimensionError("image data holds " + std::to_string(data_.size()) +
                         " samples, expected " + std::to_string(width) + "x" +
                         std::to_string(height));
  }
  if (!std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); })) {
    throw ParameterError("image data contains a non-finite sample");
  }
}

WindowSpec::WindowSpec(int radius) : radius_(radius) {
  if (radius < 1) throw ParameterError("window radius must be >= 1, got " + std::to_string(radius));
}

void require_same_shape(const Image& a, const Image& b, const char* what) {
  if (!a.same_shape(b)) {
    throw DimensionError(std::string(what) + ": shape mismatch " + std::to_string(a.width()) +
                         "x" + std::to_string(a.height()) + " vs " + std::to_string(b.width()) +
                         "x" + std::to_string(b.height()));
  }
}

Image normalize_8bit(std::span<const std::uint8_t> raw, int width, int height) {
  if (raw.empty()) throw DimensionError("normalize_8bit: empty buffer");
  std::vector<double> data(raw.size());
  std::transform(raw.begin(), raw.end(), data.begin(),
                 [](std::uint8_t v) { return static_cast<double>(v) / 255.0; });
  return Image(width, height, std::move(data));
}

std::vector<std::uint8_t> denormalize_8bit(const Image& img) {
  std::vector<std::uint8_t> out(img.size());
  std::transform(img.pixels().begin(), img.pixels().end(), out.begin(), [](double v) {
    // std::round rounds half away from zero.
    return static_cast<std::uint8_t>(std::round(std::clamp(v, 0.0, 1.0) * 255.0));
  });
  return out;
}

double global_mean(const Image& img) {
  double sum = 0.0;
  for (double v : img.pixels()) sum += v;
  return sum / static_cast<double>(img.size());
}

}  // namespace gwgif
