#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gwgif {

// Single-channel intensity image stored row-major in double precision.
// Intensities are nominally in [0, 1] (dynamic range L = 1).
class Image {
 public:
  // Throws DimensionError unless width >= 1 and height >= 1.
  Image(int width, int height, double fill = 0.0);
  // Throws DimensionError on a size mismatch and ParameterError on a
  // non-finite sample.
  Image(int width, int height, std::vector<double> data);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return data_.size(); }

  double operator()(int x, int y) const { return data_[index(x, y)]; }
  double& operator()(int x, int y) { return data_[index(x, y)]; }

  // Views into the pixel buffer. Not available on temporaries, whose buffer
  // would be gone before the view is used.
  std::span<const double> pixels() const& { return data_; }
  std::span<double> pixels() & { return data_; }
  std::span<const double> pixels() && = delete;
  std::span<const double> row(int y) const& {
    return std::span<const double>(data_).subspan(index(0, y), width_);
  }
  std::span<double> row(int y) & {
    return std::span<double>(data_).subspan(index(0, y), width_);
  }
  std::span<const double> row(int y) && = delete;

  bool same_shape(const Image& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_;
  int height_;
  std::vector<double> data_;
};

// Square window of side 2 * radius + 1 centered on a pixel.
class WindowSpec {
 public:
  // Throws ParameterError if radius < 1.
  explicit WindowSpec(int radius);

  int radius() const { return radius_; }
  int side() const { return 2 * radius_ + 1; }

 private:
  int radius_;
};

// Throws DimensionError if the two images differ in shape. `what` names the
// operation in the message.
void require_same_shape(const Image& a, const Image& b, const char* what);

// Maps 8-bit samples to [0, 1] by dividing by 255.
Image normalize_8bit(std::span<const std::uint8_t> raw, int width, int height);

// Inverse of normalize_8bit: clips to [0, 1], scales by 255 and rounds half
// away from zero.
std::vector<std::uint8_t> denormalize_8bit(const Image& img);

double global_mean(const Image& img);

}  // namespace gwgif
