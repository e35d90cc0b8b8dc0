#include "gwgif/gradient.hpp"

#include <cmath>

namespace gwgif {
namespace {

// out(x, y) = img(x + dx, y + dy) - img(x, y) where the neighbor exists, else 0.
Image shifted_difference(const Image& img, int dx, int dy) {
  const int w = img.width();
  const int h = img.height();
  Image out(w, h);
  const int y_begin = dy < 0 ? -dy : 0;
  const int y_end = dy > 0 ? h - dy : h;
  const int x_begin = dx < 0 ? -dx : 0;
  const int x_end = dx > 0 ? w - dx : w;
  for (int y = y_begin; y < y_end; ++y) {
    auto center = img.row(y);
    auto neighbor = img.row(y + dy);
    auto dst = out.row(y);
    for (int x = x_begin; x < x_end; ++x) dst[x] = neighbor[x + dx] - center[x];
  }
  return out;
}

}  // namespace

GradientXY gradient_xy(const Image& img) {
  return {shifted_difference(img, 1, 0), shifted_difference(img, 0, 1)};
}

GradientField gradient_4dir(const Image& img) {
  GradientField field{
      Image(img.width(), img.height()),
      {shifted_difference(img, 0, -1), shifted_difference(img, 0, 1),
       shifted_difference(img, -1, 0), shifted_difference(img, 1, 0)}};
  auto mag = field.magnitude.pixels();
  for (std::size_t i = 0; i < mag.size(); ++i) {
    double sum_sq = 0.0;
    for (const Image& c : field.components) {
      const double d = c.pixels()[i];
      sum_sq += d * d;
    }
    mag[i] = std::sqrt(sum_sq);
  }
  return field;
}

}  // namespace gwgif
