#include "gwgif/window_stats.hpp"

#include <algorithm>
#include <limits>
#include <span>
#include <vector>

namespace gwgif {
namespace {

// Clamped sliding-window sum of one row, via one prefix-sum pass. `prefix`
// is scratch of length n + 1.
void sliding_row_sum(std::span<const double> in, std::span<double> out, int radius,
                     std::vector<double>& prefix) {
  const int n = static_cast<int>(in.size());
  prefix[0] = 0.0;
  for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + in[i];
  for (int i = 0; i < n; ++i) {
    const int lo = std::max(i - radius, 0);
    const int hi = std::min(i + radius, n - 1);
    out[i] = prefix[hi + 1] - prefix[lo];
  }
}

int clamped_extent(int i, int n, int radius) {
  return std::min(i + radius, n - 1) - std::max(i - radius, 0) + 1;
}

}  // namespace

Image box_sum(const Image& img, WindowSpec window) {
  const int w = img.width();
  const int h = img.height();
  const int r = window.radius();

  // Horizontal sums feed a running vertical window: each row of horizontal
  // sums is added once when it enters and subtracted once when it leaves.
  std::vector<double> prefix(static_cast<std::size_t>(w) + 1);
  std::vector<double> entering(static_cast<std::size_t>(w));
  std::vector<double> column(static_cast<std::size_t>(w), 0.0);
  for (int y = 0; y < std::min(r, h); ++y) {
    sliding_row_sum(img.row(y), entering, r, prefix);
    for (int x = 0; x < w; ++x) column[x] += entering[x];
  }

  Image out(w, h);
  for (int y = 0; y < h; ++y) {
    if (y + r < h) {
      sliding_row_sum(img.row(y + r), entering, r, prefix);
      for (int x = 0; x < w; ++x) column[x] += entering[x];
    }
    if (y - r - 1 >= 0) {
      sliding_row_sum(img.row(y - r - 1), entering, r, prefix);
      for (int x = 0; x < w; ++x) column[x] -= entering[x];
    }
    auto dst = out.row(y);
    std::copy(column.begin(), column.end(), dst.begin());
  }
  return out;
}

Image window_count(int width, int height, WindowSpec window) {
  Image out(width, height);
  const int r = window.radius();
  for (int y = 0; y < height; ++y) {
    const int ny = clamped_extent(y, height, r);
    auto row = out.row(y);
    for (int x = 0; x < width; ++x) {
      row[x] = static_cast<double>(ny * clamped_extent(x, width, r));
    }
  }
  return out;
}

// The statistics below subtract the first pixel before summing. That keeps
// constant images exact and shrinks the running sums on natural images.
namespace {

Image shifted(const Image& img, double shift) {
  Image out = img;
  for (double& v : out.pixels()) v -= shift;
  return out;
}

void divide_by_count(Image& sum, WindowSpec window) {
  const Image count = window_count(sum.width(), sum.height(), window);
  auto s = sum.pixels();
  auto c = count.pixels();
  for (std::size_t i = 0; i < s.size(); ++i) s[i] /= c[i];
}

}  // namespace

Image window_mean(const Image& img, WindowSpec window) {
  const double shift = img(0, 0);
  Image mean = box_sum(shifted(img, shift), window);
  divide_by_count(mean, window);
  for (double& v : mean.pixels()) v += shift;
  return mean;
}

Image window_covariance(const Image& a, const Image& b, WindowSpec window) {
  require_same_shape(a, b, "window_covariance");
  const Image da = shifted(a, a(0, 0));
  const Image db = shifted(b, b(0, 0));
  Image product(a.width(), a.height());
  {
    auto pa = da.pixels();
    auto pb = db.pixels();
    auto pp = product.pixels();
    for (std::size_t i = 0; i < pp.size(); ++i) pp[i] = pa[i] * pb[i];
  }
  Image mean_a = box_sum(da, window);
  Image mean_b = box_sum(db, window);
  Image cov = box_sum(product, window);
  divide_by_count(mean_a, window);
  divide_by_count(mean_b, window);
  divide_by_count(cov, window);
  auto c = cov.pixels();
  auto ma = mean_a.pixels();
  auto mb = mean_b.pixels();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= ma[i] * mb[i];
  return cov;
}

Image window_variance(const Image& img, WindowSpec window) {
  Image var = window_covariance(img, img, window);
  // Running sums of squares accumulate rounding proportional to their total,
  // so a flat window inside a busy image can come out as +-1e-13 instead of 0.
  double total = 0.0;
  const double shift = img(0, 0);
  for (double v : img.pixels()) total += (v - shift) * (v - shift);
  const double floor_sum = 16.0 * std::numeric_limits<double>::epsilon() * total;
  const Image count = window_count(img.width(), img.height(), window);
  auto pv = var.pixels();
  auto pc = count.pixels();
  for (std::size_t i = 0; i < pv.size(); ++i) {
    if (pv[i] * pc[i] <= floor_sum) pv[i] = 0.0;
  }
  return var;
}

}  // namespace gwgif
