#include "gwgif/metrics.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "gwgif/errors.hpp"

namespace gwgif {
namespace {

constexpr int kSsimRadius = 5;
constexpr int kSsimSide = 2 * kSsimRadius + 1;
constexpr double kSsimSigma = 1.5;
constexpr double kC1 = 0.01 * 0.01;
constexpr double kC2 = 0.03 * 0.03;

std::array<double, kSsimSide> gaussian_taps() {
  std::array<double, kSsimSide> taps{};
  double sum = 0.0;
  for (int i = 0; i < kSsimSide; ++i) {
    const double d = i - kSsimRadius;
    taps[i] = std::exp(-d * d / (2.0 * kSsimSigma * kSsimSigma));
    sum += taps[i];
  }
  for (double& t : taps) t /= sum;
  return taps;
}

// Separable Gaussian filter over "valid" positions only: output is
// (w - 10) x (h - 10), entry (x, y) centered on input (x + 5, y + 5).
Image gaussian_valid(const Image& img, const std::array<double, kSsimSide>& taps) {
  const int out_w = img.width() - 2 * kSsimRadius;
  const int out_h = img.height() - 2 * kSsimRadius;
  Image horizontal(out_w, img.height());
  for (int y = 0; y < img.height(); ++y) {
    auto src = img.row(y);
    auto dst = horizontal.row(y);
    for (int x = 0; x < out_w; ++x) {
      double acc = 0.0;
      for (int t = 0; t < kSsimSide; ++t) acc += taps[t] * src[x + t];
      dst[x] = acc;
    }
  }
  Image out(out_w, out_h);
  for (int y = 0; y < out_h; ++y) {
    auto dst = out.row(y);
    for (int t = 0; t < kSsimSide; ++t) {
      auto src = horizontal.row(y + t);
      for (int x = 0; x < out_w; ++x) dst[x] += taps[t] * src[x];
    }
  }
  return out;
}

Image product(const Image& a, const Image& b) {
  Image out = a;
  auto o = out.pixels();
  auto pb = b.pixels();
  for (std::size_t i = 0; i < o.size(); ++i) o[i] *= pb[i];
  return out;
}

}  // namespace

double psnr(const Image& a, const Image& b) {
  require_same_shape(a, b, "psnr");
  double sum_sq = 0.0;
  auto pa = a.pixels();
  auto pb = b.pixels();
  for (std::size_t i = 0; i < pa.size(); ++i) {
    const double d = pa[i] - pb[i];
    sum_sq += d * d;
  }
  if (sum_sq == 0.0) return std::numeric_limits<double>::infinity();
  const double mse = sum_sq / static_cast<double>(pa.size());
  return 10.0 * std::log10(1.0 / mse);
}

double ssim(const Image& a, const Image& b) {
  require_same_shape(a, b, "ssim");
  if (a.width() < kSsimSide || a.height() < kSsimSide) {
    throw DimensionError("ssim needs images of at least 11x11");
  }
  const auto taps = gaussian_taps();
  const Image mu_a = gaussian_valid(a, taps);
  const Image mu_b = gaussian_valid(b, taps);
  const Image e_aa = gaussian_valid(product(a, a), taps);
  const Image e_bb = gaussian_valid(product(b, b), taps);
  const Image e_ab = gaussian_valid(product(a, b), taps);

  double total = 0.0;
  for (std::size_t i = 0; i < mu_a.size(); ++i) {
    const double ma = mu_a.pixels()[i];
    const double mb = mu_b.pixels()[i];
    const double var_a = e_aa.pixels()[i] - ma * ma;
    const double var_b = e_bb.pixels()[i] - mb * mb;
    const double cov = e_ab.pixels()[i] - ma * mb;
    total += ((2.0 * ma * mb + kC1) * (2.0 * cov + kC2)) /
             ((ma * ma + mb * mb + kC1) * (var_a + var_b + kC2));
  }
  return total / static_cast<double>(mu_a.size());
}

double average_gradient(const Image& img) {
  const int w = img.width();
  const int h = img.height();
  if (w < 2 || h < 2) return 0.0;
  double total = 0.0;
  for (int y = 0; y + 1 < h; ++y) {
    auto row = img.row(y);
    auto below = img.row(y + 1);
    for (int x = 0; x + 1 < w; ++x) {
      const double gx = row[x + 1] - row[x];
      const double gy = below[x] - row[x];
      total += std::sqrt((gx * gx + gy * gy) / 2.0);
    }
  }
  return total / (static_cast<double>(w - 1) * static_cast<double>(h - 1));
}

MetricsReport evaluate(const Image& output, const Image& reference) {
  return {psnr(output, reference), ssim(output, reference), average_gradient(output)};
}

}  // namespace gwgif
