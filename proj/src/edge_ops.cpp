#include "gwgif/edge_ops.hpp"

#include <cmath>
#include <string>

#include "gwgif/errors.hpp"
#include "gwgif/window_stats.hpp"

namespace gwgif {
namespace {

void require_positive_eps(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw ParameterError("eps must be positive and finite, got " + std::to_string(eps));
  }
}

// (field(p) + eps) * mean_q 1 / (field(q) + eps)
Image normalized_ratio(const Image& field, double eps) {
  double inverse_sum = 0.0;
  for (double v : field.pixels()) inverse_sum += 1.0 / (v + eps);
  const double inverse_mean = inverse_sum / static_cast<double>(field.size());
  Image out = field;
  for (double& v : out.pixels()) v = (v + eps) * inverse_mean;
  return out;
}

// Local standard deviation divided by its image-wide mean.
Image coefficient_of_variation(const Image& img, WindowSpec window) {
  Image sigma = window_variance(img, window);
  for (double& v : sigma.pixels()) v = std::sqrt(v);
  const double mean = global_mean(sigma);
  if (mean == 0.0) return Image(img.width(), img.height(), 0.0);
  for (double& v : sigma.pixels()) v /= mean;
  return sigma;
}

}  // namespace

Image edge_aware_wgif(const Image& guide, double eps) {
  require_positive_eps(eps);
  return normalized_ratio(window_variance(guide, WindowSpec(1)), eps);
}

Image edge_aware_zeta(const Image& guide, const GradientField& grad, WindowSpec filter_window) {
  require_same_shape(guide, grad.magnitude, "edge_aware_zeta");
  const Image phi_grad = coefficient_of_variation(grad.magnitude, WindowSpec(1));
  Image zeta = coefficient_of_variation(guide, filter_window);
  auto z = zeta.pixels();
  auto pg = phi_grad.pixels();
  auto g = grad.magnitude.pixels();
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = pg[i] * z[i] * g[i];
  return zeta;
}

Image gamma_from_zeta(const Image& zeta, double eps) {
  require_positive_eps(eps);
  return normalized_ratio(zeta, eps);
}

Image edge_aware_gamma(const Image& guide, const GradientField& grad, WindowSpec filter_window,
                       double eps) {
  require_positive_eps(eps);
  return gamma_from_zeta(edge_aware_zeta(guide, grad, filter_window), eps);
}

Image edge_protect_eta(const GradientField& grad, double threshold_factor) {
  const double threshold = threshold_factor * global_mean(grad.magnitude);
  Image eta = grad.magnitude;
  for (double& v : eta.pixels()) v = v > threshold ? 1.0 : 0.0;
  return eta;
}

Image weight_map_mu(const Image& input, WindowSpec k, double th_svar, double thre) {
  if (!(th_svar > 0.0) || !std::isfinite(th_svar)) {
    throw ParameterError("th_svar must be positive and finite, got " + std::to_string(th_svar));
  }
  if (!std::isfinite(thre)) throw ParameterError("thre must be finite");

  Image scaled = input;
  for (double& v : scaled.pixels()) v *= 255.0;
  Image mu = box_sum(scaled, k);
  const Image count = window_count(input.width(), input.height(), k);
  auto m = mu.pixels();
  auto s = scaled.pixels();
  auto c = count.pixels();
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double svar = std::abs(m[i] - c[i] * s[i]) / 255.0;
    m[i] = svar <= th_svar ? 1.0 - svar / th_svar : thre;
  }
  return mu;
}

}  // namespace gwgif
