#pragma once

#include "gwgif/gradient.hpp"
#include "gwgif/image.hpp"

namespace gwgif {

// (0.0001 * L)^2 with dynamic range L = 1.
inline constexpr double kDefaultEpsilon = 1e-8;
inline constexpr double kDefaultThresholdFactor = 1.7;

// Edge-aware weighting of the weighted guided filter:
//   gamma(p) = (var3(p) + eps) * mean_q 1 / (var3(q) + eps)
// where var3 is the guide variance over 3x3 windows.
Image edge_aware_wgif(const Image& guide, double eps = kDefaultEpsilon);

// Edge activity zeta = phi_grad * phi_guide * g, where
//   phi_grad(p)  = std of g over the 3x3 window / image mean of that std map,
//   phi_guide(p) = std of the guide over the filter window / image mean of
//                  that std map,
// and g is the four-direction gradient magnitude. A std map whose mean is
// zero yields phi = 0.
Image edge_aware_zeta(const Image& guide, const GradientField& grad, WindowSpec filter_window);

// gamma(p) = (zeta(p) + eps) * mean_q 1 / (zeta(q) + eps).
Image gamma_from_zeta(const Image& zeta, double eps = kDefaultEpsilon);

// Gradient-domain edge-aware constraint: gamma_from_zeta(edge_aware_zeta(...)).
// Throws DimensionError if `grad` does not match the guide's shape.
Image edge_aware_gamma(const Image& guide, const GradientField& grad, WindowSpec filter_window,
                       double eps = kDefaultEpsilon);

// 1 where g > threshold_factor * mean(g), 0 elsewhere.
Image edge_protect_eta(const GradientField& grad,
                       double threshold_factor = kDefaultThresholdFactor);

// Aggregation weights on the [0, 1] intensity scale:
//   svar(p) = | sum_{q in window(p)} X(q) - count(p) * X(p) |
//   mu(p)   = 1 - svar(p) / th_svar   if svar(p) <= th_svar
//           = thre                    otherwise.
// Sums are formed on the 8-bit scale and divided by 255 afterwards, so inputs
// that came from 8-bit data give exact results. Throws ParameterError unless
// th_svar > 0.
Image weight_map_mu(const Image& input, WindowSpec k, double th_svar, double thre);

}  // namespace gwgif
