#pragma once

#include <optional>
#include <string_view>

#include "gwgif/edge_ops.hpp"
#include "gwgif/image.hpp"

namespace gwgif {

struct FilterParams {
  int radius = 16;                // filter window radius
  double lambda = 1.0;            // ridge regularization
  double threshold_factor = kDefaultThresholdFactor;  // eta threshold
  int k = 7;                      // weight-map window radius
  double th_svar = 11.0;          // weight-map svar threshold, [0, 1] scale
  double thre = 0.0;              // weight assigned above th_svar
  double eps = kDefaultEpsilon;

  // Throws ParameterError on radius < 1, k < 1, lambda < 0, th_svar <= 0,
  // eps <= 0 or any non-finite value.
  void validate() const;
};

enum class FilterKind { kGif, kWgif, kGwgif };

std::string_view filter_name(FilterKind kind);
std::optional<FilterKind> parse_filter_kind(std::string_view name);

// Per-window linear model Z = a * G + b before overlapping windows are merged.
struct LinearCoefficients {
  Image a;
  Image b;
};

// Intermediate fields of the gradient-domain weighted filter.
struct EdgeFieldSet {
  Image zeta;
  Image gamma;
  Image eta;
  Image mu;
};

// Classic guided filter: a = cov(G, X) / (var(G) + lambda),
// b = mean(X) - a mean(G), output = mean(a) G + mean(b).
Image gif(const Image& input, const Image& guide, const FilterParams& params);

// Weighted guided filter: as gif with lambda replaced by lambda / gamma, where
// gamma comes from edge_aware_wgif on the guide.
Image wgif(const Image& input, const Image& guide, const FilterParams& params);

// Edge fields used by gwgif. gamma and eta derive from the guide, mu from the
// input.
EdgeFieldSet gwgif_edge_fields(const Image& input, const Image& guide,
                               const FilterParams& params);

// a = (cov(G, X) + (lambda / gamma) eta) / (var(G) + lambda / gamma),
// b = mean(X) - a mean(G).
LinearCoefficients gwgif_coefficients(const Image& input, const Image& guide,
                                      const FilterParams& params);

// Gradient-domain weighted guided filter. Coefficients are merged with the
// mu-weighted mean over overlapping windows; a pixel whose windows carry a
// total weight below 1e-12 falls back to the unweighted mean.
Image gwgif(const Image& input, const Image& guide, const FilterParams& params);

Image apply_filter(FilterKind kind, const Image& input, const Image& guide,
                   const FilterParams& params);

}  // namespace gwgif
