#include "gwgif/filters.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "gwgif/errors.hpp"
#include "gwgif/gradient.hpp"
#include "gwgif/window_stats.hpp"

namespace gwgif {
namespace {

constexpr double kMinWeightSum = 1e-12;

struct GuideStats {
  Image mean_input;
  Image mean_guide;
  Image cov;  // cov(G, X)
  Image var;  // var(G)
};

GuideStats guide_stats(const Image& input, const Image& guide, WindowSpec window) {
  return {window_mean(input, window), window_mean(guide, window),
          window_covariance(guide, input, window), window_variance(guide, window)};
}

// Solves the per-window ridge regression. `regularization(i)` is the penalty
// weight at pixel i and `target(i)` the value `a` is pulled towards. A window
// with zero denominator (flat guide and no penalty) gets a = 0.
template <typename Regularization, typename Target>
LinearCoefficients solve_windows(const GuideStats& s, Regularization regularization,
                                 Target target) {
  LinearCoefficients c{s.var, s.mean_input};
  auto a = c.a.pixels();
  auto b = c.b.pixels();
  auto cov = s.cov.pixels();
  auto var = s.var.pixels();
  auto mean_g = s.mean_guide.pixels();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double reg = regularization(i);
    const double denom = var[i] + reg;
    a[i] = denom > 0.0 ? (cov[i] + reg * target(i)) / denom : 0.0;
    b[i] -= a[i] * mean_g[i];
  }
  return c;
}

Image combine(const Image& mean_a, const Image& guide, const Image& mean_b) {
  Image out = guide;
  auto o = out.pixels();
  auto a = mean_a.pixels();
  auto b = mean_b.pixels();
  for (std::size_t i = 0; i < o.size(); ++i) o[i] = a[i] * o[i] + b[i];
  return out;
}

Image aggregate_mean(const LinearCoefficients& c, const Image& guide, WindowSpec window) {
  return combine(window_mean(c.a, window), guide, window_mean(c.b, window));
}

Image aggregate_weighted(const LinearCoefficients& c, const Image& guide, const Image& mu,
                         WindowSpec window) {
  // Weighted means are formed around a reference value so that uniform
  // coefficients come back exactly.
  const double shift_a = c.a(0, 0);
  const double shift_b = c.b(0, 0);
  Image weighted_a = c.a;
  Image weighted_b = c.b;
  {
    auto wa = weighted_a.pixels();
    auto wb = weighted_b.pixels();
    auto m = mu.pixels();
    for (std::size_t i = 0; i < wa.size(); ++i) {
      wa[i] = (wa[i] - shift_a) * m[i];
      wb[i] = (wb[i] - shift_b) * m[i];
    }
  }
  Image sum_a = box_sum(weighted_a, window);
  Image sum_b = box_sum(weighted_b, window);
  const Image sum_mu = box_sum(mu, window);

  // Only materialize the unweighted means if some pixel needs them.
  bool needs_fallback = false;
  for (double v : sum_mu.pixels()) needs_fallback |= !(std::abs(v) >= kMinWeightSum);
  std::optional<Image> mean_a;
  std::optional<Image> mean_b;
  if (needs_fallback) {
    mean_a = window_mean(c.a, window);
    mean_b = window_mean(c.b, window);
  }

  auto sa = sum_a.pixels();
  auto sb = sum_b.pixels();
  auto sm = sum_mu.pixels();
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (std::abs(sm[i]) >= kMinWeightSum) {
      sa[i] = shift_a + sa[i] / sm[i];
      sb[i] = shift_b + sb[i] / sm[i];
    } else {
      sa[i] = mean_a->pixels()[i];
      sb[i] = mean_b->pixels()[i];
    }
  }
  return combine(sum_a, guide, sum_b);
}

void check_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw ParameterError(std::string(name) + " must be finite");
}

}  // namespace

void FilterParams::validate() const {
  check_finite(lambda, "lambda");
  check_finite(threshold_factor, "threshold_factor");
  check_finite(th_svar, "th_svar");
  check_finite(thre, "thre");
  check_finite(eps, "eps");
  if (radius < 1) throw ParameterError("radius must be >= 1, got " + std::to_string(radius));
  if (k < 1) throw ParameterError("k must be >= 1, got " + std::to_string(k));
  if (lambda < 0.0) throw ParameterError("lambda must be >= 0, got " + std::to_string(lambda));
  if (!(th_svar > 0.0)) throw ParameterError("th_svar must be > 0");
  if (!(eps > 0.0)) throw ParameterError("eps must be > 0");
}

std::string_view filter_name(FilterKind kind) {
  switch (kind) {
    case FilterKind::kGif:
      return "gif";
    case FilterKind::kWgif:
      return "wgif";
    case FilterKind::kGwgif:
      return "gwgif";
  }
  return "unknown";
}

std::optional<FilterKind> parse_filter_kind(std::string_view name) {
  for (FilterKind kind : {FilterKind::kGif, FilterKind::kWgif, FilterKind::kGwgif}) {
    if (filter_name(kind) == name) return kind;
  }
  return std::nullopt;
}

Image gif(const Image& input, const Image& guide, const FilterParams& params) {
  params.validate();
  require_same_shape(input, guide, "gif");
  const WindowSpec window(params.radius);
  const GuideStats stats = guide_stats(input, guide, window);
  const double lambda = params.lambda;
  const LinearCoefficients c = solve_windows(
      stats, [lambda](std::size_t) { return lambda; }, [](std::size_t) { return 0.0; });
  return aggregate_mean(c, guide, window);
}

Image wgif(const Image& input, const Image& guide, const FilterParams& params) {
  params.validate();
  require_same_shape(input, guide, "wgif");
  const WindowSpec window(params.radius);
  const GuideStats stats = guide_stats(input, guide, window);
  const Image gamma = edge_aware_wgif(guide, params.eps);
  const double lambda = params.lambda;
  auto g = gamma.pixels();
  const LinearCoefficients c = solve_windows(
      stats, [lambda, g](std::size_t i) { return lambda / g[i]; },
      [](std::size_t) { return 0.0; });
  return aggregate_mean(c, guide, window);
}

EdgeFieldSet gwgif_edge_fields(const Image& input, const Image& guide,
                               const FilterParams& params) {
  params.validate();
  require_same_shape(input, guide, "gwgif_edge_fields");
  const GradientField grad = gradient_4dir(guide);
  Image zeta = edge_aware_zeta(guide, grad, WindowSpec(params.radius));
  Image gamma = gamma_from_zeta(zeta, params.eps);
  return {std::move(zeta), std::move(gamma), edge_protect_eta(grad, params.threshold_factor),
          weight_map_mu(input, WindowSpec(params.k), params.th_svar, params.thre)};
}

namespace {

LinearCoefficients gwgif_solve(const Image& input, const Image& guide,
                               const FilterParams& params, const EdgeFieldSet& fields) {
  const GuideStats stats = guide_stats(input, guide, WindowSpec(params.radius));
  const double lambda = params.lambda;
  auto gamma = fields.gamma.pixels();
  auto eta = fields.eta.pixels();
  return solve_windows(
      stats, [lambda, gamma](std::size_t i) { return lambda / gamma[i]; },
      [eta](std::size_t i) { return eta[i]; });
}

}  // namespace

LinearCoefficients gwgif_coefficients(const Image& input, const Image& guide,
                                      const FilterParams& params) {
  return gwgif_solve(input, guide, params, gwgif_edge_fields(input, guide, params));
}

Image gwgif(const Image& input, const Image& guide, const FilterParams& params) {
  const EdgeFieldSet fields = gwgif_edge_fields(input, guide, params);
  const LinearCoefficients c = gwgif_solve(input, guide, params, fields);
  return aggregate_weighted(c, guide, fields.mu, WindowSpec(params.radius));
}

Image apply_filter(FilterKind kind, const Image& input, const Image& guide,
                   const FilterParams& params) {
  switch (kind) {
    case FilterKind::kGif:
      return gif(input, guide, params);
    case FilterKind::kWgif:
      return wgif(input, guide, params);
    case FilterKind::kGwgif:
      return gwgif(input, guide, params);
  }
  throw ParameterError("unknown filter kind");
}

}  // namespace gwgif
