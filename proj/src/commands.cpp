#include "gwgif/commands.hpp"

#include <CLI11.hpp>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "gwgif/errors.hpp"
#include "gwgif/image_io.hpp"

namespace gwgif {
namespace {

constexpr std::array<FilterKind, 3> kAllFilters = {FilterKind::kGif, FilterKind::kWgif,
                                                   FilterKind::kGwgif};

// Maps library exceptions onto exit codes.
template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
}

bool require_path(const std::filesystem::path& path, const char* flag, std::ostream& err) {
  if (!path.empty()) return true;
  err << "error: " << flag << " is required\n";
  return false;
}

Image quantized(const Image& img) {
  const std::vector<std::uint8_t> bytes = denormalize_8bit(img);
  return normalize_8bit(bytes, img.width(), img.height());
}

}  // namespace

std::vector<CompareRow> compare_filters(const Image& clean, const Image& noisy,
                                        const FilterParams& params,
                                        std::vector<Image>* outputs) {
  require_same_shape(clean, noisy, "compare_filters");
  std::vector<CompareRow> rows;
  for (FilterKind kind : kAllFilters) {
    const auto start = std::chrono::steady_clock::now();
    const Image filtered = denoise(noisy, params, kind);
    const auto stop = std::chrono::steady_clock::now();
    Image stored = quantized(filtered);
    rows.push_back({kind, evaluate(stored, clean),
                    std::chrono::duration<double, std::milli>(stop - start).count()});
    if (outputs != nullptr) outputs->push_back(std::move(stored));
  }
  return rows;
}

std::string format_csv_number(double value) {
  if (std::isinf(value) && value > 0) return "inf";
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.6g", value);
  return buf.data();
}

std::string format_compare_csv(const std::vector<CompareRow>& rows) {
  std::ostringstream csv;
  csv << kCompareCsvHeader << '\n';
  for (const CompareRow& row : rows) {
    csv << filter_name(row.filter) << ',' << format_csv_number(row.metrics.psnr) << ','
        << format_csv_number(row.metrics.ssim) << ','
        << format_csv_number(row.metrics.avg_gradient) << ',' << format_csv_number(row.millis)
        << '\n';
  }
  return csv.str();
}

int cmd_filter(const RunConfig& cfg, std::ostream& err) {
  if (!require_path(cfg.input, "--input", err) || !require_path(cfg.output, "--output", err)) {
    return kExitUsage;
  }
  return guarded(err, [&] {
    cfg.params.validate();
    const Image input = read_image(cfg.input);
    const Image guide = cfg.guide.empty() ? input : read_image(cfg.guide);
    write_image(cfg.output, apply_filter(cfg.filter, input, guide, cfg.params));
    return kExitOk;
  });
}

int cmd_enhance(const RunConfig& cfg, std::ostream& err) {
  if (!require_path(cfg.input, "--input", err) || !require_path(cfg.output, "--output", err)) {
    return kExitUsage;
  }
  return guarded(err, [&] {
    cfg.params.validate();
    const Image input = read_image(cfg.input);
    write_image(cfg.output, detail_enhance(input, {cfg.params, cfg.theta}, cfg.filter));
    return kExitOk;
  });
}

int cmd_denoise(const RunConfig& cfg, std::ostream& err) {
  if (!require_path(cfg.input, "--input", err) || !require_path(cfg.output, "--output", err)) {
    return kExitUsage;
  }
  return guarded(err, [&] {
    cfg.params.validate();
    Image input = read_image(cfg.input);
    if (cfg.noise.sigma != 0.0) input = add_gaussian_noise(input, cfg.noise);
    write_image(cfg.output, denoise(input, cfg.params, cfg.filter));
    return kExitOk;
  });
}

int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!require_path(cfg.input, "--input", err)) return kExitUsage;
  return guarded(err, [&] {
    cfg.params.validate();
    const Image clean = read_image(cfg.input);
    const Image noisy = cfg.noise.sigma != 0.0 ? add_gaussian_noise(clean, cfg.noise) : clean;
    std::vector<Image> outputs;
    const std::vector<CompareRow> rows = compare_filters(clean, noisy, cfg.params, &outputs);

    if (!cfg.output_dir.empty()) {
      std::error_code ec;
      std::filesystem::create_directories(cfg.output_dir, ec);
      if (ec) throw IoError("cannot create " + cfg.output_dir.string() + ": " + ec.message());
      write_png(cfg.output_dir / "noisy.png", noisy);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        write_png(cfg.output_dir / (std::string(filter_name(rows[i].filter)) + ".png"),
                  outputs[i]);
      }
    }

    const std::string csv = format_compare_csv(rows);
    if (cfg.report.empty()) {
      out << csv;
    } else {
      std::ofstream file(cfg.report, std::ios::binary);
      file << csv;
      if (!file) throw IoError("cannot write report " + cfg.report.string());
    }
    return kExitOk;
  });
}

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  switch (cfg.command) {
    case Command::kFilter:
      return cmd_filter(cfg, err);
    case Command::kEnhance:
      return cmd_enhance(cfg, err);
    case Command::kDenoise:
      return cmd_denoise(cfg, err);
    case Command::kCompare:
      return cmd_compare(cfg, out, err);
  }
  return kExitUsage;
}

namespace {

void add_filter_options(CLI::App& sub, RunConfig& cfg) {
  static const std::map<std::string, FilterKind> kFilterNames = {
      {"gif", FilterKind::kGif}, {"wgif", FilterKind::kWgif}, {"gwgif", FilterKind::kGwgif}};
  FilterParams& p = cfg.params;
  sub.add_option("-r,--radius", p.radius, "Filter window radius")->capture_default_str();
  sub.add_option("-l,--lambda", p.lambda, "Regularization")->capture_default_str();
  sub.add_option("--threshold-factor", p.threshold_factor, "Edge-protection threshold factor")
      ->capture_default_str();
  sub.add_option("-k,--k", p.k, "Weight-map window radius")->capture_default_str();
  sub.add_option("--th-svar", p.th_svar, "Weight-map svar threshold")->capture_default_str();
  sub.add_option("--thre", p.thre, "Weight above the svar threshold")->capture_default_str();
  sub.add_option("--eps", p.eps, "Edge-aware epsilon")->capture_default_str();
  if (cfg.command != Command::kCompare) {
    sub.add_option("-f,--filter", cfg.filter, "gif, wgif or gwgif")
        ->transform(CLI::CheckedTransformer(kFilterNames, CLI::ignore_case));
  }
}

void add_noise_options(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--sigma", cfg.noise.sigma, "Gaussian noise std on the 8-bit scale")
      ->capture_default_str();
  sub.add_option("--seed", cfg.noise.seed, "Noise generator seed")->capture_default_str();
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Guided image filtering: GIF, WGIF and gradient-domain weighted GIF"};
  app.require_subcommand(1);

  RunConfig filter_cfg;
  filter_cfg.command = Command::kFilter;
  filter_cfg.params.radius = 16;
  filter_cfg.params.lambda = 1.0;

  RunConfig enhance_cfg;
  enhance_cfg.command = Command::kEnhance;
  enhance_cfg.params.radius = 16;
  enhance_cfg.params.lambda = 0.04;

  RunConfig denoise_cfg;
  denoise_cfg.command = Command::kDenoise;
  denoise_cfg.params.radius = 9;
  denoise_cfg.params.lambda = 0.1;

  RunConfig compare_cfg = denoise_cfg;
  compare_cfg.command = Command::kCompare;
  compare_cfg.noise.sigma = 25.0;

  CLI::App* filter = app.add_subcommand("filter", "Filter an image with an optional guide");
  filter->add_option("-i,--input", filter_cfg.input, "Input image (PNG or PGM)")->required();
  filter->add_option("-g,--guide", filter_cfg.guide, "Guide image (default: the input)");
  filter->add_option("-o,--output", filter_cfg.output, "Output image")->required();
  add_filter_options(*filter, filter_cfg);

  CLI::App* enhance = app.add_subcommand("enhance", "Amplify the detail layer");
  enhance->add_option("-i,--input", enhance_cfg.input, "Input image")->required();
  enhance->add_option("-o,--output", enhance_cfg.output, "Output image")->required();
  enhance->add_option("--theta", enhance_cfg.theta, "Detail amplification")
      ->capture_default_str();
  add_filter_options(*enhance, enhance_cfg);

  CLI::App* denoise_cmd = app.add_subcommand("denoise", "Self-guided denoising");
  denoise_cmd->add_option("-i,--input", denoise_cfg.input, "Input image")->required();
  denoise_cmd->add_option("-o,--output", denoise_cfg.output, "Output image")->required();
  add_filter_options(*denoise_cmd, denoise_cfg);
  add_noise_options(*denoise_cmd, denoise_cfg);

  CLI::App* compare = app.add_subcommand("compare", "Score all three filters as denoisers");
  compare->add_option("-i,--input", compare_cfg.input, "Clean reference image")->required();
  compare->add_option("--report", compare_cfg.report, "CSV output (default: stdout)");
  compare->add_option("--output-dir", compare_cfg.output_dir, "Directory for result images");
  add_filter_options(*compare, compare_cfg);
  add_noise_options(*compare, compare_cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  if (filter->parsed()) return run_command(filter_cfg, out, err);
  if (enhance->parsed()) return run_command(enhance_cfg, out, err);
  if (denoise_cmd->parsed()) return run_command(denoise_cfg, out, err);
  return run_command(compare_cfg, out, err);
}

}  // namespace gwgif
