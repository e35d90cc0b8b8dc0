#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "gwgif/applications.hpp"
#include "gwgif/filters.hpp"
#include "gwgif/image.hpp"
#include "gwgif/metrics.hpp"

namespace gwgif {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitIo = 2,
  kExitInvalid = 3,  // dimension or parameter error
};

enum class Command { kFilter, kEnhance, kDenoise, kCompare };

struct RunConfig {
  Command command = Command::kFilter;
  std::filesystem::path input;
  std::filesystem::path guide;       // empty: self-guided
  std::filesystem::path output;      // filter / enhance / denoise result
  std::filesystem::path output_dir;  // compare: optional image dump
  std::filesystem::path report;      // compare: CSV path, empty for stdout
  FilterKind filter = FilterKind::kGwgif;
  FilterParams params;
  double theta = 5.0;
  NoiseSpec noise{0.0, 1};
};

// One row of the compare report.
struct CompareRow {
  FilterKind filter;
  MetricsReport metrics;
  double millis;
};

inline constexpr const char* kCompareCsvHeader = "filter,psnr_db,ssim,avg_gradient,millis";

// Runs all three filters self-guided on `noisy` with shared params. Each
// output is quantized to 8 bits (as it would be written) before scoring
// against `clean`. `outputs`, if non-null, receives the quantized images in
// the order gif, wgif, gwgif.
std::vector<CompareRow> compare_filters(const Image& clean, const Image& noisy,
                                        const FilterParams& params,
                                        std::vector<Image>* outputs = nullptr);

// "%.6g", with "inf" for +infinity.
std::string format_csv_number(double value);
std::string format_compare_csv(const std::vector<CompareRow>& rows);

// Each command reports problems on `err` and returns an ExitCode.
int cmd_filter(const RunConfig& cfg, std::ostream& err);
int cmd_enhance(const RunConfig& cfg, std::ostream& err);
int cmd_denoise(const RunConfig& cfg, std::ostream& err);
int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Parses argv (subcommand first) and runs it.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gwgif
