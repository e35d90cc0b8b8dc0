#include "gwgif/commands.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "gwgif/image_io.hpp"

namespace gwgif {
namespace {

namespace fs = std::filesystem;

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::string> Split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(s);
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

class CommandsTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gwgif_cmd_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    const Image lena = read_image(GWGIF_DATA_DIR "/lena_gray.png");
    natural_ = Image(48, 40);
    for (int y = 0; y < 40; ++y)
      for (int x = 0; x < 48; ++x) natural_(x, y) = lena(240 + x, 250 + y);
    write_png(Path("in.png"), natural_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path Path(const std::string& name) const { return dir_ / name; }

  int Cli(std::vector<std::string> args) {
    args.insert(args.begin(), "gwgif");
    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    out_.str("");
    err_.str("");
    return cli_main(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  fs::path dir_;
  Image natural_{1, 1};
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CommandsTest, FilterConstantPngIsByteIdentical) {
  write_png(Path("const.png"), Image(33, 21, 97.0 / 255.0));
  for (const char* filter : {"gif", "wgif", "gwgif"}) {
    const std::string out = std::string("out_") + filter + ".png";
    ASSERT_EQ(Cli({"filter", "-i", Path("const.png").string(), "-o", Path(out).string(), "-f",
                   filter, "-r", "5", "-l", "0.3"}),
              kExitOk)
        << err_.str();
    EXPECT_EQ(ReadFile(Path(out)), ReadFile(Path("const.png"))) << filter;
  }
}

TEST_F(CommandsTest, ZeroLambdaSelfGuidedIsIdentityWithinOneLevel) {
  for (const char* filter : {"gif", "wgif", "gwgif"}) {
    ASSERT_EQ(Cli({"filter", "-i", Path("in.png").string(), "-o", Path("id.png").string(), "-f",
                   filter, "-l", "0", "-r", "4"}),
              kExitOk);
    const Image out = read_image(Path("id.png"));
    for (std::size_t i = 0; i < out.size(); ++i) {
      ASSERT_LE(std::abs(out.pixels()[i] - natural_.pixels()[i]) * 255.0, 1.0 + 1e-9) << filter;
    }
  }
}

TEST_F(CommandsTest, FilterWithGuideAndPgmOutput) {
  write_pgm(Path("guide.pgm"), Image(48, 40, 0.5));
  ASSERT_EQ(Cli({"filter", "-i", Path("in.png").string(), "-g", Path("guide.pgm").string(), "-o",
                 Path("out.pgm").string(), "-r", "3"}),
            kExitOk);
  EXPECT_EQ(ReadFile(Path("out.pgm")).substr(0, 2), "P5");
  EXPECT_EQ(read_image(Path("out.pgm")).width(), 48);
}

TEST_F(CommandsTest, RepeatedRunsAreBitIdentical) {
  for (const char* cmd : {"filter", "enhance", "denoise"}) {
    std::vector<std::string> base = {cmd, "-i", Path("in.png").string(), "-r", "4"};
    auto a = base;
    a.insert(a.end(), {"-o", Path("a.png").string()});
    auto b = base;
    b.insert(b.end(), {"-o", Path("b.png").string()});
    if (std::string(cmd) == "denoise") {
      a.insert(a.end(), {"--sigma", "20", "--seed", "9"});
      b.insert(b.end(), {"--sigma", "20", "--seed", "9"});
    }
    ASSERT_EQ(Cli(a), kExitOk) << err_.str();
    ASSERT_EQ(Cli(b), kExitOk) << err_.str();
    EXPECT_EQ(ReadFile(Path("a.png")), ReadFile(Path("b.png"))) << cmd;
  }
}

TEST_F(CommandsTest, EnhanceWithZeroThetaReproducesInput) {
  ASSERT_EQ(Cli({"enhance", "-i", Path("in.png").string(), "-o", Path("e.png").string(),
                 "--theta", "0"}),
            kExitOk);
  EXPECT_EQ(read_image(Path("e.png")), natural_);
}

TEST_F(CommandsTest, CompareWithoutNoiseAndZeroLambdaIsInfinite) {
  ASSERT_EQ(Cli({"compare", "-i", Path("in.png").string(), "--sigma", "0", "-l", "0", "-r", "3"}),
            kExitOk)
      << err_.str();
  const std::vector<std::string> lines = Split(out_.str(), '\n');
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0], kCompareCsvHeader);
  const char* names[] = {"gif", "wgif", "gwgif"};
  for (int i = 0; i < 3; ++i) {
    const std::vector<std::string> cells = Split(lines[i + 1], ',');
    ASSERT_EQ(cells.size(), 5u);
    EXPECT_EQ(cells[0], names[i]);
    EXPECT_EQ(cells[1], "inf");
    EXPECT_EQ(cells[2], "1");
  }
}

TEST_F(CommandsTest, CompareReportParsesAndImagesAreWritten) {
  ASSERT_EQ(Cli({"compare", "-i", Path("in.png").string(), "--report", Path("r.csv").string(),
                 "--output-dir", Path("imgs").string(), "-r", "3", "--seed", "4"}),
            kExitOk)
      << err_.str();
  EXPECT_TRUE(out_.str().empty());
  const std::vector<std::string> lines = Split(ReadFile(Path("r.csv")), '\n');
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(Split(lines[0], ','),
            (std::vector<std::string>{"filter", "psnr_db", "ssim", "avg_gradient", "millis"}));
  for (int i = 1; i < 4; ++i) {
    const std::vector<std::string> cells = Split(lines[i], ',');
    ASSERT_EQ(cells.size(), 5u);
    for (int c = 1; c < 5; ++c) {
      std::size_t used = 0;
      const double v = std::stod(cells[c], &used);
      EXPECT_EQ(used, cells[c].size());
      EXPECT_TRUE(std::isfinite(v));
    }
  }
  for (const char* name : {"noisy.png", "gif.png", "wgif.png", "gwgif.png"}) {
    EXPECT_TRUE(fs::exists(Path("imgs") / name)) << name;
  }
}

TEST_F(CommandsTest, CompareRowsMatchLibraryScoring) {
  const Image noisy = add_gaussian_noise(natural_, NoiseSpec{25.0, 1});
  FilterParams p;
  p.radius = 3;
  p.lambda = 0.1;
  std::vector<Image> outputs;
  const std::vector<CompareRow> rows = compare_filters(natural_, noisy, p, &outputs);
  ASSERT_EQ(rows.size(), 3u);
  ASSERT_EQ(outputs.size(), 3u);
  for (int i = 0; i < 3; ++i) {
    const Image expected = denoise(noisy, p, rows[i].filter);
    for (std::size_t j = 0; j < expected.size(); ++j) {
      ASSERT_EQ(outputs[i].pixels()[j],
                static_cast<double>(denormalize_8bit(expected)[j]) / 255.0);
    }
    EXPECT_EQ(rows[i].metrics.psnr, psnr(outputs[i], natural_));
    EXPECT_GE(rows[i].millis, 0.0);
  }
}

TEST(CsvFormatTest, NumberFormatting) {
  EXPECT_EQ(format_csv_number(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_csv_number(25.3712345), "25.3712");
  EXPECT_EQ(format_csv_number(0.000123456789), "0.000123457");
  EXPECT_EQ(format_csv_number(1.0), "1");
}

TEST_F(CommandsTest, MissingInputFileIsIoError) {
  EXPECT_EQ(Cli({"filter", "-i", Path("nope.png").string(), "-o", Path("o.png").string()}),
            kExitIo);
  EXPECT_NE(err_.str().find("error"), std::string::npos);
}

TEST_F(CommandsTest, UnwritableOutputIsIoError) {
  EXPECT_EQ(Cli({"filter", "-i", Path("in.png").string(), "-o",
                 Path("missing_dir/o.png").string(), "-r", "2"}),
            kExitIo);
}

TEST_F(CommandsTest, GuideShapeMismatchIsInvalid) {
  write_png(Path("small.png"), Image(10, 10, 0.5));
  EXPECT_EQ(Cli({"filter", "-i", Path("in.png").string(), "-g", Path("small.png").string(), "-o",
                 Path("o.png").string()}),
            kExitInvalid);
}

TEST_F(CommandsTest, InvalidParametersAreRejected) {
  EXPECT_EQ(Cli({"filter", "-i", Path("in.png").string(), "-o", Path("o.png").string(), "-r",
                 "0"}),
            kExitInvalid);
  EXPECT_EQ(Cli({"filter", "-i", Path("in.png").string(), "-o", Path("o.png").string(), "-l",
                 "-1"}),
            kExitInvalid);
  EXPECT_EQ(Cli({"denoise", "-i", Path("in.png").string(), "-o", Path("o.png").string(),
                 "--sigma", "-3"}),
            kExitInvalid);
  EXPECT_FALSE(fs::exists(Path("o.png")));
}

TEST_F(CommandsTest, UsageErrors) {
  EXPECT_EQ(Cli({}), kExitUsage);
  EXPECT_EQ(Cli({"bogus"}), kExitUsage);
  EXPECT_EQ(Cli({"filter", "-i", Path("in.png").string()}), kExitUsage);
  EXPECT_EQ(Cli({"filter", "-i", Path("in.png").string(), "-o", "x.png", "-f", "median"}),
            kExitUsage);
  EXPECT_EQ(Cli({"filter", "-i", Path("in.png").string(), "-o", "x.png", "-r", "abc"}),
            kExitUsage);
  EXPECT_EQ(Cli({"compare", "-i", Path("in.png").string(), "-f", "gif"}), kExitUsage);
  EXPECT_EQ(Cli({"--help"}), kExitOk);
  EXPECT_NE(out_.str().find("compare"), std::string::npos);
}

TEST_F(CommandsTest, RunCommandRequiresPaths) {
  RunConfig cfg;
  cfg.command = Command::kFilter;
  cfg.input = Path("in.png");
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(run_command(cfg, out, err), kExitUsage);
  cfg.command = Command::kCompare;
  cfg.input.clear();
  EXPECT_EQ(run_command(cfg, out, err), kExitUsage);
}

TEST_F(CommandsTest, FilterNameIsCaseInsensitive) {
  EXPECT_EQ(Cli({"filter", "-i", Path("in.png").string(), "-o", Path("o.png").string(), "-f",
                 "GWGIF", "-r", "2"}),
            kExitOk);
}

TEST_F(CommandsTest, InstalledBinaryRuns) {
  const std::string cmd = std::string("\"") + GWGIF_TOOL_PATH + "\" denoise -i \"" +
                          Path("in.png").string() + "\" -o \"" + Path("bin.png").string() +
                          "\" -r 3 --sigma 10 > /dev/null 2>&1";
  EXPECT_EQ(std::system(cmd.c_str()), 0);
  EXPECT_TRUE(fs::exists(Path("bin.png")));
  const std::string bad = std::string("\"") + GWGIF_TOOL_PATH + "\" filter -i \"" +
                          Path("none.png").string() + "\" -o x.png > /dev/null 2>&1";
  const int status = std::system(bad.c_str());
  EXPECT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), kExitIo);
}

}  // namespace
}  // namespace gwgif
