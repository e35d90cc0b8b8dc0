#include "gwgif/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "gwgif/errors.hpp"

namespace gwgif {
namespace {

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("failed reading " + path.string());
  return bytes;
}

bool is_png(const std::vector<std::uint8_t>& bytes) {
  return bytes.size() >= 8 && png_sig_cmp(bytes.data(), 0, 8) == 0;
}

Image decode_png(const std::vector<std::uint8_t>& bytes, const std::filesystem::path& path) {
  png_image png{};
  png.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&png, bytes.data(), bytes.size())) {
    throw IoError("invalid PNG " + path.string() + ": " + png.message);
  }
  const bool color = (png.format & PNG_FORMAT_FLAG_COLOR) != 0;
  png.format = color ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  const int channels = color ? 3 : 1;
  std::vector<std::uint8_t> pixels(PNG_IMAGE_SIZE(png));
  if (!png_image_finish_read(&png, nullptr, pixels.data(), 0, nullptr)) {
    const std::string message = png.message;
    png_image_free(&png);
    throw IoError("cannot decode PNG " + path.string() + ": " + message);
  }
  const int width = static_cast<int>(png.width);
  const int height = static_cast<int>(png.height);
  std::vector<double> data(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
  for (std::size_t i = 0; i < data.size(); ++i) {
    double sum = 0.0;
    for (int c = 0; c < channels; ++c) sum += pixels[i * channels + c];
    data[i] = sum / (255.0 * channels);
  }
  return Image(width, height, std::move(data));
}

// Reads one whitespace-delimited PGM header integer, skipping '#' comments.
int pgm_header_int(const std::vector<std::uint8_t>& bytes, std::size_t& pos,
                   const std::filesystem::path& path) {
  while (pos < bytes.size()) {
    if (bytes[pos] == '#') {
      while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
    } else if (std::isspace(bytes[pos])) {
      ++pos;
    } else {
      break;
    }
  }
  long value = 0;
  const std::size_t start = pos;
  while (pos < bytes.size() && std::isdigit(bytes[pos]) && value <= 1'000'000) {
    value = value * 10 + (bytes[pos++] - '0');
  }
  if (pos == start || value > 1'000'000) throw IoError("malformed PGM header in " + path.string());
  return static_cast<int>(value);
}

Image decode_pgm(const std::vector<std::uint8_t>& bytes, const std::filesystem::path& path) {
  std::size_t pos = 2;
  const int width = pgm_header_int(bytes, pos, path);
  const int height = pgm_header_int(bytes, pos, path);
  const int maxval = pgm_header_int(bytes, pos, path);
  if (width < 1 || height < 1) throw IoError("PGM has empty dimensions: " + path.string());
  if (maxval < 1 || maxval > 255) {
    throw IoError("unsupported PGM maxval " + std::to_string(maxval) + " in " + path.string());
  }
  if (pos >= bytes.size() || !std::isspace(bytes[pos])) {
    throw IoError("malformed PGM header in " + path.string());
  }
  ++pos;
  const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  if (bytes.size() - pos < count) throw IoError("truncated PGM data in " + path.string());
  std::vector<double> data(count);
  for (std::size_t i = 0; i < count; ++i) data[i] = bytes[pos + i] / static_cast<double>(maxval);
  return Image(width, height, std::move(data));
}

bool has_pgm_extension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".pgm";
}

}  // namespace

Image read_image(const std::filesystem::path& path) {
  const std::vector<std::uint8_t> bytes = read_file(path);
  if (is_png(bytes)) return decode_png(bytes, path);
  if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '5') return decode_pgm(bytes, path);
  throw IoError("unrecognized image format (expected PNG or binary PGM): " + path.string());
}

void write_png(const std::filesystem::path& path, const Image& img) {
  const std::vector<std::uint8_t> pixels = denormalize_8bit(img);
  png_image png{};
  png.version = PNG_IMAGE_VERSION;
  png.width = static_cast<png_uint_32>(img.width());
  png.height = static_cast<png_uint_32>(img.height());
  png.format = PNG_FORMAT_GRAY;
  if (!png_image_write_to_file(&png, path.c_str(), 0, pixels.data(), 0, nullptr)) {
    throw IoError("cannot write PNG " + path.string() + ": " + png.message);
  }
}

void write_pgm(const std::filesystem::path& path, const Image& img) {
  const std::vector<std::uint8_t> pixels = denormalize_8bit(img);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << "P5\n" << img.width() << ' ' << img.height() << "\n255\n";
  out.write(reinterpret_cast<const char*>(pixels.data()),
            static_cast<std::streamsize>(pixels.size()));
  if (!out) throw IoError("failed writing " + path.string());
}

void write_image(const std::filesystem::path& path, const Image& img) {
  if (has_pgm_extension(path)) {
    write_pgm(path, img);
  } else {
    write_png(path, img);
  }
}

}  // namespace gwgif
