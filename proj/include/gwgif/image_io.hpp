#pragma once

#include <filesystem>

#include "gwgif/image.hpp"

namespace gwgif {

// Reads an 8-bit PNG (any color type) or a binary PGM (P5, maxval <= 255)
// and returns intensities in [0, 1]. The format is detected from the file
// signature. Color pixels become the mean of their R, G and B channels.
// Translucent pixels are composited onto black by libpng; fully opaque alpha
// has no effect. Throws IoError on unreadable or malformed files.
Image read_image(const std::filesystem::path& path);

// Writes an 8-bit grayscale file, quantized with denormalize_8bit. A ".pgm"
// extension (any case) selects binary PGM; anything else is PNG.
void write_image(const std::filesystem::path& path, const Image& img);

void write_png(const std::filesystem::path& path, const Image& img);
void write_pgm(const std::filesystem::path& path, const Image& img);

}  // namespace gwgif
