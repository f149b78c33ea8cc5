#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "gcrop/core/image.hpp"

namespace gcrop::io {

// Binary P6 PPM with maxval 255. Header comments are accepted on load;
// save emits the canonical "P6\n<w> <h>\n255\n" form, so files written
// here round-trip byte-exactly. Pixels scale to [0, 1] on load.
Image load_ppm(std::span<const std::uint8_t> bytes);

// Single-channel images are written as gray RGB.
std::vector<std::uint8_t> save_ppm(const Image& image);

Image load_ppm_file(const std::filesystem::path& path);
void save_ppm_file(const Image& image, const std::filesystem::path& path);

}  // namespace gcrop::io
