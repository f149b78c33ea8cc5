#pragma once

#include <cstdint>
#include <filesystem>
#include <span>

#include "gcrop/io/dataset.hpp"

namespace gcrop::io {

// CIFAR-10 binary batch format: 3073-byte records, one label byte followed
// by 32x32 planar R, G, B planes. Rejects malformed input outright rather
// than returning a partial dataset.
LabeledDataset load_cifar10(std::span<const std::uint8_t> bytes);

LabeledDataset load_cifar10_file(const std::filesystem::path& path);

}  // namespace gcrop::io
