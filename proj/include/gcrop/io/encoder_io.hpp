#pragma once

#include <filesystem>
#include <string>

#include "gcrop/train/augment.hpp"
#include "gcrop/train/encoder.hpp"

namespace gcrop::io {

// Self-contained encoder checkpoint: weights plus the preprocessing needed
// to evaluate it (crop size and standardization stats).
struct EncoderFile {
    train::EncoderParams params;
    train::ChannelStats stats;
    double crop_size = 1.0;
    int channels = 3;
};

std::string write_encoder_json(const EncoderFile& file);
EncoderFile parse_encoder_json(const std::string& text);

void save_encoder_file(const EncoderFile& file, const std::filesystem::path& path);
EncoderFile load_encoder_file(const std::filesystem::path& path);

}  // namespace gcrop::io
